#include "grb/bivector.hpp"

#include <stdexcept>

namespace grb {

Bivector::Bivector(std::vector<CoordSymbol> coords) : chart(std::move(coords)) {
    comp.assign(chart.size(), std::vector<Poly>(chart.size()));
}

void Bivector::set(int u, int v, const Poly& p) {
    comp[u][v] = p;
    comp[v][u] = -p;
}

bool Bivector::isZero() const {
    for (auto& row : comp)
        for (auto& p : row)
            if (!p.isZero()) return false;
    return true;
}

Bivector operator-(const Bivector& a, const Bivector& b) {
    if (a.chart != b.chart) throw std::invalid_argument("bivector charts differ");
    Bivector r = a;
    for (int i = 0; i < r.dim(); ++i)
        for (int j = 0; j < r.dim(); ++j) r.comp[i][j] -= b.comp[i][j];
    return r;
}

Bivector scale(const Bivector& a, const Rational& c) {
    Bivector r = a;
    for (auto& row : r.comp)
        for (auto& p : row) p = p.scaled(c);
    return r;
}

std::vector<std::tuple<int, int, int, Poly>> schoutenJacobiator(const Bivector& P) {
    std::vector<std::tuple<int, int, int, Poly>> bad;
    int n = P.dim();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                Poly j;
                for (int d = 0; d < n; ++d) {
                    j += P.comp[d][a] * formalPartial(P.comp[b][c], P.chart[d]);
                    j += P.comp[d][b] * formalPartial(P.comp[c][a], P.chart[d]);
                    j += P.comp[d][c] * formalPartial(P.comp[a][b], P.chart[d]);
                }
                if (!j.isZero()) bad.emplace_back(a, b, c, j);
            }
    return bad;
}

Bivector lieAlongWeights(const Bivector& P, const std::vector<int>& weights) {
    if (weights.size() != P.chart.size())
        throw std::invalid_argument("weight list does not match chart");
    Bivector r(P.chart);
    int n = P.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Poly v;
            for (int u = 0; u < n; ++u) {
                if (weights[u] == 0) continue;
                v += (Poly::coordinate(P.chart[u]) * formalPartial(P.comp[a][b], P.chart[u]))
                         .scaled(Rational(weights[u]));
            }
            v -= P.comp[a][b].scaled(Rational(weights[a] + weights[b]));
            r.comp[a][b] = std::move(v);
        }
    return r;
}

Bivector pushforward(const Bivector& P, const std::vector<CoordSymbol>& targetChart,
                     const Assignment& pullbackOfTarget, const Assignment& sourceInTarget) {
    Bivector r(targetChart);
    int m = static_cast<int>(targetChart.size());
    int n = P.dim();
    for (int u = 0; u < m; ++u) {
        auto pu = pullbackOfTarget.find(targetChart[u].key());
        if (pu == pullbackOfTarget.end())
            throw std::invalid_argument("pushforward: no pullback for " + targetChart[u].str());
        for (int v = u + 1; v < m; ++v) {
            auto pv = pullbackOfTarget.find(targetChart[v].key());
            if (pv == pullbackOfTarget.end())
                throw std::invalid_argument("pushforward: no pullback for " +
                                            targetChart[v].str());
            Poly comp;
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (P.comp[c][d].isZero()) continue;
                    comp += P.comp[c][d] * formalPartial(pu->second, P.chart[c]) *
                            formalPartial(pv->second, P.chart[d]);
                }
            r.set(u, v, substitute(comp, sourceInTarget));
        }
    }
    return r;
}

} // namespace grb
