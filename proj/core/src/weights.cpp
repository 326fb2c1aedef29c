#include "grb/weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grb {

int MultiWeight::total() const {
    return std::accumulate(comp.begin(), comp.end(), 0);
}

bool MultiWeight::allAtMostOne() const {
    return std::all_of(comp.begin(), comp.end(), [](int w) { return w == 0 || w == 1; });
}

MultiWeight& MultiWeight::operator+=(const MultiWeight& o) {
    if (comp.size() != o.comp.size())
        throw std::invalid_argument("multiweight arity mismatch");
    for (size_t i = 0; i < comp.size(); ++i) comp[i] += o.comp[i];
    return *this;
}

MultiWeight MultiWeight::scaled(int k) const {
    MultiWeight r = *this;
    for (int& c : r.comp) c *= k;
    return r;
}

MultiWeight MultiWeight::appended(int bit) const {
    MultiWeight r = *this;
    r.comp.push_back(bit);
    return r;
}

std::string MultiWeight::str() const {
    std::string s = "(";
    for (size_t i = 0; i < comp.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(comp[i]);
    }
    return s + ")";
}

WeightCombo WeightCombo::unit(int n, int s) {
    std::vector<long long> a(n, 0);
    a.at(s) = 1;
    return WeightCombo(a);
}

WeightCombo WeightCombo::total(int n) {
    return WeightCombo(std::vector<long long>(n, 1));
}

WeightCombo WeightCombo::operator-() const {
    WeightCombo r = *this;
    for (auto& c : r.coeff) c = -c;
    return r;
}

bool WeightCombo::allNonNegative() const {
    return std::all_of(coeff.begin(), coeff.end(), [](long long a) { return a >= 0; });
}

long long WeightCombo::weightOf(const MultiWeight& w) const {
    if (w.size() != size())
        throw std::invalid_argument("weight combo arity mismatch");
    long long s = 0;
    for (int i = 0; i < size(); ++i) s += coeff[i] * w[i];
    return s;
}

Perm permIdentity(int k) {
    Perm g(k);
    std::iota(g.begin(), g.end(), 0);
    return g;
}

Perm permCompose(const Perm& g1, const Perm& g2) {
    Perm r(g2.size());
    for (size_t i = 0; i < g2.size(); ++i) r[i] = g1[g2[i]];
    return r;
}

Perm permInverse(const Perm& g) {
    Perm r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[g[i]] = static_cast<int>(i);
    return r;
}

Perm permTransposition(int k, int i, int j) {
    Perm g = permIdentity(k);
    std::swap(g[i], g[j]);
    return g;
}

std::vector<Perm> allPerms(int k) {
    Perm g = permIdentity(k);
    std::vector<Perm> out;
    do {
        out.push_back(g);
    } while (std::next_permutation(g.begin(), g.end()));
    return out;
}

bool isPerm(const Perm& g) {
    Perm s = g;
    std::sort(s.begin(), s.end());
    return s == permIdentity(static_cast<int>(g.size()));
}

std::string permStr(const Perm& g) {
    std::string s = "(";
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i] + 1);
    }
    return s + ")";
}

std::vector<int> epsAct(const std::vector<int>& eps, const Perm& g) {
    std::vector<int> r(eps.size());
    for (size_t i = 0; i < eps.size(); ++i) r[i] = eps[g[i]];
    return r;
}

} // namespace grb
