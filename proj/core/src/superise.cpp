#include "grb/superise.hpp"

namespace grb {

namespace {

int scalarProductMod2(const MultiWeight& a, const MultiWeight& b) {
    int s = 0;
    for (int i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s % 2;
}

} // namespace

SignCheckResult z2kSignCheck(const Presentation& D) {
    if (!D.isKFoldVB())
        throw SpecError("sign check needs a k-fold vector bundle (weights in {0,1}^k)");
    SignCheckResult out;
    for (auto& t : D.transitions) {
        for (auto& [key, law] : t.laws) {
            for (auto& [m, coeff] : law.terms()) {
                ++out.monomialsScanned;
                std::vector<CoordSymbol> fibres;
                for (auto& [cs, e] : m.coords)
                    if (cs.kind() == CoordKind::Fibre) fibres.push_back(cs);
                for (size_t i = 0; i < fibres.size(); ++i)
                    for (size_t j = i + 1; j < fibres.size(); ++j) {
                        if (scalarProductMod2(fibres[i].weight, fibres[j].weight) != 0) {
                            out.pass = false;
                            out.violations.push_back(
                                {t.from + "->" + t.to, m, fibres[i], fibres[j]});
                        }
                    }
            }
        }
    }
    return out;
}

SuperisedPresentation superise(const Presentation& D) {
    SignCheckResult check = z2kSignCheck(D);
    if (!check.pass) {
        std::string detail;
        if (!check.violations.empty())
            detail = check.violations.front().u.str() + " vs " +
                     check.violations.front().v.str();
        throw SpecError("superise refused: non-commuting coordinates co-occur (" + detail + ")");
    }
    SuperisedPresentation out;
    out.D = D;
    for (auto& f : D.families) {
        out.degrees[f.key()] = f.weight.comp;
        out.parities[f.key()] = f.weight.total() % 2;
    }
    for (auto& f : D.families) {
        if (f.weight.isZero()) continue;
        for (auto& g : D.families) {
            if (g.weight.isZero()) continue;
            int sign = scalarProductMod2(f.weight, g.weight) == 0 ? 1 : -1;
            out.commutationTable.emplace_back(f.coord(1).str(), g.coord(1).str(), sign);
        }
    }
    return out;
}

NaiveSuperisationDemo naiveQuadraticSuperisation(const Presentation& F2,
                                                 const CoordSymbol& topCoordinate) {
    if (F2.transitions.empty()) throw SpecError("demo needs a transition");
    const Poly& law = F2.transitions.front().lawOf(topCoordinate);

    NaiveSuperisationDemo demo;
    for (auto& [m, c] : law.terms()) {
        std::vector<CoordSymbol> odd;
        for (auto& [cs, e] : m.coords)
            if (cs.weight.total() % 2 == 1)
                for (int r = 0; r < e; ++r) odd.push_back(cs);
        if (odd.size() != 2) continue;
        Poly t;
        t.addTerm(m, c);
        demo.quadratic += t;

        // The symmetrised storage merged both index orders of the tensor,
        // so the odd reading splits the coefficient over both orderings.
        // Normal-order each with the anticommutation sign and re-sum.
        Rational net(0);
        if (odd[0].key() == odd[1].key()) {
            // square of an odd coordinate
            net = Rational(0);
        } else {
            Rational half = c * Rational(1, 2);
            net += half;        // ascending order as stored
            net += -half;       // the transposed reading picks up a sign
        }
        if (!net.isZero()) {
            Poly kept;
            kept.addTerm(m, net);
            demo.survived += kept;
        }
    }
    demo.lost = demo.quadratic - demo.survived;
    return demo;
}

} // namespace grb
