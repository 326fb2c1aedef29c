#include "grb/functors.hpp"

#include <algorithm>
#include <set>

namespace grb {

namespace {

CoordSymbol appendLift(const CoordSymbol& c, int bit) {
    CoordSymbol r = c;
    r.lifts.push_back(bit);
    r.weight = r.weight.appended(bit);
    return r;
}

} // namespace

Presentation tangentLift(const Presentation& p) {
    Presentation out;
    out.name = "T(" + p.name + ")";
    out.ncomp = p.ncomp + 1;
    out.baseFamilyName = p.baseFamilyName;
    out.charts = p.charts;
    out.fnTable = p.fnTable;

    for (auto& f : p.families) {
        CoordFamily f0 = f;
        f0.lifts.push_back(0);
        f0.weight = f.weight.appended(0);
        out.families.push_back(f0);
    }
    for (auto& f : p.families) {
        CoordFamily f1 = f;
        f1.lifts.push_back(1);
        f1.weight = f.weight.appended(1);
        out.families.push_back(f1);
    }

    auto lift0 = [](const CoordSymbol& c) { return appendLift(c, 0); };

    for (auto& t : p.transitions) {
        Transition nt;
        nt.from = t.from;
        nt.to = t.to;
        for (auto& c : p.allCoords()) {
            const Poly& law = t.lawOf(c);
            nt.laws[appendLift(c, 0).key()] = mapCoords(law, lift0);
            // total derivative: sum over all source coordinates
            Poly dot;
            for (auto& s : p.allCoords()) {
                Poly d = formalPartial(law, s);
                if (d.isZero()) continue;
                dot += mapCoords(d, lift0) * Poly::coordinate(appendLift(s, 1));
            }
            nt.laws[appendLift(c, 1).key()] = std::move(dot);
        }
        out.transitions.push_back(std::move(nt));
    }
    return out;
}

Presentation vertical(const Presentation& p) {
    Presentation lifted = tangentLift(p);
    int newComp = lifted.ncomp - 1;
    std::vector<long long> coeff(lifted.ncomp, 0);
    coeff[0] = 1;
    coeff[newComp] = -1;
    Presentation v = zeroNegative(lifted, WeightCombo(coeff));
    // shift: first weight component becomes Delta^0 - Delta^new restricted
    v = mapPresentationCoords(v, [&](const CoordSymbol& c) {
        CoordSymbol r = c;
        r.weight.comp[0] -= r.weight.comp[newComp];
        return r;
    });
    v.name = "V(" + p.name + ")";
    return v;
}

Presentation linearise(const Presentation& p) {
    int k = p.degree(0);
    if (k < 1) throw SpecError("linearise needs degree >= 1 in the leading weight");
    Presentation v = vertical(p);
    Presentation out = truncate(v, WeightCombo::unit(v.ncomp, 0), k - 1);
    out.name = "pLin(" + p.name + ")";
    return out;
}

Presentation fullLinearise(const Presentation& p) {
    if (p.ncomp != 1) throw SpecError("fullLinearise expects a single-graded bundle");
    int k = p.degree(0);
    Presentation out = p;
    for (int i = 1; i < k; ++i) out = linearise(out);
    out.name = "Lin(" + p.name + ")";
    return out;
}

Presentation fullLineariseDirect(const Presentation& p) {
    if (p.ncomp != 1) throw SpecError("fullLineariseDirect expects a single-graded bundle");
    int k = p.degree(0);
    Presentation lifted = p;
    for (int i = 0; i < k; ++i) lifted = tangentLift(lifted);
    std::vector<long long> coeff(lifted.ncomp, -1);
    coeff[0] = 1;
    Presentation fl = fixedLocus(lifted, WeightCombo(coeff));
    // component 0 is now redundant: it equals the sum of the Euler weights
    for (auto& f : fl.families)
        if (f.weight[0] != f.weight.total() - f.weight[0])
            throw ConsistencyError("fixed locus left a non-holonomic weight on " + f.name);
    Presentation out = mapPresentationCoords(fl, [&](const CoordSymbol& c) {
        CoordSymbol r = c;
        r.weight.comp.erase(r.weight.comp.begin());
        return r;
    });
    out.ncomp = k;
    out.name = "LinDirect(" + p.name + ")";
    return out;
}

CoordSymbol linToDirectName(const CoordSymbol& c) {
    CoordSymbol r = c;
    int w = c.weight.total();
    int sumEps = 0;
    for (int b : c.lifts) sumEps += b;
    r.lifts.insert(r.lifts.begin(), w - sumEps);
    return r;
}

Presentation renameLinToDirect(const Presentation& lin) {
    Presentation out = mapPresentationCoords(lin, [](const CoordSymbol& c) {
        CoordSymbol r = linToDirectName(c);
        if (r.weight.comp.empty() || r.weight[0] != r.lifts[0])
            throw ConsistencyError("lin coordinate " + c.str() + " is not in VB form");
        return r;
    });
    out.name = lin.name + "~direct";
    return out;
}

Morphism canonicalEmbedding(const Presentation& p) {
    Presentation lin = linearise(p);
    Morphism iota;
    iota.name = "iota(" + p.name + ")";
    for (auto& chart : p.charts) {
        Morphism::ChartMap cm;
        cm.srcChart = chart;
        cm.dstChart = chart;
        for (auto& c : lin.allCoords()) {
            CoordSymbol orig = c;
            orig.lifts.pop_back();
            orig.weight.comp.pop_back();
            int bit = c.lifts.back();
            if (bit == 0) {
                cm.pullback[c.key()] = Poly::coordinate(orig);
            } else {
                // dotted partner of a coordinate of first weight w pulls
                // back to w * original; the shift moved w-1 into slot 0
                int w = c.weight[0] + 1;
                orig.weight.comp[0] = w;
                cm.pullback[c.key()] = Poly::coordinate(orig).scaled(Rational(w));
            }
        }
        iota.maps.push_back(std::move(cm));
    }
    assertEmbeddingValid(p, lin, iota);
    return iota;
}

void assertEmbeddingValid(const Presentation& p, const Presentation& plinP,
                          const Morphism& iota) {
    ValidationReport rep = validateMorphism(p, plinP, iota);
    if (!rep.pass())
        throw ConsistencyError("canonical embedding fails to intertwine:\n" + rep.summary());
}

Morphism lineariseMorphism(const Presentation& src, const Presentation& dst,
                           const Morphism& phi) {
    Presentation lsrc = linearise(src);
    Presentation ldst = linearise(dst);
    // coordinates of lsrc present as keys; anything differentiated onto a
    // removed coordinate (base dot, overweight dot) is dropped
    std::set<CoordSymbol::Key> lsrcKeys;
    for (auto& c : lsrc.allCoords()) lsrcKeys.insert(c.key());

    Morphism out;
    out.name = "pLin(" + phi.name + ")";
    for (auto& cm : phi.maps) {
        Morphism::ChartMap ncm;
        ncm.srcChart = cm.srcChart;
        ncm.dstChart = cm.dstChart;
        for (auto& c : ldst.allCoords()) {
            CoordSymbol orig = c;
            orig.lifts.pop_back();
            orig.weight.comp.pop_back();
            int bit = c.lifts.back();
            if (bit == 1) orig.weight.comp[0] += 1;
            auto it = cm.pullback.find(orig.key());
            if (it == cm.pullback.end())
                throw SpecError("lineariseMorphism: no pullback for " + orig.str());
            if (bit == 0) {
                ncm.pullback[c.key()] =
                    mapCoords(it->second, [](const CoordSymbol& u) { return appendLift(u, 0); });
            } else {
                Poly dot;
                for (auto& s : src.allCoords()) {
                    Poly d = formalPartial(it->second, s);
                    if (d.isZero()) continue;
                    CoordSymbol sdot = appendLift(s, 1);
                    sdot.weight.comp[0] -= 1; // vertical shift
                    if (!lsrcKeys.count(sdot.key())) continue;
                    dot += mapCoords(d, [](const CoordSymbol& u) { return appendLift(u, 0); }) *
                           Poly::coordinate(sdot);
                }
                ncm.pullback[c.key()] = std::move(dot);
            }
        }
        out.maps.push_back(std::move(ncm));
    }
    return out;
}

Morphism fullLineariseMorphism(const Presentation& src, const Presentation& dst,
                               const Morphism& phi) {
    int k = std::max(src.degree(0), dst.degree(0));
    Presentation s = src, d = dst;
    Morphism out = phi;
    for (int i = 1; i < k; ++i) {
        out = lineariseMorphism(s, d, out);
        s = linearise(s);
        d = linearise(d);
    }
    out.name = "Lin(" + phi.name + ")";
    return out;
}

Presentation flip(const Presentation& p, const Perm& g) {
    if (static_cast<int>(g.size()) != p.ncomp || !isPerm(g))
        throw SpecError("flip: permutation arity mismatch");
    Presentation out = mapPresentationCoords(p, [&](const CoordSymbol& c) {
        CoordSymbol r = c;
        for (int i = 0; i < c.weight.size(); ++i) r.weight.comp[i] = c.weight[g[i]];
        return r;
    });
    out.name = p.name + "^" + permStr(g);
    return out;
}

Morphism canonicalSigma(const Presentation& linDirect, const Perm& g) {
    if (static_cast<int>(g.size()) != linDirect.ncomp)
        throw SpecError("canonicalSigma: permutation arity mismatch");
    for (auto& f : linDirect.families)
        if (!f.weight.isZero() && f.lifts != f.weight.comp)
            throw SpecError("canonicalSigma needs the adapted chart of the direct "
                            "construction (lift labels equal to weights); offending family " +
                            f.coord(1).str());
    Morphism sigma;
    sigma.name = "sigma" + permStr(g);
    for (auto& chart : linDirect.charts) {
        Morphism::ChartMap cm;
        cm.srcChart = chart;
        cm.dstChart = chart;
        for (auto& c : linDirect.allCoords()) {
            if (c.weight.isZero()) {
                cm.pullback[c.key()] = Poly::coordinate(c);
                continue;
            }
            CoordSymbol img = c;
            img.lifts = epsAct(c.lifts, g);
            img.weight = MultiWeight(img.lifts);
            cm.pullback[c.key()] = Poly::coordinate(img);
        }
        sigma.maps.push_back(std::move(cm));
    }
    ValidationReport rep = validateMorphism(linDirect, flip(linDirect, g), sigma);
    if (!rep.pass())
        throw ConsistencyError("canonical sigma " + permStr(g) +
                               " fails to intertwine:\n" + rep.summary());
    return sigma;
}

} // namespace grb
