#include "grb/surgery.hpp"

#include "grb/linalg.hpp"

#include <algorithm>

namespace grb {

namespace {

Presentation removeFamilies(const Presentation& p,
                            const std::function<bool(const CoordFamily&)>& keep,
                            bool substituteZeroForRemoved) {
    Presentation out = p;
    Assignment zero;
    std::vector<CoordSymbol> removed;
    out.families.clear();
    for (auto& f : p.families) {
        if (keep(f)) {
            out.families.push_back(f);
        } else {
            for (int i = 1; i <= f.count; ++i) {
                zero[f.coord(i).key()] = Poly();
                removed.push_back(f.coord(i));
            }
        }
    }
    out.transitions.clear();
    for (auto& t : p.transitions) {
        Transition nt;
        nt.from = t.from;
        nt.to = t.to;
        for (auto& f : out.families)
            for (int i = 1; i <= f.count; ++i) {
                const Poly& law = t.lawOf(f.coord(i));
                Poly reduced = substituteZeroForRemoved ? substitute(law, zero) : law;
                if (!substituteZeroForRemoved) {
                    for (auto& used : coordsIn(reduced))
                        if (zero.count(used.key()))
                            throw SpecError("truncate: retained law for " + f.coord(i).str() +
                                            " mentions removed coordinate " + used.str());
                }
                nt.laws[f.coord(i).key()] = std::move(reduced);
            }
        // consistency: removed laws must die under the substitution
        if (substituteZeroForRemoved) {
            for (auto& r : removed) {
                Poly gone = substitute(t.lawOf(r), zero);
                if (!gone.isZero())
                    throw SpecError("surgery: law of removed coordinate " + r.str() +
                                    " does not vanish; not an n-fold graded bundle (" +
                                    t.from + "->" + t.to + ": " + gone.str() + ")");
            }
        }
        out.transitions.push_back(std::move(nt));
    }
    return out;
}

} // namespace

Presentation truncate(const Presentation& p, const WeightCombo& delta, long long l) {
    if (!delta.allNonNegative())
        throw SpecError("truncate needs non-negative combination coefficients");
    Presentation out = removeFamilies(
        p, [&](const CoordFamily& f) { return delta.weightOf(f.weight) <= l; }, false);
    out.name = p.name + "[<=" + std::to_string(l) + "]";
    return out;
}

Presentation zeroNegative(const Presentation& p, const WeightCombo& x) {
    Presentation out = removeFamilies(
        p, [&](const CoordFamily& f) { return x.weightOf(f.weight) >= 0; }, true);
    out.name = p.name + "[X>=0]";
    return out;
}

Presentation fixedLocus(const Presentation& p, const WeightCombo& x) {
    Presentation out = zeroNegative(zeroNegative(p, x), -x);
    out.name = p.name + "[X=0]";
    return out;
}

namespace {

// inverse of the linear block entries[i][j] = coefficient of row_i in the
// law of col_j; rational blocks are inverted exactly, single-symbol
// blocks T[i,j] through their declared inverse family
std::vector<std::vector<Poly>> blockInverse(const Presentation& p,
                                            const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    bool rational = true;
    for (auto& row : m)
        for (auto& e : row)
            if (!e.isConstant()) rational = false;
    std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n));
    if (rational) {
        RatMatrix rm(static_cast<int>(n), static_cast<int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                rm.at(static_cast<int>(i), static_cast<int>(j)) =
                    m[i][j].coefficientOf(Monomial{});
        auto inv = inverse(rm);
        if (!inv) throw SpecError("invertTransition: singular rational block");
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                out[i][j] = Poly::constant(inv->at(static_cast<int>(i), static_cast<int>(j)));
        return out;
    }
    std::string fam;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto& terms = m[i][j].terms();
            if (terms.size() != 1)
                throw SpecError("invertTransition: block entry is not a single symbol");
            auto& [mono, coeff] = *terms.begin();
            if (!coeff.isOne() || mono.fns.size() != 1 || !mono.coords.empty() ||
                !mono.fns[0].first.derivs.empty())
                throw SpecError("invertTransition: unsupported block entry " + m[i][j].str());
            if (fam.empty()) fam = mono.fns[0].first.family;
            if (mono.fns[0].first.family != fam ||
                mono.fns[0].first.indices !=
                    std::vector<int>{static_cast<int>(i) + 1, static_cast<int>(j) + 1})
                throw SpecError("invertTransition: block does not follow the T[i,j] pattern");
        }
    auto it = p.fnTable.find(fam);
    std::string inv;
    if (it != p.fnTable.end()) {
        if (!it->second.inverseFamily.empty()) inv = it->second.inverseFamily;
        else if (!it->second.inverseOf.empty()) inv = it->second.inverseOf;
    }
    if (inv.empty()) throw SpecError("invertTransition: no declared inverse for " + fam);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out[i][j] = Poly::fn(
                FnSymbol(inv, {static_cast<int>(i) + 1, static_cast<int>(j) + 1}));
    return out;
}

} // namespace

Transition invertTransition(const Presentation& p, const Transition& t) {
    Transition inv;
    inv.from = t.to;
    inv.to = t.from;

    Assignment solved; // unprimed coordinate -> polynomial in primed

    // base: identity or rational-linear laws only
    std::vector<CoordSymbol> base;
    for (auto& c : p.allCoords())
        if (c.kind() == CoordKind::Base) base.push_back(c);
    bool baseIdentity = true;
    for (auto& c : base)
        if (!(t.lawOf(c) == Poly::coordinate(c))) baseIdentity = false;
    if (baseIdentity) {
        for (auto& c : base) {
            inv.laws[c.key()] = Poly::coordinate(c);
            solved[c.key()] = Poly::coordinate(c);
        }
    } else {
        std::vector<std::vector<Poly>> blk(base.size(), std::vector<Poly>(base.size()));
        for (size_t j = 0; j < base.size(); ++j)
            for (size_t i = 0; i < base.size(); ++i)
                blk[i][j] = formalPartial(t.lawOf(base[j]), base[i]);
        auto binv = blockInverse(p, blk);
        for (size_t i = 0; i < base.size(); ++i) {
            Poly law;
            for (size_t j = 0; j < base.size(); ++j)
                law += binv[j][i] * Poly::coordinate(base[j]);
            inv.laws[base[i].key()] = law;
            solved[base[i].key()] = law;
        }
    }

    // fibre levels by increasing total weight
    std::map<MultiWeight, std::vector<CoordSymbol>> levels;
    for (auto& c : p.fibreCoords()) levels[c.weight].push_back(c);
    std::vector<MultiWeight> order;
    for (auto& [w, block] : levels) order.push_back(w);
    std::sort(order.begin(), order.end(), [](const MultiWeight& a, const MultiWeight& b) {
        return a.total() < b.total();
    });

    for (auto& w : order) {
        auto& block = levels[w];
        size_t n = block.size();
        std::vector<std::vector<Poly>> blk(n, std::vector<Poly>(n));
        std::vector<Poly> rest(n);
        for (size_t j = 0; j < n; ++j) {
            Poly law = t.lawOf(block[j]);
            for (size_t i = 0; i < n; ++i) {
                Poly coeff = formalPartial(law, block[i]);
                blk[i][j] = coeff;
                law -= coeff * Poly::coordinate(block[i]);
            }
            rest[j] = substitute(law, solved); // lower order, now in primed coords
        }
        auto binv = blockInverse(p, blk);
        for (size_t i = 0; i < n; ++i) {
            Poly law;
            for (size_t j = 0; j < n; ++j)
                law += binv[j][i] * (Poly::coordinate(block[j]) - rest[j]);
            inv.laws[block[i].key()] = law;
            solved[block[i].key()] = law;
        }
    }
    return inv;
}

} // namespace grb
