#include "grb/numeric.hpp"

#include <algorithm>
#include <set>

namespace grb {

uint64_t Rng::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long Rng::uniform(long long lo, long long hi) {
    return lo + static_cast<long long>(next() % static_cast<uint64_t>(hi - lo + 1));
}

Rational Rng::smallRational(long long mag) {
    long long n = uniform(-mag, mag);
    long long d = uniform(1, 2);
    return Rational(n, d);
}

Rational NumericInstance::evalFn(const FnSymbol& f, const PointMap& point,
                                 const Presentation& p) const {
    auto it = assignment.find(f.undived());
    if (it == assignment.end())
        throw SpecError("numeric instance has no assignment for " + f.str());
    Poly val = it->second;
    for (int d : f.derivs) {
        CoordSymbol xc{p.baseFamilyName, {}, d, MultiWeight::zeros(p.ncomp)};
        val = formalPartial(val, xc);
        if (val.isZero()) break;
    }
    // instance polynomials live in the unlifted base coordinates; the
    // presentation's zero-weight base family may carry lift labels
    PointMap basePoint = point;
    for (auto& fam : p.families) {
        if (fam.name != p.baseFamilyName || !fam.weight.isZero() || fam.lifts.empty())
            continue;
        for (int i = 1; i <= fam.count; ++i) {
            auto v = point.find(fam.coord(i).key());
            if (v != point.end())
                basePoint[CoordSymbol{p.baseFamilyName, {}, i, {}}.key()] = v->second;
        }
    }
    return evalPoly(val, basePoint, p);
}

Rational NumericInstance::evalPoly(const Poly& poly, const PointMap& point,
                                   const Presentation& p) const {
    Rational sum(0);
    for (auto& [m, c] : poly.terms()) {
        Rational v = c;
        for (auto& [cs, e] : m.coords) {
            auto it = point.find(cs.key());
            if (it == point.end())
                throw SpecError("no point value for coordinate " + cs.str());
            v *= pow(it->second, e);
            if (v.isZero()) break;
        }
        if (v.isZero()) continue;
        for (auto& [fs, e] : m.fns) v *= pow(evalFn(fs, point, p), e);
        sum += v;
    }
    return sum;
}

namespace {

Poly randomBasePoly(const Presentation& p, Rng& rng, int degreeCap) {
    // random polynomial in the unlifted base coordinates
    Poly out = Poly::constant(rng.smallRational(5));
    int dim = 1;
    for (auto& f : p.families)
        if (f.name == p.baseFamilyName && f.lifts.empty()) dim = f.count;
    for (int d = 1; d <= degreeCap; ++d) {
        for (int tries = 0; tries < dim; ++tries) {
            Monomial m;
            for (int j = 0; j < d; ++j) {
                int idx = static_cast<int>(rng.uniform(1, dim));
                m.coords.emplace_back(
                    CoordSymbol{p.baseFamilyName, {}, idx, MultiWeight::zeros(p.ncomp)}, 1);
            }
            m.normalise();
            Rational c = rng.smallRational(3);
            if (!c.isZero()) {
                Poly t;
                t.addTerm(m, c);
                out += t;
            }
        }
    }
    return out;
}

} // namespace

NumericInstance instantiate(const Presentation& p, uint64_t seed, int degreeCap,
                            const std::vector<Poly>& extraPolys) {
    NumericInstance inst;
    inst.seed = seed;
    inst.degreeCap = degreeCap;
    Rng rng(seed);

    std::set<FnSymbol::Key> seen;
    auto collect = [&](const Poly& poly) {
        for (auto& f : fnsIn(poly)) seen.insert(f.undived());
    };
    for (auto& t : p.transitions)
        for (auto& [k, law] : t.laws) collect(law);
    for (auto& poly : extraPolys) collect(poly);

    // group families, handle declared inverse pairs first
    std::set<std::string> families;
    for (auto& k : seen) families.insert(k.first);

    std::set<std::string> handled;
    for (auto& fam : families) {
        if (handled.count(fam)) continue;
        auto it = p.fnTable.find(fam);
        bool paired = it != p.fnTable.end() &&
                      (!it->second.inverseFamily.empty() || !it->second.inverseOf.empty());
        if (paired) {
            std::string primal = fam, dual;
            if (!it->second.inverseFamily.empty())
                dual = it->second.inverseFamily;
            else {
                dual = fam;
                primal = it->second.inverseOf;
            }
            int dim = p.fnTable.at(primal).dim;
            if (dim <= 0) throw SpecError("inverse pair " + primal + " without dimension");
            // random invertible constant matrix: unitriangular product keeps it exact
            RatMatrix lower = RatMatrix::identity(dim), upper = RatMatrix::identity(dim);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    if (i > j) lower.at(i, j) = Rational(rng.uniform(-2, 2));
                    if (i < j) upper.at(i, j) = Rational(rng.uniform(-2, 2));
                }
            RatMatrix mat = lower * upper;
            auto inv = inverse(mat);
            for (int i = 0; i < dim; ++i)
                for (int j = 0; j < dim; ++j) {
                    inst.assignment[{primal, {i + 1, j + 1}}] =
                        Poly::constant(mat.at(i, j));
                    inst.assignment[{dual, {i + 1, j + 1}}] =
                        Poly::constant(inv->at(i, j));
                }
            handled.insert(primal);
            handled.insert(dual);
            continue;
        }
        handled.insert(fam);
        for (auto& k : seen) {
            if (k.first != fam) continue;
            inst.assignment[k] = randomBasePoly(p, rng, degreeCap);
        }
    }

    // any instance that slipped through (e.g. inverse-pair symbol used with
    // unexpected indices) still gets a value
    for (auto& k : seen)
        if (!inst.assignment.count(k)) inst.assignment[k] = randomBasePoly(p, rng, degreeCap);
    return inst;
}

PointMap randomPoint(const Presentation& p, Rng& rng, long long mag) {
    PointMap pt;
    for (auto& c : p.allCoords()) pt[c.key()] = rng.smallRational(mag);
    return pt;
}

PointMap applyTransition(const Presentation& p, const Transition& t, const PointMap& src,
                         const NumericInstance& inst) {
    PointMap out;
    for (auto& c : p.allCoords()) out[c.key()] = inst.evalPoly(t.lawOf(c), src, p);
    return out;
}

PointMap applyMorphismNumeric(const Presentation& src, const Presentation& dst,
                              const Morphism& phi, const std::string& srcChart,
                              const PointMap& point, const NumericInstance& inst) {
    const Morphism::ChartMap* cm = phi.mapForSrc(srcChart);
    if (!cm) throw SpecError("morphism has no map from chart " + srcChart);
    PointMap out;
    for (auto& c : dst.allCoords()) {
        auto it = cm->pullback.find(c.key());
        if (it == cm->pullback.end()) throw SpecError("no pullback for " + c.str());
        out[c.key()] = inst.evalPoly(it->second, point, src);
    }
    return out;
}

RatMatrix fibreJacobian(const Presentation& src, const Presentation& dst, const Morphism& phi,
                        const std::string& dstChart, const PointMap& point,
                        const NumericInstance& inst) {
    const Morphism::ChartMap* cm = phi.mapForDst(dstChart);
    if (!cm) throw SpecError("morphism has no map onto chart " + dstChart);
    auto srcFibre = src.fibreCoords();
    auto dstFibre = dst.fibreCoords();
    RatMatrix jac(static_cast<int>(dstFibre.size()), static_cast<int>(srcFibre.size()));
    for (size_t i = 0; i < dstFibre.size(); ++i) {
        const Poly& pb = cm->pullback.at(dstFibre[i].key());
        for (size_t j = 0; j < srcFibre.size(); ++j)
            jac.at(static_cast<int>(i), static_cast<int>(j)) =
                inst.evalPoly(formalPartial(pb, srcFibre[j]), point, src);
    }
    return jac;
}

} // namespace grb
