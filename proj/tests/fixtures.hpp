#pragma once

// Shared test bundles: the generic degree-2/3/4 graded bundles with
// opaque transition tensors, vector-bundle and higher-tangent fixtures,
// and a fully rational symmetric double vector bundle.

#include "grb/functors.hpp"
#include "grb/symmetric.hpp"

#include <vector>

namespace fixtures {

using namespace grb;

inline CoordSymbol coordOf(const Presentation& p, const std::string& fam,
                           std::vector<int> lifts, int idx) {
    const CoordFamily* f = p.findFamily({fam, lifts});
    if (!f) throw SpecError("fixture: no family " + fam);
    return f->coord(idx);
}

inline Poly C(const CoordSymbol& c) { return Poly::coordinate(c); }
inline Poly F(const FnSymbol& f) { return Poly::fn(f); }

/// base-only bundle with an opaque coordinate change x' = X(x)
inline Presentation baseOnly(int dimx, const std::string& name = "M") {
    Presentation p;
    p.name = name;
    p.ncomp = 1;
    p.baseFamilyName = "x";
    p.families.push_back({"x", {}, dimx, MultiWeight::zeros(1)});
    p.charts = {"c0", "c1"};
    Transition t{"c0", "c1", {}};
    FnInfo xinfo;
    xinfo.baseMap = true;
    p.fnTable["X"] = xinfo;
    for (int a = 1; a <= dimx; ++a)
        t.laws[CoordSymbol{"x", {}, a, MultiWeight::zeros(1)}.key()] = F(FnSymbol("X", {a}));
    p.transitions.push_back(t);
    return p;
}

/// plain manifold: no weight components at all, so iterated tangent
/// lifts produce genuine k-fold vector bundles
inline Presentation manifoldOnly(int dimx, const std::string& name = "M") {
    Presentation p = baseOnly(dimx, name);
    p.ncomp = 0;
    for (auto& f : p.families) f.weight = MultiWeight::zeros(0);
    return p;
}

/// T^(k) M as iterated tangent lifts of a plain manifold
inline Presentation iteratedTangent(int dimx, int k) {
    Presentation p = manifoldOnly(dimx);
    for (int i = 0; i < k; ++i) p = tangentLift(p);
    return p;
}

/// degree-1 bundle (vector bundle E)
inline Presentation degree1E(int dimx = 1, int ny = 2, const std::string& name = "E") {
    Presentation p = baseOnly(dimx, name);
    p.families.push_back({"y", {}, ny, MultiWeight({1})});
    FnInfo ty;
    ty.dim = ny;
    ty.inverseFamily = "Sy";
    p.fnTable["Ty"] = ty;
    p.fnTable["Sy"].inverseOf = "Ty";
    p.fnTable["Sy"].dim = ny;
    Transition& t = p.transitions.front();
    for (int a = 1; a <= ny; ++a) {
        Poly law;
        for (int b = 1; b <= ny; ++b)
            law += C(coordOf(p, "y", {}, b)) * F(FnSymbol("Ty", {b, a}));
        t.laws[coordOf(p, "y", {}, a).key()] = law;
    }
    return p;
}

/// the degree-2 bundle of the naive-superisation discussion:
/// z' = z T + 1/2 y y T_{ba}, T symmetric in the lower pair
inline Presentation degree2F(int dimx = 1, int ny = 2, int nz = 1,
                             const std::string& name = "F2", bool identityBase = false) {
    Presentation p = degree1E(dimx, ny, name);
    p.families.push_back({"z", {}, nz, MultiWeight({2})});
    FnInfo tz;
    tz.dim = nz;
    tz.inverseFamily = "Sz";
    p.fnTable["Tz"] = tz;
    p.fnTable["Sz"].inverseOf = "Tz";
    p.fnTable["Sz"].dim = nz;
    p.fnTable["Tyy"].symGroups = {{1, 2}};
    Transition& t = p.transitions.front();
    for (int i = 1; i <= nz; ++i) {
        Poly law;
        for (int j = 1; j <= nz; ++j)
            law += C(coordOf(p, "z", {}, j)) * F(FnSymbol("Tz", {j, i}));
        for (int a = 1; a <= ny; ++a)
            for (int b = 1; b <= ny; ++b)
                law += (C(coordOf(p, "y", {}, a)) * C(coordOf(p, "y", {}, b)) *
                        F(p.fnInstance("Tyy", {b, a, i})))
                           .scaled(Rational(1, 2));
        t.laws[coordOf(p, "z", {}, i).key()] = law;
    }
    if (identityBase) {
        for (int a = 1; a <= dimx; ++a)
            t.laws[coordOf(p, "x", {}, a).key()] = C(coordOf(p, "x", {}, a));
    }
    return p;
}

/// the degree-3 bundle worked out in detail by the running example:
/// w' = w T + z y T_{ai} + 1/3! y y y T_{cba}
inline Presentation degree3F(int dimx = 1, int ny = 2, int nz = 1, int nw = 1,
                             const std::string& name = "F3") {
    Presentation p = degree2F(dimx, ny, nz, name);
    p.families.push_back({"w", {}, nw, MultiWeight({3})});
    FnInfo tw;
    tw.dim = nw;
    tw.inverseFamily = "Sw";
    p.fnTable["Tw"] = tw;
    p.fnTable["Sw"].inverseOf = "Tw";
    p.fnTable["Sw"].dim = nw;
    p.fnTable["Tyyy"].symGroups = {{1, 2, 3}};
    Transition& t = p.transitions.front();
    for (int k = 1; k <= nw; ++k) {
        Poly law;
        for (int m = 1; m <= nw; ++m)
            law += C(coordOf(p, "w", {}, m)) * F(FnSymbol("Tw", {m, k}));
        for (int i = 1; i <= nz; ++i)
            for (int a = 1; a <= ny; ++a)
                law += C(coordOf(p, "z", {}, i)) * C(coordOf(p, "y", {}, a)) *
                       F(FnSymbol("Tzy", {a, i, k}));
        for (int a = 1; a <= ny; ++a)
            for (int b = 1; b <= ny; ++b)
                for (int c = 1; c <= ny; ++c)
                    law += (C(coordOf(p, "y", {}, a)) * C(coordOf(p, "y", {}, b)) *
                            C(coordOf(p, "y", {}, c)) * F(p.fnInstance("Tyyy", {c, b, a, k})))
                               .scaled(Rational(1, 6));
        t.laws[coordOf(p, "w", {}, k).key()] = law;
    }
    return p;
}

/// degree-4 bundle, all ranks 1, every weight partition present
inline Presentation degree4F(const std::string& name = "F4") {
    Presentation p = degree3F(1, 1, 1, 1, name);
    p.families.push_back({"v", {}, 1, MultiWeight({4})});
    FnInfo tv;
    tv.dim = 1;
    tv.inverseFamily = "Sv";
    p.fnTable["Tv"] = tv;
    p.fnTable["Sv"].inverseOf = "Tv";
    p.fnTable["Sv"].dim = 1;
    p.fnTable["Tzz"].symGroups = {{1, 2}};
    p.fnTable["Tzyy"].symGroups = {{2, 3}};
    p.fnTable["Ty4"].symGroups = {{1, 2, 3, 4}};
    Transition& t = p.transitions.front();
    Poly y = C(coordOf(p, "y", {}, 1)), z = C(coordOf(p, "z", {}, 1)),
         w = C(coordOf(p, "w", {}, 1)), v = C(coordOf(p, "v", {}, 1));
    Poly law = v * F(FnSymbol("Tv", {1, 1}));
    law += w * y * F(FnSymbol("Twy", {1, 1, 1}));
    law += (z * z * F(FnSymbol("Tzz", {1, 1, 1}))).scaled(Rational(1, 2));
    law += (z * y * y * F(FnSymbol("Tzyy", {1, 1, 1, 1}))).scaled(Rational(1, 2));
    law += (y * y * y * y * F(FnSymbol("Ty4", {1, 1, 1, 1, 1}))).scaled(Rational(1, 24));
    t.laws[coordOf(p, "v", {}, 1).key()] = law;
    return p;
}

/// second-order tangent bundle in normalised jet coordinates:
/// xj2' = xj2 dX + 1/2 xj1 xj1 ddX
inline Presentation t2mNormalized(int dimx = 2, const std::string& name = "T2M") {
    Presentation p = baseOnly(dimx, name);
    p.families.push_back({"xj1", {}, dimx, MultiWeight({1})});
    p.families.push_back({"xj2", {}, dimx, MultiWeight({2})});
    Transition& t = p.transitions.front();
    for (int a = 1; a <= dimx; ++a) {
        Poly l1, l2;
        for (int b = 1; b <= dimx; ++b) {
            l1 += C(coordOf(p, "xj1", {}, b)) * F(FnSymbol("X", {a}, {b}));
            l2 += C(coordOf(p, "xj2", {}, b)) * F(FnSymbol("X", {a}, {b}));
            for (int c = 1; c <= dimx; ++c)
                l2 += (C(coordOf(p, "xj1", {}, b)) * C(coordOf(p, "xj1", {}, c)) *
                       F(FnSymbol("X", {a}, {b, c})))
                          .scaled(Rational(1, 2));
        }
        t.laws[coordOf(p, "xj1", {}, a).key()] = l1;
        t.laws[coordOf(p, "xj2", {}, a).key()] = l2;
    }
    return p;
}

/// third-order tangent bundle in normalised jets
inline Presentation t3mNormalized(int dimx = 1, const std::string& name = "T3M") {
    Presentation p = t2mNormalized(dimx, name);
    p.families.push_back({"xj3", {}, dimx, MultiWeight({3})});
    Transition& t = p.transitions.front();
    for (int a = 1; a <= dimx; ++a) {
        Poly l3;
        for (int b = 1; b <= dimx; ++b) {
            l3 += C(coordOf(p, "xj3", {}, b)) * F(FnSymbol("X", {a}, {b}));
            for (int c = 1; c <= dimx; ++c) {
                l3 += C(coordOf(p, "xj2", {}, b)) * C(coordOf(p, "xj1", {}, c)) *
                      F(FnSymbol("X", {a}, {b, c}));
                for (int d = 1; d <= dimx; ++d)
                    l3 += (C(coordOf(p, "xj1", {}, b)) * C(coordOf(p, "xj1", {}, c)) *
                           C(coordOf(p, "xj1", {}, d)) * F(FnSymbol("X", {a}, {b, c, d})))
                              .scaled(Rational(1, 6));
            }
        }
        t.laws[coordOf(p, "xj3", {}, a).key()] = l3;
    }
    return p;
}

/// fully rational symmetric double vector bundle: identity side blocks,
/// symmetric W in the core law, sigma with a skew quadratic part
inline Presentation rationalDVB(const std::string& name = "Dsym") {
    Presentation p;
    p.name = name;
    p.ncomp = 2;
    p.baseFamilyName = "x";
    p.families.push_back({"x", {}, 1, MultiWeight::zeros(2)});
    p.families.push_back({"y", {1, 0}, 2, MultiWeight({1, 0})});
    p.families.push_back({"y", {0, 1}, 2, MultiWeight({0, 1})});
    p.families.push_back({"z", {1, 1}, 1, MultiWeight({1, 1})});
    p.charts = {"c0", "c1"};
    Transition t{"c0", "c1", {}};
    auto x = coordOf(p, "x", {}, 1);
    t.laws[x.key()] = C(x);
    for (int a = 1; a <= 2; ++a) {
        t.laws[coordOf(p, "y", {1, 0}, a).key()] = C(coordOf(p, "y", {1, 0}, a));
        t.laws[coordOf(p, "y", {0, 1}, a).key()] = C(coordOf(p, "y", {0, 1}, a));
    }
    // identity side blocks force the core coupling W to be symmetric
    Poly zlaw = C(coordOf(p, "z", {1, 1}, 1));
    const int W[2][2] = {{1, 2}, {2, -1}};
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b)
            if (W[a - 1][b - 1] != 0)
                zlaw += (C(coordOf(p, "y", {1, 0}, a)) * C(coordOf(p, "y", {0, 1}, b)))
                            .scaled(Rational(W[a - 1][b - 1]));
    t.laws[coordOf(p, "z", {1, 1}, 1).key()] = zlaw;
    p.transitions.push_back(t);
    return p;
}

/// sigma for rationalDVB: swap the legs, z -> z + y10^a y01^b s_{ba}
/// with s = s0 * [[0,1],[-1,0]]
inline Morphism rationalDVBSigma(const Presentation& D, const Rational& s0) {
    Morphism sigma;
    sigma.name = "sigma(2,1)";
    for (auto& chart : D.charts) {
        Morphism::ChartMap cm;
        cm.srcChart = chart;
        cm.dstChart = chart;
        auto x = coordOf(D, "x", {}, 1);
        cm.pullback[x.key()] = C(x);
        for (int a = 1; a <= 2; ++a) {
            cm.pullback[coordOf(D, "y", {1, 0}, a).key()] = C(coordOf(D, "y", {0, 1}, a));
            cm.pullback[coordOf(D, "y", {0, 1}, a).key()] = C(coordOf(D, "y", {1, 0}, a));
        }
        Poly zp = C(coordOf(D, "z", {1, 1}, 1));
        // s_{ba} contracted as y10^a y01^b s[b][a]
        zp += (C(coordOf(D, "y", {1, 0}, 1)) * C(coordOf(D, "y", {0, 1}, 2))).scaled(-s0);
        zp += (C(coordOf(D, "y", {1, 0}, 2)) * C(coordOf(D, "y", {0, 1}, 1))).scaled(s0);
        cm.pullback[coordOf(D, "z", {1, 1}, 1).key()] = zp;
        sigma.maps.push_back(std::move(cm));
    }
    return sigma;
}

inline SymmetricKVB rationalSymmetricDVB(const Rational& s0 = Rational(2)) {
    Presentation D = rationalDVB();
    std::map<Perm, Morphism> gens;
    gens[permTransposition(2, 0, 1)] = rationalDVBSigma(D, s0);
    return makeSymmetricKVB(D, gens);
}

} // namespace fixtures
