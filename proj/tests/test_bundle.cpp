#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "grb/numeric.hpp"
#include "grb/surgery.hpp"
#include "grb/validate.hpp"

using namespace grb;
using fixtures::C;
using fixtures::coordOf;
using fixtures::F;

namespace {

// three rational degree-2 charts whose cycle composes to the identity
Presentation threeChartCycle() {
    Presentation p;
    p.name = "Cyc3";
    p.ncomp = 1;
    p.baseFamilyName = "x";
    p.families.push_back({"x", {}, 1, MultiWeight::zeros(1)});
    p.families.push_back({"y", {}, 1, MultiWeight({1})});
    p.families.push_back({"z", {}, 1, MultiWeight({2})});
    p.charts = {"c0", "c1", "c2"};
    auto x = p.families[0].coord(1);
    auto y = p.families[1].coord(1);
    auto z = p.families[2].coord(1);

    Transition t01{"c0", "c1", {}};
    t01.laws[x.key()] = C(x);
    t01.laws[y.key()] = C(y).scaled(Rational(2));
    t01.laws[z.key()] = C(z) + C(y) * C(y);
    Transition t12{"c1", "c2", {}};
    t12.laws[x.key()] = C(x);
    t12.laws[y.key()] = C(y).scaled(Rational(3));
    t12.laws[z.key()] = C(z) + C(y) * C(y);
    Transition t20{"c2", "c0", {}};
    t20.laws[x.key()] = C(x);
    t20.laws[y.key()] = C(y).scaled(Rational(1, 6));
    t20.laws[z.key()] = C(z) - (C(y) * C(y)).scaled(Rational(5, 36));
    p.transitions = {t01, t12, t20};
    return p;
}

} // namespace

TEST_CASE("validate accepts the degree-3 laws of the running example") {
    Presentation f3 = fixtures::degree3F();
    ValidationReport rep = validate(f3);
    CHECK(rep.pass());
}

TEST_CASE("validate rejects an inhomogeneous law") {
    Presentation e = fixtures::degree1E();
    Transition& t = e.transitions.front();
    t.laws[coordOf(e, "y", {}, 1).key()] =
        C(coordOf(e, "y", {}, 1)) + C(coordOf(e, "x", {}, 1));
    ValidationReport rep = validate(e);
    CHECK(!rep.pass());
}

TEST_CASE("validate flags structural breakage with a location") {
    Presentation e = fixtures::degree1E();
    e.families.push_back(e.families.back()); // duplicate family
    CHECK_THROWS_WITH_AS(validate(e), doctest::Contains("duplicate"), SpecError);

    Presentation e2 = fixtures::degree1E();
    e2.families.back().weight = MultiWeight({1, 0}); // arity mismatch
    CHECK_THROWS_WITH_AS(validate(e2), doctest::Contains("arity"), SpecError);

    Presentation e3 = fixtures::degree1E();
    e3.transitions.front().laws.erase(coordOf(e3, "y", {}, 2).key());
    CHECK_THROWS_WITH_AS(validate(e3), doctest::Contains("missing law"), SpecError);
}

TEST_CASE("non-symmetric tensor input is symmetrised on ingestion, then passes") {
    Presentation f2 = fixtures::degree2F();
    // overwrite the z-law with an unsorted instance of the symmetric family
    Transition& t = f2.transitions.front();
    Poly law = C(coordOf(f2, "z", {}, 1)) * F(FnSymbol("Tz", {1, 1}));
    law += C(coordOf(f2, "y", {}, 1)) * C(coordOf(f2, "y", {}, 2)) *
           F(FnSymbol("Tyy", {2, 1, 1}));
    t.laws[coordOf(f2, "z", {}, 1).key()] = law;
    int changed = f2.canonicaliseSymbols();
    CHECK(changed == 1);
    CHECK(validate(f2).pass());
    Poly canon = f2.transitions.front().lawOf(coordOf(f2, "z", {}, 1));
    bool sorted = true;
    for (auto& [m, c] : canon.terms())
        for (auto& [fs, e] : m.fns)
            if (fs.family == "Tyy" && fs.indices != std::vector<int>{1, 2, 1}) sorted = false;
    CHECK(sorted);
}

TEST_CASE("truncate walks the tower of fibrations") {
    Presentation f3 = fixtures::degree3F();
    WeightCombo total = WeightCombo::total(1);

    SUBCASE("F3 truncated at 2 is the degree-2 bundle with unchanged laws") {
        Presentation f2 = truncate(f3, total, 2);
        CHECK(f2.degree(0) == 2);
        CHECK(f2.findFamily({"w", {}}) == nullptr);
        Presentation expected = fixtures::degree2F();
        const Transition& t = f2.transitions.front();
        const Transition& te = expected.transitions.front();
        CHECK(t.lawOf(coordOf(f2, "z", {}, 1)) == te.lawOf(coordOf(expected, "z", {}, 1)));
        CHECK(t.lawOf(coordOf(f2, "y", {}, 1)) == te.lawOf(coordOf(expected, "y", {}, 1)));
        CHECK(validate(f2).pass());
    }

    SUBCASE("truncating at the degree returns the bundle itself") {
        CHECK(samePresentation(truncate(f3, total, 3), f3));
    }

    SUBCASE("truncating at 0 leaves the base") {
        Presentation m = truncate(f3, total, 0);
        CHECK(m.fibreCoords().empty());
        CHECK(m.findFamily({"x", {}}) != nullptr);
    }

    SUBCASE("nested truncations take the minimum") {
        Presentation a = truncate(truncate(f3, total, 2), total, 1);
        Presentation b = truncate(f3, total, 1);
        a.name = b.name;
        CHECK(samePresentation(a, b));
    }
}

TEST_CASE("zero_negative carves out the vertical bundle") {
    Presentation f2 = fixtures::degree2F();
    Presentation tf2 = tangentLift(f2);

    SUBCASE("removing the negative X-weight coordinate drops the base dot") {
        Presentation v = zeroNegative(tf2, WeightCombo({1, -1}));
        CHECK(v.findFamily({"x", {1}}) == nullptr);
        CHECK(v.findFamily({"y", {1}}) != nullptr);
        CHECK(validate(v).pass());
    }

    SUBCASE("the vertical bundle carries the shifted bi-weights of the worked example") {
        Presentation v = vertical(f2);
        CHECK(v.findFamily({"x", {0}})->weight == MultiWeight({0, 0}));
        CHECK(v.findFamily({"y", {0}})->weight == MultiWeight({1, 0}));
        CHECK(v.findFamily({"z", {0}})->weight == MultiWeight({2, 0}));
        CHECK(v.findFamily({"y", {1}})->weight == MultiWeight({0, 1}));
        CHECK(v.findFamily({"z", {1}})->weight == MultiWeight({1, 1}));
        CHECK(v.findFamily({"x", {1}}) == nullptr);
    }

    SUBCASE("a combination with non-negative coefficients changes nothing") {
        Presentation same = zeroNegative(tf2, WeightCombo({1, 1}));
        same.name = tf2.name;
        CHECK(samePresentation(same, tf2));
    }

    SUBCASE("zero_negative is idempotent") {
        WeightCombo xw({1, -1});
        Presentation once = zeroNegative(tf2, xw);
        Presentation twice = zeroNegative(once, xw);
        twice.name = once.name;
        CHECK(samePresentation(twice, once));
    }

    SUBCASE("fixed locus equals the double application with the reflected combination") {
        WeightCombo xw({1, -1});
        Presentation fl = fixedLocus(tf2, xw);
        Presentation dbl = zeroNegative(zeroNegative(tf2, xw), -xw);
        dbl.name = fl.name;
        CHECK(samePresentation(fl, dbl));
    }
}

TEST_CASE("the core of a double vector bundle is its fixed locus") {
    Presentation d = fullLineariseDirect(fixtures::degree2F());
    Presentation core = fixedLocus(d, WeightCombo({1, -1}));
    bool onlyCoreSurvives = true;
    for (auto& f : core.families)
        if (!f.weight.isZero() && !(f.weight == MultiWeight({1, 1}))) onlyCoreSurvives = false;
    CHECK(onlyCoreSurvives);
    CHECK(core.findFamily({"z", {1, 1}}) != nullptr);
    CHECK(validate(core).pass());
}

TEST_CASE("surgery is functorial for weight-preserving morphisms") {
    // the homogeneity rescaling y -> 2y, z -> 4z, w -> 8w is a morphism;
    // it restricts to every truncation with the same law-level data
    Presentation f3 = fixtures::degree3F();
    Morphism h2;
    h2.name = "h2";
    for (auto& chart : f3.charts) {
        Morphism::ChartMap cm;
        cm.srcChart = chart;
        cm.dstChart = chart;
        for (auto& c : f3.allCoords())
            cm.pullback[c.key()] =
                Poly::coordinate(c).scaled(pow(Rational(2), c.weight.total()));
        h2.maps.push_back(std::move(cm));
    }
    CHECK(validateMorphism(f3, f3, h2).pass());

    Presentation f2 = truncate(f3, WeightCombo::total(1), 2);
    Morphism restricted;
    restricted.name = "h2|";
    for (auto& cm : h2.maps) {
        Morphism::ChartMap ncm;
        ncm.srcChart = cm.srcChart;
        ncm.dstChart = cm.dstChart;
        for (auto& c : f2.allCoords()) ncm.pullback[c.key()] = cm.pullback.at(c.key());
        restricted.maps.push_back(std::move(ncm));
    }
    CHECK(validateMorphism(f2, f2, restricted).pass());
}

TEST_CASE("numeric instantiation") {
    Presentation f2 = fixtures::degree2F();

    SUBCASE("fixed seed reproduces the instance") {
        NumericInstance a = instantiate(f2, 42, 2);
        NumericInstance b = instantiate(f2, 42, 2);
        CHECK(a.assignment == b.assignment);
        NumericInstance c2 = instantiate(f2, 43, 2);
        CHECK(a.assignment != c2.assignment);
    }

    SUBCASE("declared inverse pairs become mutually inverse matrices") {
        NumericInstance inst = instantiate(f2, 7, 2);
        RatMatrix t(2, 2), s(2, 2);
        PointMap dummy;
        for (auto& c : f2.allCoords()) dummy[c.key()] = Rational(0);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                t.at(i, j) = inst.evalFn(FnSymbol("Ty", {i + 1, j + 1}), dummy, f2);
                s.at(i, j) = inst.evalFn(FnSymbol("Sy", {i + 1, j + 1}), dummy, f2);
            }
        CHECK(t * s == RatMatrix::identity(2));
    }

    SUBCASE("cocycle: the instantiated three-chart cycle composes to the identity") {
        Presentation cyc = threeChartCycle();
        CHECK(validate(cyc).pass());
        NumericInstance inst = instantiate(cyc, 5, 2);
        Rng rng(5);
        for (int i = 0; i < 20; ++i) {
            PointMap p0 = randomPoint(cyc, rng);
            PointMap p1 = applyTransition(cyc, cyc.transitions[0], p0, inst);
            PointMap p2 = applyTransition(cyc, cyc.transitions[1], p1, inst);
            PointMap back = applyTransition(cyc, cyc.transitions[2], p2, inst);
            CHECK(back == p0);
        }
    }

    SUBCASE("the degree-2 transition composed with its built inverse is the identity") {
        Presentation f2id = fixtures::degree2F(1, 2, 1, "F2id", true);
        const Transition& t = f2id.transitions.front();
        Transition inv = invertTransition(f2id, t);
        NumericInstance inst = instantiate(f2id, 21, 2);
        Rng rng(21);
        for (int i = 0; i < 20; ++i) {
            PointMap p = randomPoint(f2id, rng);
            PointMap there = applyTransition(f2id, t, p, inst);
            PointMap back = applyTransition(f2id, inv, there, inst);
            CHECK(back == p);
        }
    }
}

TEST_CASE("rational linear algebra") {
    RatMatrix m(2, 2);
    m.at(0, 0) = Rational(1);
    m.at(0, 1) = Rational(2);
    m.at(1, 0) = Rational(3);
    m.at(1, 1) = Rational(4);
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK(m * *inv == RatMatrix::identity(2));
    CHECK(rank(m) == 2);
    RatMatrix sing(2, 2);
    sing.at(0, 0) = Rational(1);
    sing.at(0, 1) = Rational(2);
    sing.at(1, 0) = Rational(2);
    sing.at(1, 1) = Rational(4);
    CHECK(rank(sing) == 1);
    CHECK(!inverse(sing).has_value());
}

TEST_CASE("fixed locus of the zero combination is the whole bundle") {
    Presentation d = fullLineariseDirect(fixtures::degree2F());
    Presentation same = fixedLocus(d, WeightCombo({0, 0}));
    same.name = d.name;
    CHECK(samePresentation(same, d));
}

TEST_CASE("surgery error paths") {
    SUBCASE("truncate rejects a retained law that mentions a removed coordinate") {
        Presentation p;
        p.name = "BadTower";
        p.ncomp = 1;
        p.baseFamilyName = "x";
        p.families.push_back({"x", {}, 1, MultiWeight::zeros(1)});
        p.families.push_back({"y", {}, 1, MultiWeight({1})});
        p.families.push_back({"z", {}, 1, MultiWeight({2})});
        p.charts = {"c0", "c1"};
        Transition t{"c0", "c1", {}};
        auto x = p.families[0].coord(1);
        auto y = p.families[1].coord(1);
        auto z = p.families[2].coord(1);
        t.laws[x.key()] = C(x);
        t.laws[y.key()] = C(z); // inhomogeneous on purpose: y-law uses z
        t.laws[z.key()] = C(z);
        p.transitions.push_back(t);
        CHECK_THROWS_WITH_AS(truncate(p, WeightCombo::total(1), 1),
                             doctest::Contains("removed coordinate"), SpecError);
    }

    SUBCASE("zero_negative rejects laws of removed coordinates that survive") {
        Presentation p;
        p.name = "NotABundle";
        p.ncomp = 2;
        p.baseFamilyName = "x";
        p.families.push_back({"x", {}, 1, MultiWeight::zeros(2)});
        p.families.push_back({"u", {}, 1, MultiWeight({0, 1})}); // X-weight -1
        p.families.push_back({"v", {}, 1, MultiWeight({1, 0})});
        p.charts = {"c0", "c1"};
        Transition t{"c0", "c1", {}};
        auto x = p.families[0].coord(1);
        auto u = p.families[1].coord(1);
        auto v = p.families[2].coord(1);
        t.laws[x.key()] = C(x);
        t.laws[u.key()] = C(u) + C(v); // does not vanish when u -> 0
        t.laws[v.key()] = C(v);
        p.transitions.push_back(t);
        CHECK_THROWS_WITH_AS(zeroNegative(p, WeightCombo({1, -1})),
                             doctest::Contains("does not vanish"), SpecError);
    }
}
