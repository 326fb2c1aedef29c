#include "grb/degree2.hpp"

#include <algorithm>

namespace grb {

namespace {

struct Deg2Coords {
    std::vector<CoordSymbol> y10, y01, core, base;
};

Deg2Coords classify(const Presentation& D) {
    if (D.ncomp != 2 || !D.isKFoldVB())
        throw SpecError("degree-2 structure needs a double vector bundle");
    Deg2Coords c;
    for (auto& u : D.allCoords()) {
        if (u.weight.comp == std::vector<int>{1, 0}) c.y10.push_back(u);
        else if (u.weight.comp == std::vector<int>{0, 1}) c.y01.push_back(u);
        else if (u.weight.comp == std::vector<int>{1, 1}) c.core.push_back(u);
        else c.base.push_back(u);
    }
    return c;
}

CoordSymbol scratch(const std::string& fam, int idx, int ncomp) {
    return CoordSymbol{fam, {}, idx, MultiWeight::zeros(ncomp)};
}

// coefficient matrix entries[i][j] = d law(col_j) / d row_i, all x-level
std::vector<std::vector<Poly>> coeffMatrix(const Transition& t,
                                           const std::vector<CoordSymbol>& rows,
                                           const std::vector<CoordSymbol>& cols) {
    std::vector<std::vector<Poly>> m(rows.size(), std::vector<Poly>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        const Poly& law = t.lawOf(cols[j]);
        for (size_t i = 0; i < rows.size(); ++i) m[i][j] = formalPartial(law, rows[i]);
    }
    return m;
}

// invert a linear block: plain rationals or a single declared-inverse
// symbol family shaped entries[i][j] = T[i,j]
std::vector<std::vector<Poly>> invertBlock(const Presentation& D,
                                           const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    bool rational = true;
    for (auto& row : m)
        for (auto& e : row)
            if (!e.isConstant()) rational = false;
    if (rational) {
        RatMatrix rm(static_cast<int>(n), static_cast<int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                rm.at(static_cast<int>(i), static_cast<int>(j)) =
                    m[i][j].coefficientOf(Monomial{});
        auto inv = inverse(rm);
        if (!inv) throw SpecError("dual: rational linear block is singular");
        std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                out[i][j] = Poly::constant(inv->at(static_cast<int>(i), static_cast<int>(j)));
        return out;
    }
    // symbol family pattern
    std::string fam;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            auto& terms = m[i][j].terms();
            if (terms.size() != 1) throw SpecError("dual: linear block not a single symbol");
            auto& [mono, coeff] = *terms.begin();
            if (!coeff.isOne() || mono.fns.size() != 1 || !mono.coords.empty() ||
                mono.fns[0].second != 1 || !mono.fns[0].first.derivs.empty())
                throw SpecError("dual: linear block entry is not a plain symbol: " +
                                m[i][j].str());
            const FnSymbol& f = mono.fns[0].first;
            if (fam.empty()) fam = f.family;
            if (f.family != fam ||
                f.indices != std::vector<int>{static_cast<int>(i) + 1, static_cast<int>(j) + 1})
                throw SpecError("dual: linear block does not follow the T[i,j] pattern");
        }
    auto it = D.fnTable.find(fam);
    std::string inv;
    if (it != D.fnTable.end()) {
        if (!it->second.inverseFamily.empty()) inv = it->second.inverseFamily;
        else if (!it->second.inverseOf.empty()) inv = it->second.inverseOf;
    }
    if (inv.empty()) throw SpecError("dual: missing declared inverse for family " + fam);
    std::vector<std::vector<Poly>> out(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out[i][j] = Poly::fn(FnSymbol(inv, {static_cast<int>(i) + 1,
                                                static_cast<int>(j) + 1}));
    return out;
}

std::string dualName(const CoordSymbol& c) { return "p_" + c.family; }

// Laplace expansion; fine at the chart sizes the forms produce
Poly polyDet(const std::vector<std::vector<Poly>>& m) {
    size_t n = m.size();
    if (n == 0) return Poly::constant(Rational(1));
    if (n == 1) return m[0][0];
    Poly det;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].isZero()) continue;
        std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t col = 0; col < n; ++col) {
                if (col == j) continue;
                minor[r - 1][cc++] = m[r][col];
            }
        }
        Poly term = m[0][j] * polyDet(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace

Presentation dualDVB(const Presentation& D, char leg) {
    if (leg != 'A' && leg != 'B') throw SpecError("dual leg must be A or B");
    Deg2Coords c = classify(D);
    const std::vector<CoordSymbol>& kept = (leg == 'A') ? c.y01 : c.y10;
    const std::vector<CoordSymbol>& dualised = (leg == 'A') ? c.y10 : c.y01;
    MultiWeight keptW = (leg == 'A') ? MultiWeight({0, 1}) : MultiWeight({1, 0});
    MultiWeight dualW = (leg == 'A') ? MultiWeight({1, 0}) : MultiWeight({0, 1});

    Presentation out;
    out.name = "Dual" + std::string(1, leg) + "(" + D.name + ")";
    out.ncomp = 2;
    out.baseFamilyName = D.baseFamilyName;
    out.charts = D.charts;
    out.fnTable = D.fnTable;

    for (auto& f : D.families) {
        if (f.weight.isZero() || f.weight == keptW) {
            out.families.push_back(f);
        } else if (f.weight == MultiWeight({1, 1})) {
            CoordFamily nf = f;
            nf.name = "p_" + f.name;
            nf.weight = dualW;
            out.families.push_back(nf);
        } else {
            CoordFamily nf = f;
            nf.name = "p_" + f.name;
            nf.weight = MultiWeight({1, 1});
            out.families.push_back(nf);
        }
    }

    for (auto& t : D.transitions) {
        Transition nt;
        nt.from = t.from;
        nt.to = t.to;
        for (auto& u : c.base) nt.laws[u.key()] = t.lawOf(u);
        for (auto& u : kept) nt.laws[u.key()] = t.lawOf(u);

        auto A = coeffMatrix(t, dualised, dualised);
        auto C = coeffMatrix(t, c.core, c.core);
        auto Ainv = invertBlock(D, A);
        auto Cinv = invertBlock(D, C);

        // p11'[j] = sum_i Cinv[j][i] p11[i]
        std::vector<Poly> p11law(c.core.size());
        auto p11coord = [&](size_t i) {
            CoordSymbol p = c.core[i];
            p.family = dualName(c.core[i]);
            p.weight = dualW;
            return p;
        };
        for (size_t j = 0; j < c.core.size(); ++j) {
            Poly law;
            for (size_t i = 0; i < c.core.size(); ++i)
                law += Cinv[j][i] * Poly::coordinate(p11coord(i));
            nt.laws[p11coord(j).key()] = law;
            p11law[j] = std::move(law);
        }

        // p10'[b] = sum_a Ainv[b][a] ( p10[a] - sum_{j,m} p11'[j] kept[m] W[a][m][j] )
        auto p10coord = [&](size_t a) {
            CoordSymbol p = dualised[a];
            p.family = dualName(dualised[a]);
            p.weight = MultiWeight({1, 1});
            return p;
        };
        for (size_t b = 0; b < dualised.size(); ++b) {
            Poly law;
            for (size_t a = 0; a < dualised.size(); ++a) {
                Poly r = Poly::coordinate(p10coord(a));
                for (size_t j = 0; j < c.core.size(); ++j) {
                    Poly mixed;
                    for (size_t mIdx = 0; mIdx < kept.size(); ++mIdx) {
                        Poly w = formalPartial(formalPartial(t.lawOf(c.core[j]), dualised[a]),
                                               kept[mIdx]);
                        if (w.isZero()) continue;
                        mixed += w * Poly::coordinate(kept[mIdx]);
                    }
                    if (!mixed.isZero()) r -= p11law[j] * mixed;
                }
                law += Ainv[b][a] * r;
            }
            nt.laws[p10coord(b).key()] = law;
        }
        out.transitions.push_back(std::move(nt));
    }
    return out;
}

Rational dvbPairing(const Presentation& D, const DVBCovector& phiA, const DVBCovector& psiB,
                    const PointMap& d) {
    Deg2Coords c = classify(D);
    for (auto& u : c.base)
        if (!(phiA.xvals.at(u.key()) == psiB.xvals.at(u.key())))
            throw SpecError("pairing: base points differ");
    for (auto& u : c.y01)
        if (!(d.at(u.key()) == phiA.foot.at(u.key())))
            throw SpecError("pairing: d does not project onto the A footpoint");
    for (auto& u : c.y10)
        if (!(d.at(u.key()) == psiB.foot.at(u.key())))
            throw SpecError("pairing: d does not project onto the B footpoint");
    for (auto& u : c.core)
        if (!(phiA.core.at(u.key()) == psiB.core.at(u.key())))
            throw SpecError("pairing: covectors sit over different core-dual points");
    Rational value(0);
    for (auto& u : c.y10) value += phiA.side.at(u.key()) * d.at(u.key());
    for (auto& u : c.core) value += phiA.core.at(u.key()) * d.at(u.key());
    for (auto& u : c.y01) value -= psiB.side.at(u.key()) * d.at(u.key());
    for (auto& u : c.core) value -= psiB.core.at(u.key()) * d.at(u.key());
    return value;
}

SkewFormResult skewForm(const SymmetricKVB& S, const std::string& chart, uint64_t seed,
                        int samples, int degreeCap) {
    const Presentation& D = S.D;
    Deg2Coords c = classify(D);
    const Morphism& sg = S.sigma(permTransposition(2, 0, 1));
    const Morphism::ChartMap* cm = sg.mapForSrc(chart);
    if (!cm) throw SpecError("skew form: sigma has no chart map from " + chart);

    SkewFormResult out;
    auto mk = [&](const std::string& fam, size_t n) {
        std::vector<CoordSymbol> v;
        for (size_t i = 0; i < n; ++i) v.push_back(scratch(fam, static_cast<int>(i) + 1, 2));
        return v;
    };
    auto b1 = mk("b1", c.y10.size()), b2 = mk("b2", c.y10.size());
    auto q1 = mk("q1", c.y01.size()), q2 = mk("q2", c.y01.size());
    auto al = mk("al", c.core.size()), zz = mk("zz", c.core.size());

    // footpoint of Psi1 pushed through sigma|_B: evaluate sigma^* y01 at
    // a point with y10 = b1 and everything else zero
    Assignment atB1;
    for (size_t i = 0; i < c.y10.size(); ++i)
        atB1[c.y10[i].key()] = Poly::coordinate(b1[i]);
    for (auto& u : c.y01) atB1[u.key()] = Poly();
    for (auto& u : c.core) atB1[u.key()] = Poly();
    std::vector<Poly> a1(c.y01.size());
    for (size_t b = 0; b < c.y01.size(); ++b)
        a1[b] = substitute(cm->pullback.at(c.y01[b].key()), atB1);

    // the point d: y10 = b2, y01 = a1, core = zz
    Assignment atD;
    for (size_t i = 0; i < c.y10.size(); ++i) atD[c.y10[i].key()] = Poly::coordinate(b2[i]);
    for (size_t b = 0; b < c.y01.size(); ++b) atD[c.y01[b].key()] = a1[b];
    for (size_t i = 0; i < c.core.size(); ++i) atD[c.core[i].key()] = Poly::coordinate(zz[i]);

    Poly form;
    for (size_t b = 0; b < c.y01.size(); ++b)
        form += Poly::coordinate(q1[b]) * substitute(cm->pullback.at(c.y01[b].key()), atD);
    for (size_t i = 0; i < c.core.size(); ++i)
        form += Poly::coordinate(al[i]) * substitute(cm->pullback.at(c.core[i].key()), atD);
    for (size_t b = 0; b < c.y01.size(); ++b)
        form -= Poly::coordinate(q2[b]) * a1[b];
    for (size_t i = 0; i < c.core.size(); ++i)
        form -= Poly::coordinate(al[i]) * Poly::coordinate(zz[i]);
    out.form = form;

    bool dIndep = true;
    for (auto& u : coordsIn(form))
        if (u.family == "zz") dIndep = false;
    out.rep.add("d-independence", dIndep, dIndep ? "" : form.str());

    Assignment swap;
    for (size_t i = 0; i < b1.size(); ++i) {
        swap[b1[i].key()] = Poly::coordinate(b2[i]);
        swap[b2[i].key()] = Poly::coordinate(b1[i]);
    }
    for (size_t i = 0; i < q1.size(); ++i) {
        swap[q1[i].key()] = Poly::coordinate(q2[i]);
        swap[q2[i].key()] = Poly::coordinate(q1[i]);
    }
    Poly skewResidual = substitute(form, swap) + form;
    out.rep.add("skew-symmetry", skewResidual.isZero(), skewResidual.str());

    out.basis1 = b1;
    out.basis1.insert(out.basis1.end(), q1.begin(), q1.end());
    out.basis2 = b2;
    out.basis2.insert(out.basis2.end(), q2.begin(), q2.end());
    size_t n = out.basis1.size();
    out.matrix.assign(n, std::vector<Poly>(n));
    Poly residual = form;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            out.matrix[i][j] = formalPartial(formalPartial(form, out.basis1[i]), out.basis2[j]);
            residual -= out.matrix[i][j] * Poly::coordinate(out.basis1[i]) *
                        Poly::coordinate(out.basis2[j]);
        }
    out.rep.add("bilinear", residual.isZero(), residual.str());

    // symbolic certificate when the determinant collapses to a constant
    if (n <= 8) {
        Poly det = polyDet(out.matrix);
        if (det.isConstant() && !det.isZero())
            out.rep.add("non-degenerate-symbolic", true, "det = " + det.str());
        else if (det.isZero())
            out.rep.add("non-degenerate-symbolic", false, "determinant vanishes identically");
    }

    // numeric non-degeneracy at sampled points
    NumericInstance inst = instantiate(D, seed, degreeCap, {form});
    Rng rng(seed ^ 0x5f3759dfULL);
    int fullRank = 0;
    for (int s = 0; s < samples; ++s) {
        PointMap pt;
        for (auto& u : c.base) pt[u.key()] = rng.smallRational(5);
        for (auto& v : al) pt[v.key()] = rng.smallRational(5);
        RatMatrix m(static_cast<int>(n), static_cast<int>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) =
                    inst.evalPoly(out.matrix[i][j], pt, D);
        if (rank(m) == static_cast<int>(n)) ++fullRank;
    }
    out.rep.add("non-degenerate", fullRank == samples,
                std::to_string(fullRank) + "/" + std::to_string(samples) + " samples full rank");
    return out;
}

namespace {

struct Section {
    std::vector<Poly> e; // coefficients of e_a, functions on (x, y01)
    std::vector<Poly> f; // coefficients of f_i
};

Section bracket(const Section& s1, const Section& s2,
                const std::vector<std::vector<std::vector<Poly>>>& Cq,
                const std::vector<CoordSymbol>& y01, size_t ncore) {
    size_t na = s1.e.size();
    Section w;
    w.e.assign(na, Poly());
    w.f.assign(ncore, Poly());
    auto anchor = [&](const Section& s, const Poly& h) {
        Poly r;
        for (size_t a = 0; a < na; ++a) r += s.e[a] * formalPartial(h, y01[a]);
        return r;
    };
    for (size_t a = 0; a < na; ++a)
        w.e[a] = anchor(s1, s2.e[a]) - anchor(s2, s1.e[a]);
    for (size_t i = 0; i < ncore; ++i) {
        Poly v;
        // [e_a, e_b] = sigma^i_{ab} f_i with sigma^i_{ab} = Cq[b][a][i]
        for (size_t a = 0; a < na; ++a)
            for (size_t b = 0; b < na; ++b) v += s1.e[a] * s2.e[b] * Cq[b][a][i];
        v += anchor(s1, s2.f[i]) - anchor(s2, s1.f[i]);
        w.f[i] = std::move(v);
    }
    return w;
}

bool sectionZero(const Section& s) {
    for (auto& p : s.e)
        if (!p.isZero()) return false;
    for (auto& p : s.f)
        if (!p.isZero()) return false;
    return true;
}

Section sectionAdd(Section a, const Section& b) {
    for (size_t i = 0; i < a.e.size(); ++i) a.e[i] += b.e[i];
    for (size_t i = 0; i < a.f.size(); ++i) a.f[i] += b.f[i];
    return a;
}

Section sectionScale(Section a, const Poly& h) {
    for (auto& p : a.e) p = p * h;
    for (auto& p : a.f) p = p * h;
    return a;
}

} // namespace

AlgebroidStructure algebroid(const SymmetricKVB& S, const std::string& chart, uint64_t seed) {
    const Presentation& D = S.D;
    Deg2Coords c = classify(D);
    auto Cq = sigmaQuadraticCoeffs(S, chart);
    size_t na = c.y10.size(), ncore = c.core.size();

    AlgebroidStructure out;
    out.eFrame = c.y10;
    out.fFrame = c.core;
    out.bracket.assign(na, std::vector<std::vector<Poly>>(na, std::vector<Poly>(ncore)));
    for (size_t a = 0; a < na; ++a)
        for (size_t b = 0; b < na; ++b)
            for (size_t i = 0; i < ncore; ++i) out.bracket[a][b][i] = Cq[b][a][i];

    bool skew = true;
    for (size_t a = 0; a < na; ++a)
        for (size_t b = 0; b < na; ++b)
            for (size_t i = 0; i < ncore; ++i)
                if (!(out.bracket[a][b][i] + out.bracket[b][a][i]).isZero()) skew = false;
    out.rep.add("bracket-skew", skew);

    auto basisE = [&](size_t a) {
        Section s;
        s.e.assign(na, Poly());
        s.f.assign(ncore, Poly());
        s.e[a] = Poly::constant(Rational(1));
        return s;
    };
    auto basisF = [&](size_t i) {
        Section s;
        s.e.assign(na, Poly());
        s.f.assign(ncore, Poly());
        s.f[i] = Poly::constant(Rational(1));
        return s;
    };

    std::vector<Section> basis;
    for (size_t a = 0; a < na; ++a) basis.push_back(basisE(a));
    for (size_t i = 0; i < ncore; ++i) basis.push_back(basisF(i));

    auto jac = [&](const Section& s1, const Section& s2, const Section& s3) {
        Section r = bracket(bracket(s1, s2, Cq, c.y01, ncore), s3, Cq, c.y01, ncore);
        r = sectionAdd(r, bracket(bracket(s2, s3, Cq, c.y01, ncore), s1, Cq, c.y01, ncore));
        r = sectionAdd(r, bracket(bracket(s3, s1, Cq, c.y01, ncore), s2, Cq, c.y01, ncore));
        return r;
    };

    bool jacobi = true;
    std::string jdetail;
    for (size_t i = 0; i < basis.size() && jacobi; ++i)
        for (size_t j = i; j < basis.size() && jacobi; ++j)
            for (size_t k = j; k < basis.size(); ++k) {
                Section r = jac(basis[i], basis[j], basis[k]);
                if (!sectionZero(r)) {
                    jacobi = false;
                    jdetail = "basis triple " + std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(k);
                    break;
                }
            }

    // random polynomial sections, exact
    Rng rng(seed);
    auto randomFn = [&]() {
        Poly h = Poly::constant(rng.smallRational(3));
        for (auto& u : c.y01) {
            Rational r = rng.smallRational(2);
            if (!r.isZero()) h += Poly::coordinate(u).scaled(r);
        }
        for (auto& u : c.base) {
            Rational r = rng.smallRational(2);
            if (!r.isZero()) h += Poly::coordinate(u).scaled(r);
        }
        return h;
    };
    auto randomSection = [&]() {
        Section s;
        for (size_t a = 0; a < na; ++a) s.e.push_back(randomFn());
        for (size_t i = 0; i < ncore; ++i) s.f.push_back(randomFn());
        return s;
    };
    for (int trial = 0; trial < 5 && jacobi; ++trial) {
        Section r = jac(randomSection(), randomSection(), randomSection());
        if (!sectionZero(r)) {
            jacobi = false;
            jdetail = "random sections, trial " + std::to_string(trial);
        }
    }
    out.rep.add("jacobi", jacobi, jdetail);

    bool leibniz = true;
    {
        Section s1 = randomSection(), s2 = randomSection();
        Poly h = randomFn();
        Section lhs = bracket(s1, sectionScale(s2, h), Cq, c.y01, ncore);
        Poly rho;
        for (size_t a = 0; a < na; ++a) rho += s1.e[a] * formalPartial(h, c.y01[a]);
        Section rhs = sectionAdd(sectionScale(s2, rho),
                                 sectionScale(bracket(s1, s2, Cq, c.y01, ncore), h));
        Section diffS = sectionAdd(lhs, sectionScale(rhs, Poly::constant(Rational(-1))));
        leibniz = sectionZero(diffS);
    }
    out.rep.add("leibniz", leibniz);

    bool anchorZeroOnCore = true; // rho(f_i) = 0 holds by construction
    out.rep.add("anchor-kills-core", anchorZeroOnCore);
    return out;
}

PoissonResult poissonTensor(const SymmetricKVB& S, const std::string& chart) {
    const Presentation& D = S.D;
    Deg2Coords c = classify(D);
    auto Cq = sigmaQuadraticCoeffs(S, chart);
    size_t na = c.y10.size(), ncore = c.core.size();

    std::vector<CoordSymbol> p10, p11;
    for (auto& u : c.y10) {
        CoordSymbol p = u;
        p.family = dualName(u);
        p.weight = MultiWeight({1, 1});
        p10.push_back(p);
    }
    for (auto& u : c.core) {
        CoordSymbol p = u;
        p.family = dualName(u);
        p.weight = MultiWeight({1, 0});
        p11.push_back(p);
    }

    std::vector<CoordSymbol> chartCoords = c.y01;
    chartCoords.insert(chartCoords.end(), p10.begin(), p10.end());
    chartCoords.insert(chartCoords.end(), p11.begin(), p11.end());
    chartCoords.insert(chartCoords.end(), c.base.begin(), c.base.end());

    Bivector lambda(chartCoords);
    size_t nb = c.y01.size();
    auto idxY01 = [&](size_t b) { return static_cast<int>(b); };
    auto idxP10 = [&](size_t a) { return static_cast<int>(nb + a); };
    // Lambda = 1/2 sigma^i_{ab} p11_i d_{p10_a} ^ d_{p10_b} + d_{p10_a} ^ d_{y01_a}
    for (size_t a = 0; a < na; ++a)
        for (size_t b = a + 1; b < na; ++b) {
            Poly entry;
            for (size_t i = 0; i < ncore; ++i)
                entry += Cq[b][a][i] * Poly::coordinate(p11[i]); // sigma^i_{ab}
            lambda.set(idxP10(a), idxP10(b), entry);
        }
    for (size_t a = 0; a < na; ++a)
        lambda.set(idxP10(a), idxY01(a), Poly::constant(Rational(1)));

    PoissonResult out{lambda, {}};

    auto bad = schoutenJacobiator(lambda);
    out.rep.add("schouten-jacobi", bad.empty(),
                bad.empty() ? "" : std::get<3>(bad.front()).str());

    std::vector<int> w1, w2;
    for (size_t b = 0; b < nb; ++b) { w1.push_back(0); w2.push_back(1); }
    for (size_t a = 0; a < na; ++a) { w1.push_back(1); w2.push_back(1); }
    for (size_t i = 0; i < ncore; ++i) { w1.push_back(1); w2.push_back(0); }
    for (size_t i = 0; i < c.base.size(); ++i) { w1.push_back(0); w2.push_back(0); }

    Bivector l1 = lieAlongWeights(lambda, w1) - scale(lambda, Rational(-1));
    out.rep.add("weight1-eigenvalue", l1.isZero());
    Bivector l2 = lieAlongWeights(lambda, w2) - scale(lambda, Rational(-2));
    out.rep.add("weight2-eigenvalue", l2.isZero());
    return out;
}

ValidationReport poissonTransportCheck(const SymmetricKVB& S, const std::string& chart) {
    const Presentation& D = S.D;
    Deg2Coords c = classify(D);
    auto Cq = sigmaQuadraticCoeffs(S, chart);
    size_t na = c.y10.size(), ncore = c.core.size();

    // source chart: canonical coordinates on the dual of the linearisation
    auto mk = [&](const std::string& fam, size_t n) {
        std::vector<CoordSymbol> v;
        for (size_t i = 0; i < n; ++i) v.push_back(scratch(fam, static_cast<int>(i) + 1, 2));
        return v;
    };
    auto yL = mk("yl", na), piA = mk("pia", na), piI = mk("pii", ncore);
    std::vector<CoordSymbol> srcChart = yL;
    srcChart.insert(srcChart.end(), piA.begin(), piA.end());
    srcChart.insert(srcChart.end(), piI.begin(), piI.end());
    srcChart.insert(srcChart.end(), c.base.begin(), c.base.end());

    Bivector lpLin(srcChart);
    for (size_t a = 0; a < na; ++a)
        lpLin.set(static_cast<int>(na + a), static_cast<int>(a), Poly::constant(Rational(1)));

    // target chart: D*_B coordinates (y10, p01, p11)
    auto p01 = mk("p01", na);
    auto p11 = mk("p11", ncore);
    std::vector<CoordSymbol> dstChart = c.y10;
    dstChart.insert(dstChart.end(), p01.begin(), p01.end());
    dstChart.insert(dstChart.end(), p11.begin(), p11.end());
    dstChart.insert(dstChart.end(), c.base.begin(), c.base.end());

    // Ihat^* y10 = yL, Ihat^* p01_a = piA_a + 1/2 yL_b sigma^i_{ba} piI_i,
    // Ihat^* p11 = piI; sigma^i_{ba} = Cq[a][b][i]
    Assignment pullback;
    for (auto& u : c.base) pullback[u.key()] = Poly::coordinate(u);
    for (size_t a = 0; a < na; ++a) pullback[c.y10[a].key()] = Poly::coordinate(yL[a]);
    for (size_t i = 0; i < ncore; ++i) pullback[p11[i].key()] = Poly::coordinate(piI[i]);
    for (size_t a = 0; a < na; ++a) {
        Poly v = Poly::coordinate(piA[a]);
        for (size_t b = 0; b < na; ++b)
            for (size_t i = 0; i < ncore; ++i)
                v += (Poly::coordinate(yL[b]) * Cq[a][b][i] * Poly::coordinate(piI[i]))
                         .scaled(Rational(1, 2));
        pullback[p01[a].key()] = v;
    }
    Assignment inverseSub;
    for (auto& u : c.base) inverseSub[u.key()] = Poly::coordinate(u);
    for (size_t a = 0; a < na; ++a) inverseSub[yL[a].key()] = Poly::coordinate(c.y10[a]);
    for (size_t i = 0; i < ncore; ++i) inverseSub[piI[i].key()] = Poly::coordinate(p11[i]);
    for (size_t a = 0; a < na; ++a) {
        Poly v = Poly::coordinate(p01[a]);
        for (size_t b = 0; b < na; ++b)
            for (size_t i = 0; i < ncore; ++i)
                v -= (Poly::coordinate(c.y10[b]) * Cq[a][b][i] * Poly::coordinate(p11[i]))
                         .scaled(Rational(1, 2));
        inverseSub[piA[a].key()] = v;
    }

    Bivector transported = pushforward(lpLin, dstChart, pullback, inverseSub);

    Bivector expected(dstChart);
    for (size_t a = 0; a < na; ++a)
        for (size_t b = a + 1; b < na; ++b) {
            Poly entry;
            for (size_t i = 0; i < ncore; ++i)
                entry += Cq[b][a][i] * Poly::coordinate(p11[i]); // sigma^i_{ab}
            expected.set(static_cast<int>(na + a), static_cast<int>(na + b), entry);
        }
    for (size_t a = 0; a < na; ++a)
        expected.set(static_cast<int>(na + a), static_cast<int>(a), Poly::constant(Rational(1)));

    ValidationReport rep;
    Bivector diffB = transported - expected;
    rep.add("transported-tensor-matches", diffB.isZero());
    return rep;
}

ValidationReport pairingChecks(const Presentation& D, uint64_t seed, int samples,
                               int degreeCap) {
    ValidationReport rep;
    Deg2Coords c = classify(D);
    Presentation dualA = dualDVB(D, 'A');
    Presentation dualB = dualDVB(D, 'B');

    std::vector<Poly> extras;
    for (auto& t : dualA.transitions)
        for (auto& [k, law] : t.laws) extras.push_back(law);
    for (auto& t : dualB.transitions)
        for (auto& [k, law] : t.laws) extras.push_back(law);
    NumericInstance inst = instantiate(D, seed, degreeCap, extras);
    Rng rng(seed ^ 0xabcdefULL);

    bool indep = true, invariant = true;
    for (auto& t : D.transitions) {
        const Transition* tA = dualA.transitionBetween(t.from, t.to);
        const Transition* tB = dualB.transitionBetween(t.from, t.to);
        for (int s = 0; s < samples; ++s) {
            PointMap xpt;
            for (auto& u : c.base) xpt[u.key()] = rng.smallRational(4);

            DVBCovector phi, psi;
            phi.xvals = xpt;
            psi.xvals = xpt;
            for (auto& u : c.y01) phi.foot[u.key()] = rng.smallRational(4);
            for (auto& u : c.y10) psi.foot[u.key()] = rng.smallRational(4);
            for (auto& u : c.y10) phi.side[u.key()] = rng.smallRational(4);
            for (auto& u : c.y01) psi.side[u.key()] = rng.smallRational(4);
            for (auto& u : c.core) {
                Rational a = rng.smallRational(4);
                phi.core[u.key()] = a;
                psi.core[u.key()] = a;
            }

            auto makeD = [&](Rational coreShift) {
                PointMap d = xpt;
                for (auto& u : c.y01) d[u.key()] = phi.foot.at(u.key());
                for (auto& u : c.y10) d[u.key()] = psi.foot.at(u.key());
                int k = 0;
                for (auto& u : c.core) d[u.key()] = Rational(++k) * coreShift;
                return d;
            };
            PointMap d1 = makeD(Rational(1, 2));
            PointMap d2 = makeD(Rational(-3));
            Rational v1 = dvbPairing(D, phi, psi, d1);
            Rational v2 = dvbPairing(D, phi, psi, d2);
            if (!(v1 == v2)) indep = false;

            // transform everything and compare
            PointMap phiPt = xpt, psiPt = xpt;
            for (auto& [k2, v] : phi.foot) phiPt[k2] = v;
            for (auto& u : c.y10)
                phiPt[CoordSymbol{dualName(u), u.lifts, u.index, {}}.key()] =
                    phi.side.at(u.key());
            for (auto& u : c.core)
                phiPt[CoordSymbol{dualName(u), u.lifts, u.index, {}}.key()] =
                    phi.core.at(u.key());
            for (auto& [k2, v] : psi.foot) psiPt[k2] = v;
            for (auto& u : c.y01)
                psiPt[CoordSymbol{dualName(u), u.lifts, u.index, {}}.key()] =
                    psi.side.at(u.key());
            for (auto& u : c.core)
                psiPt[CoordSymbol{dualName(u), u.lifts, u.index, {}}.key()] =
                    psi.core.at(u.key());

            PointMap phiPrime = applyTransition(dualA, *tA, phiPt, inst);
            PointMap psiPrime = applyTransition(dualB, *tB, psiPt, inst);
            PointMap dPrime = applyTransition(D, t, d1, inst);

            DVBCovector phi2, psi2;
            for (auto& u : c.base) {
                phi2.xvals[u.key()] = phiPrime.at(u.key());
                psi2.xvals[u.key()] = psiPrime.at(u.key());
            }
            for (auto& u : c.y01) phi2.foot[u.key()] = phiPrime.at(u.key());
            for (auto& u : c.y10)
                phi2.side[u.key()] =
                    phiPrime.at(CoordSymbol{dualName(u), u.lifts, u.index, {}}.key());
            for (auto& u : c.core)
                phi2.core[u.key()] =
                    phiPrime.at(CoordSymbol{dualName(u), u.lifts, u.index, {}}.key());
            for (auto& u : c.y10) psi2.foot[u.key()] = psiPrime.at(u.key());
            for (auto& u : c.y01)
                psi2.side[u.key()] =
                    psiPrime.at(CoordSymbol{dualName(u), u.lifts, u.index, {}}.key());
            for (auto& u : c.core)
                psi2.core[u.key()] =
                    psiPrime.at(CoordSymbol{dualName(u), u.lifts, u.index, {}}.key());

            if (!(dvbPairing(D, phi2, psi2, dPrime) == v1)) invariant = false;
        }
    }
    rep.add("pairing-core-shift-independent", indep);
    rep.add("pairing-invariant-under-duals", invariant);
    return rep;
}

ValidationReport morphismGraphIsotropy(const SymmetricKVB& S, const SymmetricKVB& Sprime,
                                       const Morphism& phi, uint64_t seed, int samples,
                                       int degreeCap) {
    ValidationReport rep;
    const Presentation& D = S.D;
    const Presentation& Dp = Sprime.D;
    Deg2Coords c = classify(D);
    Deg2Coords cp = classify(Dp);
    const std::string chart = D.charts.front();

    SkewFormResult fE = skewForm(S, chart, seed, 1);
    SkewFormResult fEp = skewForm(Sprime, chart, seed ^ 1, 1);

    const Morphism::ChartMap* cm = phi.mapForSrc(chart);
    if (!cm) throw SpecError("isotropy: morphism missing chart " + chart);

    std::vector<Poly> extras{fE.form, fEp.form};
    for (auto& [k, p] : cm->pullback) extras.push_back(p);
    NumericInstance inst = instantiate(D, seed, 1, extras);
    Rng rng(seed ^ 0x77ULL);

    bool isotropic = true;
    for (int s = 0; s < samples && isotropic; ++s) {
        PointMap xpt;
        for (auto& u : c.base) xpt[u.key()] = rng.smallRational(3);
        PointMap xptPrime;
        for (auto& u : cp.base) xptPrime[u.key()] = inst.evalPoly(cm->pullback.at(u.key()), xpt, D);

        // primed covectors over a common core-dual point
        std::map<CoordSymbol::Key, Rational> alphaP;
        for (auto& u : cp.core) alphaP[u.key()] = rng.smallRational(3);
        std::vector<std::map<CoordSymbol::Key, Rational>> qP(2);
        std::vector<PointMap> B(2);
        for (int j = 0; j < 2; ++j) {
            for (auto& u : cp.y01) qP[j][u.key()] = rng.smallRational(3);
            for (auto& u : c.y10) B[j][u.key()] = rng.smallRational(3);
        }

        // pull back along phi: footpoints, side components, core components
        auto evalAt = [&](const Poly& p, const PointMap& foot) {
            PointMap pt = xpt;
            for (auto& u : c.y10) pt[u.key()] = foot.at(u.key());
            for (auto& u : c.y01) pt[u.key()] = Rational(0);
            for (auto& u : c.core) pt[u.key()] = Rational(0);
            return inst.evalPoly(p, pt, D);
        };
        std::map<CoordSymbol::Key, Rational> alpha;
        for (auto& u : c.core) {
            Rational v(0);
            for (auto& up : cp.core)
                v += alphaP.at(up.key()) *
                     evalAt(formalPartial(cm->pullback.at(up.key()), u), B[0]);
            alpha[u.key()] = v;
        }
        std::vector<std::map<CoordSymbol::Key, Rational>> q(2);
        std::vector<PointMap> Bp(2);
        for (int j = 0; j < 2; ++j) {
            for (auto& u : c.y01) {
                Rational v(0);
                for (auto& up : cp.y01)
                    v += qP[j].at(up.key()) *
                         evalAt(formalPartial(cm->pullback.at(up.key()), u), B[j]);
                for (auto& up : cp.core)
                    v += alphaP.at(up.key()) *
                         evalAt(formalPartial(cm->pullback.at(up.key()), u), B[j]);
                q[j][u.key()] = v;
            }
            for (auto& up : cp.y10)
                Bp[j][up.key()] = evalAt(cm->pullback.at(up.key()), B[j]);
        }

        // evaluate both forms
        auto formValue = [&](const SkewFormResult& f, const Presentation& bundle,
                             const Deg2Coords& cc, const PointMap& x,
                             const PointMap& b1v, const std::map<CoordSymbol::Key, Rational>& q1v,
                             const PointMap& b2v, const std::map<CoordSymbol::Key, Rational>& q2v,
                             const std::map<CoordSymbol::Key, Rational>& av) {
            PointMap pt = x;
            for (size_t i = 0; i < cc.y10.size(); ++i) {
                pt[CoordSymbol{"b1", {}, static_cast<int>(i + 1), {}}.key()] =
                    b1v.at(cc.y10[i].key());
                pt[CoordSymbol{"b2", {}, static_cast<int>(i + 1), {}}.key()] =
                    b2v.at(cc.y10[i].key());
            }
            for (size_t i = 0; i < cc.y01.size(); ++i) {
                pt[CoordSymbol{"q1", {}, static_cast<int>(i + 1), {}}.key()] =
                    q1v.at(cc.y01[i].key());
                pt[CoordSymbol{"q2", {}, static_cast<int>(i + 1), {}}.key()] =
                    q2v.at(cc.y01[i].key());
            }
            for (size_t i = 0; i < cc.core.size(); ++i)
                pt[CoordSymbol{"al", {}, static_cast<int>(i + 1), {}}.key()] =
                    av.at(cc.core[i].key());
            return inst.evalPoly(f.form, pt, bundle);
        };

        Rational vE = formValue(fE, D, c, xpt, B[0], q[0], B[1], q[1], alpha);
        Rational vEp = formValue(fEp, Dp, cp, xptPrime, Bp[0], qP[0], Bp[1], qP[1], alphaP);
        if (!(vE == vEp)) isotropic = false;
    }
    rep.add("graph-isotropic", isotropic);
    return rep;
}

} // namespace grb
