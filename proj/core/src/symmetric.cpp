#include "grb/symmetric.hpp"

#include <algorithm>
#include <set>

namespace grb {

namespace {

// fibre coordinates of a symmetric k-fold VB must carry adapted labels:
// lift multi-index equal to the weight
void requireAdaptedLabels(const Presentation& D) {
    for (auto& f : D.families) {
        if (f.weight.isZero()) continue;
        if (f.lifts != f.weight.comp)
            throw SpecError("symmetric structure needs adapted eps labels; family " +
                            f.coord(1).str() + " has weight " + f.weight.str());
    }
}

} // namespace

const Morphism& SymmetricKVB::sigma(const Perm& g) const {
    auto it = sigmas.find(g);
    if (it == sigmas.end())
        throw SpecError("sigma family has no morphism for " + permStr(g));
    return it->second;
}

SymmetricKVB makeSymmetricKVB(Presentation D, std::map<Perm, Morphism> given) {
    requireAdaptedLabels(D);
    int k = D.ncomp;
    SymmetricKVB S{std::move(D), std::move(given)};
    S.sigmas[permIdentity(k)] = identityMorphism(S.D);

    // close under right multiplication by the provided generators
    std::vector<Perm> gens;
    for (auto& [g, m] : S.sigmas)
        if (!(g == permIdentity(k))) gens.push_back(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<Perm, Morphism>> fresh;
        for (auto& [g, sg] : S.sigmas)
            for (auto& t : gens) {
                Perm h = permCompose(g, t);
                if (S.sigmas.count(h)) continue;
                // sigma_{g.t}^* = sigma_t^* after sigma_g^*
                fresh.emplace_back(h, composeMorphisms(S.sigma(t), sg, "sigma" + permStr(h)));
            }
        for (auto& [h, m] : fresh)
            if (!S.sigmas.count(h)) {
                S.sigmas.emplace(h, m);
                grew = true;
            }
    }
    size_t order = 1;
    for (int i = 2; i <= k; ++i) order *= static_cast<size_t>(i);
    if (S.sigmas.size() != order)
        throw SpecError("sigma generators do not generate S_k (" +
                        std::to_string(S.sigmas.size()) + " of " + std::to_string(order) + ")");
    return S;
}

SymmetricKVB canonicalSymmetricKVB(const Presentation& linDirect) {
    std::map<Perm, Morphism> sig;
    for (auto& g : allPerms(linDirect.ncomp)) sig[g] = canonicalSigma(linDirect, g);
    return makeSymmetricKVB(linDirect, std::move(sig));
}

std::vector<std::vector<std::vector<Poly>>> sigmaQuadraticCoeffs(const SymmetricKVB& S,
                                                                 const std::string& chart) {
    if (S.k() != 2) throw SpecError("sigma quadratic coefficients need k = 2");
    const Presentation& D = S.D;
    std::vector<CoordSymbol> y10, y01, core;
    for (auto& c : D.fibreCoords()) {
        if (c.weight.comp == std::vector<int>{1, 0}) y10.push_back(c);
        if (c.weight.comp == std::vector<int>{0, 1}) y01.push_back(c);
        if (c.weight.comp == std::vector<int>{1, 1}) core.push_back(c);
    }
    const Morphism& sg = S.sigma(permTransposition(2, 0, 1));
    const Morphism::ChartMap* cm = sg.mapForSrc(chart);
    if (!cm) throw SpecError("sigma has no chart map from " + chart);
    std::vector<std::vector<std::vector<Poly>>> out(
        y10.size(), std::vector<std::vector<Poly>>(y01.size(), std::vector<Poly>(core.size())));
    for (size_t i = 0; i < core.size(); ++i) {
        Poly diff = cm->pullback.at(core[i].key()) - Poly::coordinate(core[i]);
        for (size_t a = 0; a < y10.size(); ++a)
            for (size_t b = 0; b < y01.size(); ++b)
                out[a][b][i] = formalPartial(formalPartial(diff, y10[a]), y01[b]);
    }
    return out;
}

ValidationReport validateSymmetric(const SymmetricKVB& S) {
    ValidationReport rep;
    const Presentation& D = S.D;
    int k = S.k();

    rep.add("k-fold-vector-bundle", D.isKFoldVB());

    // coordinate counts per weight level
    std::map<MultiWeight, int> counts;
    for (auto& f : D.families)
        if (!f.weight.isZero()) counts[f.weight] += f.count;
    bool levelsOk = true;
    std::string ldetail;
    for (auto& [w1, n1] : counts)
        for (auto& [w2, n2] : counts)
            if (w1.total() == w2.total() && n1 != n2) {
                levelsOk = false;
                ldetail = "N_eps mismatch: " + w1.str() + " has " + std::to_string(n1) +
                          ", " + w2.str() + " has " + std::to_string(n2);
            }
    rep.add("level-counts-match", levelsOk, ldetail);

    // each sigma_g is a morphism D -> D^g
    for (auto& [g, sg] : S.sigmas) {
        ValidationReport r = validateMorphism(D, flip(D, g), sg);
        rep.add("sigma" + permStr(g) + ":morphism", r.pass(),
                r.pass() ? "" : r.summary());
    }

    // sigma_e = id
    {
        const Morphism& se = S.sigma(permIdentity(k));
        bool ok = true;
        for (auto& cm : se.maps)
            for (auto& c : D.allCoords())
                if (!(cm.pullback.at(c.key()) == Poly::coordinate(c))) ok = false;
        rep.add("sigma(e)=id", ok);
    }

    // composition law over every pair
    bool compOk = true;
    std::string cdetail;
    for (auto& [g1, s1] : S.sigmas)
        for (auto& [g2, s2] : S.sigmas) {
            Perm h = permCompose(g1, g2);
            const Morphism& sh = S.sigma(h);
            for (auto& cm2 : s2.maps) {
                const Morphism::ChartMap* cm1 = s1.mapForSrc(cm2.srcChart);
                const Morphism::ChartMap* cmh = sh.mapForSrc(cm2.srcChart);
                if (!cm1 || !cmh) continue;
                for (auto& c : D.allCoords()) {
                    Poly lhs = substitute(cm1->pullback.at(c.key()), cm2.pullback);
                    if (!(lhs == cmh->pullback.at(c.key()))) {
                        compOk = false;
                        if (cdetail.empty())
                            cdetail = "(sigma_" + permStr(g1) + ")^" + permStr(g2) +
                                      " o sigma_" + permStr(g2) + " != sigma_" + permStr(h) +
                                      " at " + c.str() + ": " + lhs.str() + " vs " +
                                      cmh->pullback.at(c.key()).str();
                    }
                }
            }
        }
    rep.add("composition-law", compOk, cdetail);

    // core conditions for every transposition
    bool coreOk = true;
    std::string coreDetail;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Perm t = permTransposition(k, i, j);
            const Morphism& st = S.sigma(t);
            Assignment killOffCore;
            for (auto& c : D.allCoords())
                if (c.weight[i] != c.weight[j]) killOffCore[c.key()] = Poly();
            for (auto& cm : st.maps)
                for (auto& c : D.allCoords()) {
                    if (c.weight[i] != c.weight[j]) continue;
                    Poly restricted = substitute(cm.pullback.at(c.key()), killOffCore);
                    if (!(restricted == Poly::coordinate(c))) {
                        coreOk = false;
                        if (coreDetail.empty())
                            coreDetail = "sigma(" + std::to_string(i + 1) + "," +
                                         std::to_string(j + 1) + ") on core at " + c.str() +
                                         ": " + restricted.str();
                    }
                }
        }
    rep.add("core-conditions", coreOk, coreDetail);

    // degree 2: applying sigma twice forces skew quadratic coefficients
    if (k == 2) {
        bool skew = true;
        std::string sdetail;
        for (auto& chart : D.charts) {
            auto C = sigmaQuadraticCoeffs(S, chart);
            for (size_t a = 0; a < C.size(); ++a)
                for (size_t b = 0; b < C[a].size(); ++b)
                    for (size_t i = 0; i < C[a][b].size(); ++i) {
                        Poly sum = C[a][b][i] + C[b][a][i];
                        if (!sum.isZero()) {
                            skew = false;
                            if (sdetail.empty())
                                sdetail = "sigma^" + std::to_string(i + 1) + "_{" +
                                          std::to_string(b + 1) + std::to_string(a + 1) +
                                          "} + sigma^.._{" + std::to_string(a + 1) +
                                          std::to_string(b + 1) + "} = " + sum.str();
                        }
                    }
        }
        rep.add("degree2-sigma-skew", skew, sdetail);
    }
    return rep;
}

AdaptedSystem symmetrise(const SymmetricKVB& S) {
    requireAdaptedLabels(S.D);
    const Presentation& D = S.D;
    int k = S.k();
    Rational invFact = Rational::factorial(k).inv();
    auto perms = allPerms(k);

    // the orbit-aligned family for a given eps must exist with equal count
    auto familyAt = [&](const std::string& name, const std::vector<int>& eps) {
        const CoordFamily* f = D.findFamily({name, eps});
        if (!f)
            throw SpecError("symmetrise: no coordinate family " + name + " at label " +
                            MultiWeight(eps).str());
        return f;
    };

    AdaptedSystem out;
    for (auto& chart : D.charts) {
        Assignment zInY;
        for (auto& f : D.families) {
            if (f.weight.isZero()) continue;
            for (int idx = 1; idx <= f.count; ++idx) {
                Poly sum;
                for (auto& g : perms) {
                    std::vector<int> pre = epsAct(f.lifts, permInverse(g));
                    const CoordFamily* src = familyAt(f.name, pre);
                    if (src->count != f.count)
                        throw SpecError("symmetrise: level counts differ inside orbit of " +
                                        f.name);
                    const Morphism::ChartMap* cm = S.sigma(g).mapForSrc(chart);
                    if (!cm) throw SpecError("sigma missing chart " + chart);
                    sum += cm->pullback.at(src->coord(idx).key());
                }
                Poly z = sum.scaled(invFact);
                // z must be y + lower terms: exactly one fibre-linear term, itself
                Poly linear;
                for (auto& [m, c] : z.terms()) {
                    int fibreFactors = 0;
                    for (auto& [cs, e] : m.coords)
                        if (cs.kind() == CoordKind::Fibre) fibreFactors += e;
                    if (fibreFactors == 1) {
                        Poly t;
                        t.addTerm(m, c);
                        linear += t;
                    }
                }
                if (!(linear == Poly::coordinate(f.coord(idx))))
                    throw SpecError("symmetrise: chart is not sigma-aligned at " +
                                    f.coord(idx).str() + "; linear part " + linear.str());
                zInY[f.coord(idx).key()] = std::move(z);
            }
        }

        // invert the triangular change level by level
        Assignment yInZ;
        std::vector<CoordSymbol> fibres = D.fibreCoords();
        std::sort(fibres.begin(), fibres.end(), [](const CoordSymbol& a, const CoordSymbol& b) {
            return a.weight.total() < b.weight.total();
        });
        for (auto& c : fibres) {
            Poly higher = zInY.at(c.key()) - Poly::coordinate(c);
            yInZ[c.key()] = Poly::coordinate(c) - substitute(higher, yInZ);
        }
        for (auto& c : fibres)
            if (!(substitute(zInY.at(c.key()), yInZ) == Poly::coordinate(c)))
                throw ConsistencyError("symmetrise: change of coordinates failed to invert at " +
                                       c.str());

        // equivariance sigma_h^*(z_eps) = z_{eps.h}
        for (auto& h : perms) {
            const Morphism::ChartMap* cm = S.sigma(h).mapForSrc(chart);
            for (auto& f : D.families) {
                if (f.weight.isZero()) continue;
                const CoordFamily* img = familyAt(f.name, epsAct(f.lifts, h));
                for (int idx = 1; idx <= f.count; ++idx) {
                    Poly lhs = substitute(zInY.at(f.coord(idx).key()), cm->pullback);
                    if (!(lhs == zInY.at(img->coord(idx).key())))
                        throw ConsistencyError("equivariance fails at " + f.coord(idx).str() +
                                               " under " + permStr(h));
                }
            }
        }
        out.zInY[chart] = std::move(zInY);
        out.yInZ[chart] = std::move(yInZ);
    }
    return out;
}

namespace {

// diagonal family naming: keep the family name unless it spans several
// weight levels or collides with the base family
std::string diagonalName(const Presentation& D, const std::string& name, int level) {
    std::set<int> levels;
    for (auto& f : D.families)
        if (f.name == name && !f.weight.isZero()) levels.insert(f.weight.total());
    bool clash = levels.size() > 1 || name == D.baseFamilyName;
    return clash ? name + "j" + std::to_string(level) : name;
}

CoordSymbol collapseCoord(const Presentation& D, const CoordSymbol& c) {
    if (c.weight.isZero())
        return CoordSymbol{c.family, {}, c.index, MultiWeight({0})};
    int w = c.weight.total();
    return CoordSymbol{diagonalName(D, c.family, w), {}, c.index, MultiWeight({w})};
}

} // namespace

Presentation diagonalise(const SymmetricKVB& S) { return diagonalise(S, symmetrise(S)); }

Presentation diagonalise(const SymmetricKVB& S, const AdaptedSystem& adapted) {
    const Presentation& D = S.D;
    Presentation out;
    out.name = "Diag(" + D.name + ")";
    out.ncomp = 1;
    out.baseFamilyName = D.baseFamilyName;
    out.charts = D.charts;
    out.fnTable = D.fnTable;

    // one family per (name, level), plus the base
    std::set<std::pair<std::string, std::vector<int>>> emitted;
    std::map<CoordFamily::Key, CoordFamily> byRep; // representative family -> output family
    for (auto& f : D.families) {
        if (f.weight.isZero()) {
            CoordFamily nf;
            nf.name = f.name;
            nf.count = f.count;
            nf.weight = MultiWeight({0});
            if (emitted.insert({nf.name, {}}).second) {
                out.families.push_back(nf);
                byRep[f.key()] = nf;
            }
            continue;
        }
        // lexicographically smallest eps in the orbit is the representative
        std::vector<int> best = f.lifts;
        for (auto& g : allPerms(S.k())) best = std::min(best, epsAct(f.lifts, g));
        if (f.lifts != best) continue;
        CoordFamily nf;
        nf.name = diagonalName(D, f.name, f.weight.total());
        nf.count = f.count;
        nf.weight = MultiWeight({f.weight.total()});
        out.families.push_back(nf);
        byRep[f.key()] = nf;
    }

    auto collapse = [&](const CoordSymbol& c) { return collapseCoord(D, c); };

    for (auto& t : D.transitions) {
        Transition nt;
        nt.from = t.from;
        nt.to = t.to;
        const Assignment& zInYto = adapted.zInY.at(t.to);
        const Assignment& yInZfrom = adapted.yInZ.at(t.from);

        // base laws survive unchanged up to collapse of labels
        for (auto& f : D.families) {
            if (!f.weight.isZero()) continue;
            for (int idx = 1; idx <= f.count; ++idx) {
                CoordSymbol cc = collapse(f.coord(idx));
                if (!nt.laws.count(cc.key()))
                    nt.laws[cc.key()] = mapCoords(t.lawOf(f.coord(idx)), collapse);
            }
        }

        // fibre laws: z' in y', then y' by the transition, then y in z,
        // finally identify equal-level z's
        std::map<CoordSymbol::Key, Poly> seen;
        for (auto& f : D.families) {
            if (f.weight.isZero()) continue;
            for (int idx = 1; idx <= f.count; ++idx) {
                Poly zLaw = substitute(zInYto.at(f.coord(idx).key()), t.laws);
                zLaw = substitute(zLaw, yInZfrom);
                Poly merged = mapCoords(zLaw, collapse);
                CoordSymbol cc = collapse(f.coord(idx));
                auto it = seen.find(cc.key());
                if (it == seen.end()) {
                    seen[cc.key()] = merged;
                } else if (!(it->second == merged)) {
                    throw ConsistencyError(
                        "diagonalise: representatives disagree at " + f.coord(idx).str() +
                        ": " + merged.str() + " vs " + it->second.str());
                }
            }
        }
        for (auto& [k2, law] : seen) nt.laws[k2] = law;
        out.transitions.push_back(std::move(nt));
    }
    return out;
}

Presentation recoverOriginal(const Presentation& diag) {
    if (diag.ncomp != 1) throw SpecError("recoverOriginal expects a graded bundle");
    Presentation out = diag;
    out.name = "Recovered(" + diag.name + ")";
    Assignment scaleUp; // z_w -> w! * z_w
    for (auto& c : diag.fibreCoords())
        scaleUp[c.key()] = Poly::coordinate(c).scaled(Rational::factorial(c.weight.total()));
    for (auto& t : out.transitions)
        for (auto& [key, law] : t.laws) {
            const CoordFamily* f = diag.familyOfCoord(key);
            law = substitute(law, scaleUp)
                      .scaled(Rational::factorial(f->weight.total()).inv());
        }
    return out;
}

RoundTrip roundtripIso(const SymmetricKVB& S) {
    RoundTrip rt;
    AdaptedSystem adapted = symmetrise(S);
    rt.diag = diagonalise(S, adapted);
    // the adapted coordinates pull back the lifts of the rescaled
    // diagonal chart (level w sits w!-fold inside the holonomy)
    rt.lin = fullLineariseDirect(recoverOriginal(rt.diag));

    Morphism iso;
    iso.name = "I(" + S.D.name + ")";
    for (auto& chart : S.D.charts) {
        Morphism::ChartMap cm;
        cm.srcChart = chart;
        cm.dstChart = chart;
        const Assignment& zInY = adapted.zInY.at(chart);
        for (auto& c : rt.lin.allCoords()) {
            if (c.kind() == CoordKind::Base) {
                // base keys of the linearisation carry zero lift labels;
                // match the source base family by name and index
                const CoordFamily* bf = nullptr;
                for (auto& f : S.D.families)
                    if (f.name == c.family && f.weight.isZero()) bf = &f;
                if (!bf) throw ConsistencyError("roundtrip: missing base family " + c.family);
                cm.pullback[c.key()] = Poly::coordinate(bf->coord(c.index));
                continue;
            }
            // fibre label of Lin(diag) is the eps of the adapted system,
            // up to the diagonal renaming of the family
            std::string srcName = c.family;
            for (auto& f : S.D.families)
                if (!f.weight.isZero() && f.lifts == c.lifts &&
                    diagonalName(S.D, f.name, f.weight.total()) == c.family)
                    srcName = f.name;
            CoordSymbol adaptedKey{srcName, c.lifts, c.index, c.weight};
            auto it = zInY.find(adaptedKey.key());
            if (it == zInY.end())
                throw ConsistencyError("roundtrip: no adapted coordinate for " + c.str());
            cm.pullback[c.key()] = it->second;
        }
        iso.maps.push_back(std::move(cm));
    }
    rt.iso = iso;

    rt.rep = validateMorphism(S.D, rt.lin, iso);
    // intertwining of sigma with the canonical flips of the linearisation
    bool inter = true;
    std::string idetail;
    for (auto& [g, sg] : S.sigmas) {
        for (auto& cm : iso.maps) {
            const Morphism::ChartMap* scm = sg.mapForSrc(cm.srcChart);
            for (auto& c : rt.lin.allCoords()) {
                if (c.kind() == CoordKind::Base) continue;
                CoordSymbol cg = c;
                cg.lifts = epsAct(c.lifts, g);
                cg.weight = MultiWeight(cg.lifts);
                // kappa_g then I vs I^g then sigma_g
                Poly lhs = cm.pullback.at(cg.key());
                Poly rhs = substitute(cm.pullback.at(c.key()), scm->pullback);
                if (!(lhs == rhs)) {
                    inter = false;
                    if (idetail.empty())
                        idetail = "sigma" + permStr(g) + " vs kappa at " + c.str();
                }
            }
        }
    }
    rt.rep.add("intertwines-sigma-with-kappa", inter, idetail);
    return rt;
}

MorphismSymmetryResult checkMorphismSymmetry(const SymmetricKVB& S, const SymmetricKVB& Sprime,
                                             const Morphism& phi) {
    MorphismSymmetryResult out;
    out.rep.merge(validateMorphism(S.D, Sprime.D, phi), "morphism");

    for (auto& [g, sg] : S.sigmas) {
        const Morphism& sgp = Sprime.sigma(g);
        bool ok = true;
        std::string detail;
        for (auto& cm : phi.maps) {
            const Morphism::ChartMap* scm = sg.mapForSrc(cm.srcChart);
            const Morphism::ChartMap* scmP = sgp.mapForSrc(cm.dstChart);
            if (!scm || !scmP) continue;
            for (auto& c : Sprime.D.allCoords()) {
                // (sigma'_g . phi)^* = phi^* after sigma'^*_g
                Poly lhs = substitute(scmP->pullback.at(c.key()), cm.pullback);
                // (phi^g . sigma_g)^* = sigma_g^* after phi^*
                Poly rhs = substitute(cm.pullback.at(c.key()), scm->pullback);
                if (!(lhs == rhs)) {
                    ok = false;
                    if (detail.empty())
                        detail = "at " + c.str() + ": " + lhs.str() + " vs " + rhs.str();
                }
            }
        }
        out.rep.add("intertwines-sigma" + permStr(g), ok, detail);
    }

    // restriction to the diagonals in adapted coordinates; agreement of
    // the orbit representatives is the symmetry constraint on coefficients
    AdaptedSystem A, Ap;
    Presentation diag, diagP;
    try {
        A = symmetrise(S);
        Ap = symmetrise(Sprime);
        diag = diagonalise(S, A);
        diagP = diagonalise(Sprime, Ap);
    } catch (const SpecError& e) {
        out.rep.add("restriction-computed", false, e.what());
        return out;
    }
    out.rep.add("restriction-computed", true);

    Morphism restricted;
    restricted.name = phi.name + "|diag";
    bool welldef = true;
    std::string wdetail;
    for (auto& cm : phi.maps) {
        Morphism::ChartMap ncm;
        ncm.srcChart = cm.srcChart;
        ncm.dstChart = cm.dstChart;
        auto collapse = [&](const CoordSymbol& c) { return collapseCoord(S.D, c); };
        std::map<CoordSymbol::Key, Poly> seen;
        for (auto& c : Sprime.D.allCoords()) {
            CoordSymbol cc = collapseCoord(Sprime.D, c);
            Poly pulled;
            if (c.kind() == CoordKind::Base) {
                pulled = mapCoords(cm.pullback.at(c.key()), collapse);
            } else {
                Poly zP = substitute(Ap.zInY.at(cm.dstChart).at(c.key()), cm.pullback);
                pulled = mapCoords(substitute(zP, A.yInZ.at(cm.srcChart)), collapse);
            }
            auto it = seen.find(cc.key());
            if (it == seen.end())
                seen[cc.key()] = pulled;
            else if (!(it->second == pulled)) {
                welldef = false;
                if (wdetail.empty())
                    wdetail = "restriction disagrees at " + c.str() + ": " + pulled.str() +
                              " vs " + it->second.str();
            }
        }
        ncm.pullback = std::move(seen);
        restricted.maps.push_back(std::move(ncm));
    }
    out.rep.add("restriction-well-defined", welldef, wdetail);
    if (welldef)
        out.rep.merge(validateMorphism(diag, diagP, restricted), "restricted");
    out.restricted = std::move(restricted);
    return out;
}

} // namespace grb
