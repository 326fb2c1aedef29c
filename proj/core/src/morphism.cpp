#include "grb/morphism.hpp"

namespace grb {

const Morphism::ChartMap* Morphism::mapForDst(const std::string& dstChart) const {
    for (auto& m : maps)
        if (m.dstChart == dstChart) return &m;
    return nullptr;
}

const Morphism::ChartMap* Morphism::mapForSrc(const std::string& srcChart) const {
    for (auto& m : maps)
        if (m.srcChart == srcChart) return &m;
    return nullptr;
}

Poly Morphism::pull(const std::string& dstChart, const Poly& dstPoly) const {
    const ChartMap* cm = mapForDst(dstChart);
    if (!cm) throw SpecError("morphism " + name + ": no chart map onto " + dstChart);
    return substitute(dstPoly, cm->pullback, SubstMode::Strict);
}

Morphism identityMorphism(const Presentation& p) {
    Morphism phi;
    phi.name = "id";
    for (auto& c : p.charts) {
        Morphism::ChartMap cm;
        cm.srcChart = c;
        cm.dstChart = c;
        for (auto& coord : p.allCoords()) cm.pullback[coord.key()] = Poly::coordinate(coord);
        phi.maps.push_back(std::move(cm));
    }
    return phi;
}

Morphism composeMorphisms(const Morphism& f, const Morphism& g, const std::string& name) {
    Morphism out;
    out.name = name.empty() ? g.name + "." + f.name : name;
    for (auto& gm : g.maps) {
        const Morphism::ChartMap* fm = f.mapForDst(gm.srcChart);
        if (!fm)
            throw SpecError("composeMorphisms: " + f.name + " does not land in chart " +
                            gm.srcChart);
        Morphism::ChartMap cm;
        cm.srcChart = fm->srcChart;
        cm.dstChart = gm.dstChart;
        for (auto& [k, poly] : gm.pullback)
            cm.pullback[k] = substitute(poly, fm->pullback, SubstMode::Partial);
        out.maps.push_back(std::move(cm));
    }
    return out;
}

ValidationReport validateMorphism(const Presentation& src, const Presentation& dst,
                                  const Morphism& phi) {
    ValidationReport rep;
    bool weightsOk = true, coverOk = true;
    std::string wdetail, cdetail;
    const bool sameArity = src.ncomp == dst.ncomp;
    for (auto& cm : phi.maps) {
        for (auto& c : dst.allCoords()) {
            auto it = cm.pullback.find(c.key());
            if (it == cm.pullback.end()) {
                coverOk = false;
                if (cdetail.empty())
                    cdetail = "chart " + cm.dstChart + ": no pullback for " + c.str();
                continue;
            }
            auto w = weightOf(it->second, src.ncomp);
            // componentwise when the gradings match up, total weight
            // otherwise (embeddings across different arities)
            bool ok = w.has_value() &&
                      (sameArity ? *w == c.weight : w->total() == c.weight.total());
            if (!it->second.isZero() && !ok) {
                weightsOk = false;
                if (wdetail.empty())
                    wdetail = c.str() + " pullback weight mismatch: " + it->second.str();
            }
        }
    }
    rep.add("pullback-complete", coverOk, cdetail);
    rep.add("weight-preserving", weightsOk, wdetail);

    bool squares = true;
    std::string sdetail;
    for (auto& t : src.transitions) {
        const Morphism::ChartMap* cmFrom = phi.mapForSrc(t.from);
        const Morphism::ChartMap* cmTo = phi.mapForSrc(t.to);
        if (!cmFrom || !cmTo) continue;
        const Transition* td = dst.transitionBetween(cmFrom->dstChart, cmTo->dstChart);
        if (!td) continue;
        for (auto& c : dst.allCoords()) {
            // phi_from^*(t_dst^*(c)) vs t_src^*(phi_to^*(c))
            Poly lhs = substitute(td->lawOf(c), cmFrom->pullback, SubstMode::Partial);
            auto it = cmTo->pullback.find(c.key());
            if (it == cmTo->pullback.end()) continue;
            Poly rhs = substitute(it->second, t.laws, SubstMode::Partial);
            if (!(lhs == rhs)) {
                squares = false;
                if (sdetail.empty())
                    sdetail = t.from + "->" + t.to + " at " + c.str() + ": " + lhs.str() +
                              "  vs  " + rhs.str();
            }
        }
    }
    rep.add("intertwines-transitions", squares, sdetail);
    return rep;
}

} // namespace grb
