#include "grb/validate.hpp"

#include "grb/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace grb {

bool ValidationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

void ValidationReport::add(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& o, const std::string& prefix) {
    for (auto c : o.checks) {
        c.name = prefix.empty() ? c.name : prefix + ":" + c.name;
        checks.push_back(std::move(c));
    }
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (auto& c : checks)
        os << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name
           << (c.detail.empty() ? "" : "  -- " + c.detail) << "\n";
    os << (pass() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

namespace {

void checkStructure(const Presentation& p) {
    std::set<CoordFamily::Key> famKeys;
    for (auto& f : p.families) {
        if (f.weight.size() != p.ncomp)
            throw SpecError("family " + f.name + ": weight arity " +
                            std::to_string(f.weight.size()) + " != " + std::to_string(p.ncomp));
        if (f.count < 1) throw SpecError("family " + f.name + ": empty index range");
        if (!famKeys.insert(f.key()).second)
            throw SpecError("duplicate coordinate family " + f.coord(1).str());
        for (int w : f.weight.comp)
            if (w < 0) throw SpecError("family " + f.name + ": negative weight");
    }
    std::set<std::string> chartNames(p.charts.begin(), p.charts.end());
    if (chartNames.size() != p.charts.size()) throw SpecError("duplicate chart name");
    for (auto& t : p.transitions) {
        if (!chartNames.count(t.from) || !chartNames.count(t.to))
            throw SpecError("transition " + t.from + "->" + t.to + " uses unknown chart");
        for (auto& c : p.allCoords())
            if (!t.laws.count(c.key()))
                throw SpecError("transition " + t.from + "->" + t.to + ": missing law for " +
                                c.str());
        for (auto& [k, law] : t.laws)
            if (!p.familyOfCoord(k))
                throw SpecError("transition " + t.from + "->" + t.to + ": law for unknown " +
                                std::get<0>(k));
    }
}

// The linear block of a weight class: coefficient of each same-weight
// coordinate in each law, provided it is a lone rational or a lone symbol.
struct LinearBlock {
    bool plainRational = true;
    RatMatrix mat;                 // valid when plainRational
    std::set<std::string> symbolFamilies;
    std::set<size_t> symbolDerivOrders;
    bool recognisable = true;
};

LinearBlock linearBlock(const Transition& t,
                        const std::vector<CoordSymbol>& block) {
    LinearBlock lb;
    lb.mat = RatMatrix(static_cast<int>(block.size()), static_cast<int>(block.size()));
    for (size_t j = 0; j < block.size(); ++j) {
        const Poly& law = t.lawOf(block[j]);
        for (auto& [m, c] : law.terms()) {
            // a linear term has exactly one fibre factor, of the block weight
            std::vector<std::pair<CoordSymbol, int>> fibres;
            for (auto& [cs, e] : m.coords)
                if (cs.kind() == CoordKind::Fibre) fibres.emplace_back(cs, e);
            if (fibres.size() != 1 || fibres[0].second != 1) continue;
            if (!(fibres[0].first.weight == block[j].weight)) continue;
            auto it = std::find_if(block.begin(), block.end(), [&](const CoordSymbol& b) {
                return b.key() == fibres[0].first.key();
            });
            if (it == block.end()) continue;
            size_t i = static_cast<size_t>(it - block.begin());
            if (m.fns.empty() && m.coords.size() == 1) {
                lb.mat.at(static_cast<int>(i), static_cast<int>(j)) += c;
            } else if (m.fns.size() == 1 && m.fns[0].second == 1 && m.coords.size() == 1) {
                lb.plainRational = false;
                lb.symbolFamilies.insert(m.fns[0].first.family);
                lb.symbolDerivOrders.insert(m.fns[0].first.derivs.size());
            } else {
                lb.recognisable = false;
            }
        }
    }
    return lb;
}

} // namespace

ValidationReport validate(const Presentation& p) {
    checkStructure(p);
    ValidationReport rep;
    rep.add("structure", true);

    for (auto& t : p.transitions) {
        std::string tn = t.from + "->" + t.to;
        bool homogeneous = true, tower = true, baseOnly = true;
        std::string hdetail, tdetail, bdetail;
        auto append = [](std::string& acc, const std::string& item) {
            if (!acc.empty()) acc += "; ";
            acc += item;
        };
        for (auto& c : p.allCoords()) {
            const Poly& law = t.lawOf(c);
            for (int s = 0; s < p.ncomp; ++s) {
                WeightCheck wc = weightCheck(law, s);
                if (!wc.homogeneous || (!law.isZero() && wc.degree != c.weight[s])) {
                    homogeneous = false;
                    append(hdetail,
                           c.str() + " component " + std::to_string(s) +
                               (wc.homogeneous ? " has degree " + std::to_string(wc.degree) +
                                                     " != " + std::to_string(c.weight[s])
                                               : " is inhomogeneous: " + law.str()));
                }
            }
            for (auto& used : coordsIn(law)) {
                for (int s = 0; s < p.ncomp; ++s)
                    if (used.weight[s] > c.weight[s]) {
                        tower = false;
                        append(tdetail, c.str() + " law uses " + used.str());
                    }
                if (c.kind() == CoordKind::Base && used.kind() == CoordKind::Fibre) {
                    baseOnly = false;
                    append(bdetail, c.str() + " law uses " + used.str());
                }
            }
        }
        rep.add(tn + ":homogeneous", homogeneous, hdetail);
        rep.add(tn + ":tower", tower, tdetail);
        rep.add(tn + ":base-laws-base-only", baseOnly, bdetail);

        // linear block of every fibre weight class must be declared invertible
        std::map<MultiWeight, std::vector<CoordSymbol>> blocks;
        for (auto& c : p.fibreCoords()) blocks[c.weight].push_back(c);
        bool invOk = true;
        std::string invDetail;
        for (auto& [w, block] : blocks) {
            LinearBlock lb = linearBlock(t, block);
            if (!lb.recognisable) {
                invOk = false;
                invDetail = "weight " + w.str() + ": linear part not recognisable";
                continue;
            }
            if (lb.plainRational) {
                if (rank(lb.mat) != static_cast<int>(block.size())) {
                    invOk = false;
                    invDetail = "weight " + w.str() + ": rational linear block singular";
                }
                continue;
            }
            for (auto& fam : lb.symbolFamilies) {
                auto it = p.fnTable.find(fam);
                bool declared = it != p.fnTable.end() &&
                                (!it->second.inverseFamily.empty() ||
                                 !it->second.inverseOf.empty());
                bool jacobianOfBaseMap = it != p.fnTable.end() && it->second.baseMap &&
                                         lb.symbolDerivOrders.count(1);
                if (!declared && !jacobianOfBaseMap) {
                    invOk = false;
                    invDetail = "weight " + w.str() + ": linear block family '" + fam +
                                "' not declared invertible";
                }
            }
        }
        rep.add(tn + ":linear-blocks-invertible", invOk, invDetail);
    }
    return rep;
}

} // namespace grb
