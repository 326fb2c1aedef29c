#include "grb/presentation.hpp"

#include <algorithm>

namespace grb {

const Poly& Transition::lawOf(const CoordSymbol& c) const {
    auto it = laws.find(c.key());
    if (it == laws.end())
        throw SpecError("transition " + from + "->" + to + " has no law for " + c.str());
    return it->second;
}

const CoordFamily* Presentation::findFamily(const CoordFamily::Key& k) const {
    for (auto& f : families)
        if (f.key() == k) return &f;
    return nullptr;
}

const CoordFamily* Presentation::familyOfCoord(const CoordSymbol::Key& k) const {
    return findFamily({std::get<0>(k), std::get<1>(k)});
}

std::vector<CoordSymbol> Presentation::allCoords() const {
    std::vector<CoordSymbol> out;
    for (auto& f : families)
        for (int i = 1; i <= f.count; ++i) out.push_back(f.coord(i));
    return out;
}

std::vector<CoordSymbol> Presentation::fibreCoords() const {
    std::vector<CoordSymbol> out;
    for (auto& c : allCoords())
        if (c.kind() == CoordKind::Fibre) out.push_back(c);
    return out;
}

std::vector<int> Presentation::degreeBounds() const {
    std::vector<int> d(ncomp, 0);
    for (auto& f : families)
        for (int s = 0; s < ncomp; ++s) d[s] = std::max(d[s], f.weight[s]);
    return d;
}

int Presentation::degree(int component) const { return degreeBounds().at(component); }

bool Presentation::isKFoldVB() const {
    return std::all_of(families.begin(), families.end(),
                       [](const CoordFamily& f) { return f.weight.allAtMostOne(); });
}

const Transition* Presentation::transitionBetween(const std::string& from,
                                                  const std::string& to) const {
    for (auto& t : transitions)
        if (t.from == from && t.to == to) return &t;
    return nullptr;
}

FnSymbol Presentation::fnInstance(const std::string& family, std::vector<int> indices,
                                  std::vector<int> derivs) const {
    auto it = fnTable.find(family);
    if (it != fnTable.end()) {
        for (auto& group : it->second.symGroups) {
            std::vector<int> vals;
            for (int slot : group) vals.push_back(indices.at(slot - 1));
            std::sort(vals.begin(), vals.end());
            for (size_t i = 0; i < group.size(); ++i) indices.at(group[i] - 1) = vals[i];
        }
    }
    return FnSymbol(family, std::move(indices), std::move(derivs));
}

int Presentation::canonicaliseSymbols() {
    int changed = 0;
    auto fix = [&](Poly& p) {
        Poly out;
        for (auto& [m, c] : p.terms()) {
            Monomial r = m;
            for (auto& [fs, e] : r.fns) {
                FnSymbol canon = fnInstance(fs.family, fs.indices, fs.derivs);
                if (!(canon == fs)) {
                    ++changed;
                    fs = canon;
                }
            }
            r.normalise();
            out.addTerm(r, c);
        }
        p = out;
    };
    for (auto& t : transitions)
        for (auto& [k, law] : t.laws) fix(law);
    return changed;
}

bool samePresentation(const Presentation& a, const Presentation& b) {
    if (a.ncomp != b.ncomp) return false;
    auto famsorted = [](const Presentation& p) {
        std::vector<CoordFamily> fs = p.families;
        std::sort(fs.begin(), fs.end(), [](const CoordFamily& l, const CoordFamily& r) {
            return std::tie(l.name, l.lifts, l.count) < std::tie(r.name, r.lifts, r.count);
        });
        return fs;
    };
    auto fa = famsorted(a), fb = famsorted(b);
    if (fa.size() != fb.size()) return false;
    for (size_t i = 0; i < fa.size(); ++i)
        if (fa[i].name != fb[i].name || fa[i].lifts != fb[i].lifts ||
            fa[i].count != fb[i].count || !(fa[i].weight == fb[i].weight))
            return false;
    if (a.charts != b.charts) return false;
    if (a.transitions.size() != b.transitions.size()) return false;
    for (auto& ta : a.transitions) {
        const Transition* tb = b.transitionBetween(ta.from, ta.to);
        if (!tb || !(ta.laws == tb->laws)) return false;
    }
    return true;
}

Presentation mapPresentationCoords(const Presentation& p,
                                   const std::function<CoordSymbol(const CoordSymbol&)>& f) {
    Presentation out = p;
    for (auto& fam : out.families) {
        CoordSymbol c = f(CoordSymbol{fam.name, fam.lifts, 1, fam.weight});
        fam.name = c.family;
        fam.lifts = c.lifts;
        fam.weight = c.weight;
    }
    for (auto& t : out.transitions) {
        std::map<CoordSymbol::Key, Poly> laws;
        for (auto& [k, law] : t.laws) {
            const CoordFamily* fam = p.familyOfCoord(k);
            if (!fam) throw ConsistencyError("law key without family");
            CoordSymbol c = f(CoordSymbol{std::get<0>(k), std::get<1>(k), std::get<2>(k),
                                          fam->weight});
            laws[c.key()] = mapCoords(law, f);
        }
        t.laws = std::move(laws);
    }
    return out;
}

} // namespace grb
