#include "grb/poly.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grb {

void Monomial::normalise() {
    std::map<CoordSymbol, int> cs;
    for (auto& [c, e] : coords) cs[c] += e;
    coords.clear();
    for (auto& [c, e] : cs)
        if (e != 0) coords.emplace_back(c, e);
    std::map<FnSymbol, int> fs;
    for (auto& [f, e] : fns) fs[f] += e;
    fns.clear();
    for (auto& [f, e] : fs)
        if (e != 0) fns.emplace_back(f, e);
}

int Monomial::degreeIn(const CoordSymbol::Key& k) const {
    for (auto& [c, e] : coords)
        if (c.key() == k) return e;
    return 0;
}

MultiWeight Monomial::weight(int ncomp) const {
    MultiWeight w = MultiWeight::zeros(ncomp);
    for (auto& [c, e] : coords) w += c.weight.scaled(e);
    return w;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.coords.insert(r.coords.end(), b.coords.begin(), b.coords.end());
    r.fns.insert(r.fns.end(), b.fns.begin(), b.fns.end());
    r.normalise();
    return r;
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (!c.isZero()) p.terms_[Monomial{}] = c;
    return p;
}

Poly Poly::coordinate(const CoordSymbol& c) {
    Poly p;
    Monomial m;
    m.coords.emplace_back(c, 1);
    p.terms_[m] = Rational(1);
    return p;
}

Poly Poly::fn(const FnSymbol& f) {
    Poly p;
    Monomial m;
    m.fns.emplace_back(f, 1);
    p.terms_[m] = Rational(1);
    return p;
}

bool Poly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void Poly::addTerm(const Monomial& m, const Rational& c) {
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

Poly Poly::operator-() const {
    Poly r;
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ma, ca] : a.terms_)
        for (auto& [mb, cb] : b.terms_) r.addTerm(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r;
    if (c.isZero()) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Rational Poly::coefficientOf(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational cc = c;
        if (first) {
            if (cc < Rational(0)) { os << "-"; cc = -cc; }
        } else {
            os << (cc < Rational(0) ? " - " : " + ");
            cc = cc.abs();
        }
        first = false;
        bool needCoeff = !cc.isOne() || m.empty();
        bool needStar = false;
        if (needCoeff) { os << cc.str(); needStar = true; }
        for (auto& [cs, e] : m.coords) {
            if (needStar) os << "*";
            os << cs.str();
            if (e > 1) os << "^" << e;
            needStar = true;
        }
        for (auto& [fs, e] : m.fns) {
            if (needStar) os << "*";
            os << fs.str();
            if (e > 1) os << "^" << e;
            needStar = true;
        }
    }
    return os.str();
}

Poly formalPartial(const Poly& p, const CoordSymbol& by) {
    Poly out;
    const bool hitsSymbols = by.kind() == CoordKind::Base &&
                             std::all_of(by.lifts.begin(), by.lifts.end(),
                                         [](int b) { return b == 0; });
    for (auto& [m, c] : p.terms()) {
        // coordinate factors
        for (size_t i = 0; i < m.coords.size(); ++i) {
            auto& [cs, e] = m.coords[i];
            if (cs.key() != by.key()) continue;
            Monomial d = m;
            if (e == 1)
                d.coords.erase(d.coords.begin() + i);
            else
                d.coords[i].second = e - 1;
            out.addTerm(d, c * Rational(e));
        }
        // symbol factors
        if (!hitsSymbols) continue;
        for (size_t i = 0; i < m.fns.size(); ++i) {
            auto& [fs, e] = m.fns[i];
            Monomial d = m;
            if (e == 1)
                d.fns.erase(d.fns.begin() + i);
            else
                d.fns[i].second = e - 1;
            Monomial df = d;
            df.fns.emplace_back(fs.withDeriv(by.index), 1);
            df.normalise();
            out.addTerm(df, c * Rational(e));
        }
    }
    return out;
}

Poly substitute(const Poly& p, const Assignment& a, SubstMode mode) {
    Poly out;
    for (auto& [m, c] : p.terms()) {
        Poly term = Poly::constant(c);
        Monomial passthrough;
        passthrough.fns = m.fns;
        for (auto& [cs, e] : m.coords) {
            auto it = a.find(cs.key());
            if (it == a.end()) {
                if (mode == SubstMode::Strict && cs.kind() == CoordKind::Fibre)
                    throw std::invalid_argument("substitute: no assignment for " + cs.str());
                passthrough.coords.emplace_back(cs, e);
                continue;
            }
            Poly q = it->second;
            for (int k = 0; k < e; ++k) term = term * q;
            if (term.isZero()) break;
        }
        if (term.isZero()) continue;
        passthrough.normalise();
        Poly pt;
        pt.addTerm(passthrough, Rational(1));
        out += term * pt;
    }
    return out;
}

WeightCheck weightCheck(const Poly& p, int component) {
    WeightCheck r;
    bool haveDegree = false;
    for (auto& [m, c] : p.terms()) {
        int d = 0;
        for (auto& [cs, e] : m.coords) {
            if (component >= cs.weight.size())
                throw std::invalid_argument("weight component out of range for " + cs.str());
            d += cs.weight[component] * e;
        }
        if (!haveDegree) {
            r.degree = d;
            haveDegree = true;
        } else if (d != r.degree) {
            r.homogeneous = false;
            r.offending.push_back(m);
        }
    }
    if (!r.homogeneous) {
        // also report the first term so both sides of the mismatch are named
        r.offending.insert(r.offending.begin(), p.terms().begin()->first);
    }
    return r;
}

std::optional<MultiWeight> weightOf(const Poly& p, int ncomp) {
    MultiWeight w = MultiWeight::zeros(ncomp);
    bool have = false;
    for (auto& [m, c] : p.terms()) {
        MultiWeight mw = m.weight(ncomp);
        if (!have) {
            w = mw;
            have = true;
        } else if (!(mw == w)) {
            return std::nullopt;
        }
    }
    return w; // zero polynomial: homogeneous of weight 0 in every component
}

Poly mapCoords(const Poly& p, const std::function<CoordSymbol(const CoordSymbol&)>& f) {
    Poly out;
    for (auto& [m, c] : p.terms()) {
        Monomial r;
        r.fns = m.fns;
        for (auto& [cs, e] : m.coords) r.coords.emplace_back(f(cs), e);
        r.normalise();
        out.addTerm(r, c);
    }
    return out;
}

std::vector<CoordSymbol> coordsIn(const Poly& p) {
    std::set<CoordSymbol> s;
    for (auto& [m, c] : p.terms())
        for (auto& [cs, e] : m.coords) s.insert(cs);
    return {s.begin(), s.end()};
}

std::vector<FnSymbol> fnsIn(const Poly& p) {
    std::set<FnSymbol> s;
    for (auto& [m, c] : p.terms())
        for (auto& [fs, e] : m.fns) s.insert(fs);
    return {s.begin(), s.end()};
}

} // namespace grb
