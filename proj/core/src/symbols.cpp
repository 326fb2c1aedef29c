#include "grb/symbols.hpp"

#include <algorithm>

namespace grb {

std::string CoordSymbol::str() const {
    std::string s = family;
    if (!lifts.empty()) {
        s += "(";
        for (size_t i = 0; i < lifts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(lifts[i]);
        }
        s += ")";
    }
    s += "[" + std::to_string(index) + "]";
    return s;
}

FnSymbol::FnSymbol(std::string fam, std::vector<int> idx, std::vector<int> der)
    : family(std::move(fam)), indices(std::move(idx)), derivs(std::move(der)) {
    std::sort(derivs.begin(), derivs.end());
}

FnSymbol FnSymbol::withDeriv(int baseIndex) const {
    FnSymbol r = *this;
    r.derivs.push_back(baseIndex);
    std::sort(r.derivs.begin(), r.derivs.end());
    return r;
}

std::string FnSymbol::str() const {
    std::string s = family;
    s += "[";
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(indices[i]);
    }
    s += "]";
    if (!derivs.empty()) {
        s += "@(";
        for (size_t i = 0; i < derivs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(derivs[i]);
        }
        s += ")";
    }
    return s;
}

} // namespace grb
