#pragma once

#include "grb/weights.hpp"

#include <compare>
#include <string>
#include <tuple>
#include <vector>

namespace grb {

enum class CoordKind { Base, Fibre };

/// A single homogeneous coordinate: family name, index within the family,
/// the lift multi-index accumulated by tangent lifts, and its multi-weight.
/// Identity (for substitution and term maps) is (family, lifts, index);
/// the weight travels with the symbol and must stay consistent with the
/// owning chart.
struct CoordSymbol {
    std::string family;
    std::vector<int> lifts; // 0/1 bits, one per tangent lift applied
    int index = 1;          // 1-based
    MultiWeight weight;

    CoordKind kind() const { return weight.total() == 0 ? CoordKind::Base : CoordKind::Fibre; }

    using Key = std::tuple<std::string, std::vector<int>, int>;
    Key key() const { return {family, lifts, index}; }

    std::string str() const;

    friend bool operator==(const CoordSymbol&, const CoordSymbol&) = default;
    friend auto operator<=>(const CoordSymbol&, const CoordSymbol&) = default;
};

/// One instance of an opaque base-function symbol, e.g. T[2,1]@(1,1) is
/// the second x_1-derivative of T_{21}(x). Derivative indices commute and
/// are kept sorted.
struct FnSymbol {
    std::string family;
    std::vector<int> indices;
    std::vector<int> derivs; // sorted multiset of base-coordinate indices

    FnSymbol() = default;
    FnSymbol(std::string fam, std::vector<int> idx, std::vector<int> der = {});

    FnSymbol withDeriv(int baseIndex) const;

    using Key = std::pair<std::string, std::vector<int>>;
    Key undived() const { return {family, indices}; }

    std::string str() const;

    friend bool operator==(const FnSymbol&, const FnSymbol&) = default;
    friend auto operator<=>(const FnSymbol&, const FnSymbol&) = default;
};

} // namespace grb
