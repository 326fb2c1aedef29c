#pragma once

#include "grb/poly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace grb {

/// One indexed family of coordinates shared by every chart of a
/// presentation, e.g. y(0,1)[1..2] of weight (0,1).
struct CoordFamily {
    std::string name;
    std::vector<int> lifts;
    int count = 1;
    MultiWeight weight;

    CoordSymbol coord(int index) const { return CoordSymbol{name, lifts, index, weight}; }
    using Key = std::pair<std::string, std::vector<int>>;
    Key key() const { return {name, lifts}; }
};

/// Transition laws from chart `from` to chart `to`: every coordinate of
/// the target chart gets exactly one polynomial in source coordinates.
struct Transition {
    std::string from;
    std::string to;
    std::map<CoordSymbol::Key, Poly> laws;

    const Poly& lawOf(const CoordSymbol& c) const;
};

/// Declared properties of an opaque function-symbol family.
struct FnInfo {
    std::vector<std::vector<int>> symGroups; // 1-based slot groups, kept sorted per instance
    std::string inverseOf;                   // family this one inverts, if any
    std::string inverseFamily;               // declared inverse of this family, if any
    int dim = 0;                             // square dimension for inverse pairs
    bool baseMap = false;                    // appears as a base-coordinate law
};

/// Charts + weighted coordinates + polynomial transition laws. This is
/// the central value type: an n-fold graded bundle given by coordinate
/// data, with no point set behind it.
struct Presentation {
    std::string name;
    int ncomp = 1;                         // number of weight vector fields
    std::string baseFamilyName = "x";
    std::vector<CoordFamily> families;     // base family included (zero weight)
    std::vector<std::string> charts;
    std::vector<Transition> transitions;
    std::map<std::string, FnInfo> fnTable;

    const CoordFamily* findFamily(const CoordFamily::Key& k) const;
    const CoordFamily* familyOfCoord(const CoordSymbol::Key& k) const;
    std::vector<CoordSymbol> allCoords() const;
    std::vector<CoordSymbol> fibreCoords() const;
    std::vector<int> degreeBounds() const; // per-component max weight
    int degree(int component = 0) const;
    bool isKFoldVB() const; // every weight in {0,1}^n
    const Transition* transitionBetween(const std::string& from, const std::string& to) const;

    FnSymbol fnInstance(const std::string& family, std::vector<int> indices,
                        std::vector<int> derivs = {}) const;
    /// Canonicalises existing symbol instances against declared symmetry
    /// groups; returns the number of instances whose indices were reordered.
    int canonicaliseSymbols();
};

bool samePresentation(const Presentation& a, const Presentation& b);

/// Rewrites every coordinate occurrence (families, law keys, law bodies).
Presentation mapPresentationCoords(const Presentation& p,
                                   const std::function<CoordSymbol(const CoordSymbol&)>& f);

struct SpecError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace grb
