#pragma once

#include "grb/validate.hpp"

namespace grb {

/// Weight-preserving polynomial morphism between presentations, given by
/// its pullback on target coordinates, chart by chart.
struct Morphism {
    std::string name;
    struct ChartMap {
        std::string srcChart;
        std::string dstChart;
        Assignment pullback; // dst coordinate key -> Poly in src coordinates
    };
    std::vector<ChartMap> maps;

    const ChartMap* mapForDst(const std::string& dstChart) const;
    const ChartMap* mapForSrc(const std::string& srcChart) const;
    Poly pull(const std::string& dstChart, const Poly& dstPoly) const;
};

Morphism identityMorphism(const Presentation& p);

/// Pullback composition: (g . f)^* = f^* . g^*.
Morphism composeMorphisms(const Morphism& f, const Morphism& g, const std::string& name = "");

/// Checks arity, weight preservation (dst weights against src weights) and
/// the commuting square with every pair of matching transitions.
ValidationReport validateMorphism(const Presentation& src, const Presentation& dst,
                                  const Morphism& phi);

} // namespace grb
