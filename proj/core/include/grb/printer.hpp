#pragma once

#include "grb/dsl.hpp"

namespace grb {

/// Canonical textual form; parsing it back yields an identical presentation.
std::string printPresentation(const Presentation& p);
std::string printMorphism(const Presentation& src, const Presentation& dst, const Morphism& phi,
                          const std::string& name = "");
std::string printSigma(const Presentation& D, const Perm& g, const Morphism& sigma);

} // namespace grb
