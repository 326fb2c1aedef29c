#pragma once

#include "grb/symmetric.hpp"

namespace grb {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(l) + ":" + std::to_string(c) +
                             ": " + msg),
          line(l), col(c) {}
};

struct SigmaDecl {
    Perm g;
    std::string bundle;
    // explicit laws per chart; unspecified coordinates default to the
    // pure lift-label permutation
    std::map<std::string, Assignment> chartLaws;
};

struct MorphismDecl {
    std::string name;
    std::string srcBundle;
    std::string dstBundle;
    Morphism phi;
};

struct SpecFile {
    std::vector<Presentation> bundles;
    std::vector<SigmaDecl> sigmas;
    std::vector<MorphismDecl> morphisms;
    std::vector<std::string> warnings; // e.g. symbol indices reordered on ingestion

    const Presentation& bundle(const std::string& name) const;
};

SpecFile parseSpecFile(const std::string& text);

/// Builds the sigma morphisms of a declaration against its bundle
/// (explicit laws where given, lift-label permutation defaults elsewhere).
Morphism sigmaFromDecl(const Presentation& D, const SigmaDecl& decl);

Perm parsePermString(const std::string& text, int k); // "2,1,3"

} // namespace grb
