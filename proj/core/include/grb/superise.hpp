#pragma once

#include "grb/validate.hpp"

namespace grb {

/// One violating monomial: two co-occurring fibre coordinates whose
/// Z_2^k scalar product is odd.
struct SignViolation {
    std::string transition;
    Monomial monomial;
    CoordSymbol u, v;
};

struct SignCheckResult {
    bool pass = true;
    std::vector<SignViolation> violations;
    int monomialsScanned = 0;
};

/// Scans every transition law of a k-fold vector bundle: every pair of
/// distinct fibre coordinates inside one monomial must have even scalar
/// product of their weight bit-vectors.
SignCheckResult z2kSignCheck(const Presentation& D);

/// The certified re-tagging: same laws, plus the Z_2^k degrees, the
/// Grassmann parities (total weight mod 2) and the family commutation
/// table with signs (-1)^{<eps,delta>}.
struct SuperisedPresentation {
    Presentation D;
    std::map<CoordFamily::Key, std::vector<int>> degrees;
    std::map<CoordFamily::Key, int> parities;
    std::vector<std::tuple<std::string, std::string, int>> commutationTable;
};

SuperisedPresentation superise(const Presentation& D); // throws when the sign check fails

/// The naive degree-2 no-go: reading the quadratic transition term with
/// odd coordinates annihilates it, because the tensor is symmetric in
/// its lower indices. Returns the lost and surviving parts.
struct NaiveSuperisationDemo {
    Poly quadratic;    // the commutative quadratic part of the law
    Poly survived;     // its anticommutative normal form
    Poly lost;         // quadratic - survived
};

NaiveSuperisationDemo naiveQuadraticSuperisation(const Presentation& F2,
                                                 const CoordSymbol& topCoordinate);

} // namespace grb
