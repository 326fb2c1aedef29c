#pragma once

#include "grb/functors.hpp"

#include <map>

namespace grb {

/// A k-fold vector bundle together with the family of morphisms
/// sigma_g : D -> D^g. Storage is closed over the whole group; the
/// constructor extends a generating set by the composition law.
struct SymmetricKVB {
    Presentation D;
    std::map<Perm, Morphism> sigmas;

    int k() const { return D.ncomp; }
    const Morphism& sigma(const Perm& g) const;
};

/// Closes the given sigmas (at least the adjacent transpositions, or any
/// generating set) under sigma_{g.t} = sigma_t^* after sigma_g^*.
SymmetricKVB makeSymmetricKVB(Presentation D, std::map<Perm, Morphism> given);

/// The canonical structure on a presentation in the adapted chart of the
/// direct full linearisation: every sigma_g is the lift-label permutation.
SymmetricKVB canonicalSymmetricKVB(const Presentation& linDirect);

/// Checks: D is a k-fold VB in adapted labels, coordinate counts per
/// weight level match, every sigma_g is a valid morphism D -> D^g, the
/// composition law holds for every pair, every transposition restricts to
/// the identity on its core, and (k = 2) the skewness of the quadratic
/// sigma coefficients forced by applying sigma twice.
ValidationReport validateSymmetric(const SymmetricKVB& S);

/// The averaged coordinates z_eps = (1/k!) sum_g sigma_g^*(y_{eps.g^-1})
/// per chart, together with the inverse change. Requires sigma linear
/// parts aligned with the coordinate indexing (z = y + lower terms).
struct AdaptedSystem {
    std::map<std::string, Assignment> zInY;
    std::map<std::string, Assignment> yInZ;
};

AdaptedSystem symmetrise(const SymmetricKVB& S);

/// Graded bundle of S_k-invariant points: one coordinate per weight
/// level, transition laws taken from any orbit representative after
/// identification (all representatives are asserted to agree).
Presentation diagonalise(const SymmetricKVB& S);
Presentation diagonalise(const SymmetricKVB& S, const AdaptedSystem& adapted);

/// Rescales the diagonal coordinates by 1/w! so that the laws match the
/// original graded bundle chart (the embedding multiplies level w by w!).
Presentation recoverOriginal(const Presentation& diag);

struct RoundTrip {
    Presentation diag;
    Presentation lin; // full linearisation of diag, direct form
    Morphism iso;     // I : D -> lin, I^*(y^(eps)) = z_eps
    ValidationReport rep;
};

RoundTrip roundtripIso(const SymmetricKVB& S);

/// sigma' phi = phi^g sigma for every g, plus the restriction of phi to
/// the diagonals (whose well-definedness is the symmetry constraint on
/// the coefficients).
struct MorphismSymmetryResult {
    ValidationReport rep;
    Morphism restricted;
};

MorphismSymmetryResult checkMorphismSymmetry(const SymmetricKVB& S, const SymmetricKVB& Sprime,
                                             const Morphism& phi);

/// Degree-2 helper: coefficient of y10[a]*y01[b] in sigma^*(z[i]) - z[i],
/// indexed [a-1][b-1][i-1]; the bracket coefficient sigma^i_{ab} is entry [b][a][i].
std::vector<std::vector<std::vector<Poly>>> sigmaQuadraticCoeffs(const SymmetricKVB& S,
                                                                 const std::string& chart);

} // namespace grb
