#pragma once

#include "grb/morphism.hpp"
#include "grb/surgery.hpp"

namespace grb {

/// Tangent lift: every coordinate u gains a partner with lift bit 1 and
/// appended weight 1; the partner's law is the total formal derivative of
/// u's law (including the base-derivative terms that decorate symbols).
Presentation tangentLift(const Presentation& p);

/// Vertical bundle V F = T F[Delta^0 - Delta^new >= 0] with the first
/// weight component shifted down by the new Euler weight.
Presentation vertical(const Presentation& p);

/// Linearisation: V F truncated to first weight <= k-1. A GrL-bundle with
/// a vector-bundle leg over F_{k-1}.
Presentation linearise(const Presentation& p); // pLin

/// Full linearisation: linearise iterated (k-1) times; a k-fold vector
/// bundle whose coordinates carry lift labels of length k-1.
Presentation fullLinearise(const Presentation& p); // Lin

/// Independent construction: T^(k) F[X_k = 0] with X_k = Delta^0 - sum of
/// the k Euler fields, the redundant component 0 dropped. Coordinates
/// carry full-length lift labels equal to their weights.
Presentation fullLineariseDirect(const Presentation& p);

/// Renaming table between the two constructions:
/// (fam, eps) of fullLinearise -> (fam, (w - |eps|, eps...)) of the direct
/// form. Applying it to fullLinearise output gives term-map equality.
CoordSymbol linToDirectName(const CoordSymbol& c);
Presentation renameLinToDirect(const Presentation& lin);

/// The canonical weight-field embedding F -> pLin(F):
/// dotted coordinates pull back to w * (undotted original).
Morphism canonicalEmbedding(const Presentation& p); // iota
/// Verifies the embedding intertwines the transition laws; throws
/// ConsistencyError on failure.
void assertEmbeddingValid(const Presentation& p, const Presentation& plinP,
                          const Morphism& iota);

/// Functor action on morphisms: dotted pullbacks are fibre-wise total
/// derivatives, surgered exactly like the objects.
Morphism lineariseMorphism(const Presentation& src, const Presentation& dst,
                           const Morphism& phi);
Morphism fullLineariseMorphism(const Presentation& src, const Presentation& dst,
                               const Morphism& phi);

/// D^g: same coordinates and laws, weight components permuted by g.
Presentation flip(const Presentation& p, const Perm& g);

/// The canonical k-fold VB morphism Lin(F) -> Lin(F)^g in the adapted
/// chart of the direct construction: pure permutation of lift labels.
/// Intertwining with the transition laws is asserted.
Morphism canonicalSigma(const Presentation& linDirect, const Perm& g);

} // namespace grb
