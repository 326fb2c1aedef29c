#pragma once

#include "grb/presentation.hpp"

namespace grb {

/// F[Delta <= l]: keep exactly the coordinates of Delta-weight <= l with
/// their unchanged laws. Delta must have non-negative coefficients.
/// Throws SpecError if a retained law mentions a removed coordinate.
Presentation truncate(const Presentation& p, const WeightCombo& delta, long long l);

/// F[X >= 0]: remove the coordinates of negative X-weight and substitute
/// zero for them in every remaining law. Throws SpecError when the law of
/// a removed coordinate does not vanish under the substitution (the input
/// was not a genuine n-fold graded bundle).
Presentation zeroNegative(const Presentation& p, const WeightCombo& x);

/// F[X = 0] = F[X >= 0] put through zeroNegative again with -X.
Presentation fixedLocus(const Presentation& p, const WeightCombo& x);

/// Inverse transition built weight level by weight level: the linear
/// block of each level is solved with declared inverse symbols (or a
/// rational inverse), the lower-order part is substituted recursively.
/// The base law must be the identity or rational-linear.
Transition invertTransition(const Presentation& p, const Transition& t);

} // namespace grb
