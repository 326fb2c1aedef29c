#pragma once

#include "grb/linalg.hpp"
#include "grb/morphism.hpp"
#include "grb/presentation.hpp"

#include <cstdint>
#include <map>

namespace grb {

/// Deterministic splitmix64 stream; identical sequences on every platform.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    /// uniform in [lo, hi]
    long long uniform(long long lo, long long hi);
    /// small rational with |numerator| <= mag, denominator in {1,2}
    Rational smallRational(long long mag);

  private:
    uint64_t state_;
};

using PointMap = std::map<CoordSymbol::Key, Rational>;

/// A fully numeric instantiation of a presentation: every underived
/// opaque symbol becomes a concrete polynomial in the base coordinates.
/// Declared inverse pairs are realised as constant mutually inverse
/// rational matrices, so derivative-decorated instances stay consistent
/// by construction.
struct NumericInstance {
    uint64_t seed = 0;
    int degreeCap = 2;
    std::map<FnSymbol::Key, Poly> assignment; // polynomials in unlifted base coordinates

    Rational evalFn(const FnSymbol& f, const PointMap& point,
                    const Presentation& p) const;
    Rational evalPoly(const Poly& poly, const PointMap& point,
                      const Presentation& p) const;
};

NumericInstance instantiate(const Presentation& p, uint64_t seed, int degreeCap,
                            const std::vector<Poly>& extraPolys = {});

PointMap randomPoint(const Presentation& p, Rng& rng, long long mag = 7);

/// Applies one transition numerically: returns the coordinate values in
/// the target chart.
PointMap applyTransition(const Presentation& p, const Transition& t, const PointMap& src,
                         const NumericInstance& inst);

PointMap applyMorphismNumeric(const Presentation& src, const Presentation& dst,
                              const Morphism& phi, const std::string& srcChart,
                              const PointMap& point, const NumericInstance& inst);

/// Jacobian of the pullback in the fibre directions at a sampled point.
RatMatrix fibreJacobian(const Presentation& src, const Presentation& dst, const Morphism& phi,
                        const std::string& dstChart, const PointMap& point,
                        const NumericInstance& inst);

} // namespace grb
