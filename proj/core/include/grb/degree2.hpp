#pragma once

#include "grb/bivector.hpp"
#include "grb/numeric.hpp"
#include "grb/symmetric.hpp"

namespace grb {

/// Dual of a double vector bundle over one leg. Leg 'A' keeps the
/// (0,1) side as base and dualises (y10, core); leg 'B' mirrors it.
/// Dual coordinates are named p_<family>; side duals get weight (1,1),
/// the core dual gets the weight of the kept side. The contragredient
/// laws need the linear blocks invertible: rational, or one declared
/// inverse-symbol family per block.
Presentation dualDVB(const Presentation& D, char leg);

/// Numeric covector of D*_A or D*_B: base values, footpoint values on
/// the kept side, and dual components keyed by the coordinates they
/// pair with.
struct DVBCovector {
    PointMap xvals;
    PointMap foot;
    std::map<CoordSymbol::Key, Rational> side;
    std::map<CoordSymbol::Key, Rational> core;
};

/// <Phi, Psi> = Phi(d) - Psi(d) for Phi in D*_A, Psi in D*_B over the
/// same core-dual point, d projecting onto both footpoints. Throws on
/// footpoint mismatch; the value is independent of the core of d.
Rational dvbPairing(const Presentation& D, const DVBCovector& phiA, const DVBCovector& psiB,
                    const PointMap& d);

/// The skew form on E = D*_B over C* induced by sigma:
/// <Psi1,Psi2> = Psi1(sigma(d)) - Psi2(d). Symbolic in the scratch
/// variables b1/q1/b2/q2 (covector components) and al (core-dual point).
struct SkewFormResult {
    std::vector<CoordSymbol> basis1, basis2;
    Poly form;
    std::vector<std::vector<Poly>> matrix;
    ValidationReport rep; // d-independence, exact skewness, bilinearity, numeric rank
};

SkewFormResult skewForm(const SymmetricKVB& S, const std::string& chart, uint64_t seed,
                        int samples, int degreeCap = 1);

/// Lie algebroid on the leg D -> A read off sigma in the presented chart:
/// [e_a, e_b] = sigma^i_{ab} f_i, anchor rho(e_a) = d/d y01_a.
struct AlgebroidStructure {
    std::vector<CoordSymbol> eFrame; // dual to y10
    std::vector<CoordSymbol> fFrame; // dual to the core
    std::vector<std::vector<std::vector<Poly>>> bracket; // [a][b] -> f-coefficients
    ValidationReport rep; // skewness, Jacobi (basis + random sections), Leibniz
};

AlgebroidStructure algebroid(const SymmetricKVB& S, const std::string& chart, uint64_t seed);

/// The linear Poisson tensor on D*_A in the dual chart, with the exact
/// checks [L,L] = 0 and the bi-weight (-1,-2) eigenvalue equations.
struct PoissonResult {
    Bivector lambda;
    ValidationReport rep;
};

PoissonResult poissonTensor(const SymmetricKVB& S, const std::string& chart);

/// Transport of the reduced canonical tensor through the dual of the
/// round-trip isomorphism; must land on the sigma-twisted tensor exactly.
ValidationReport poissonTransportCheck(const SymmetricKVB& S, const std::string& chart);

/// Numeric checks: pairing invariance under the dual transition laws and
/// independence of the pairing from core shifts of d.
ValidationReport pairingChecks(const Presentation& D, uint64_t seed, int samples,
                               int degreeCap = 1);

/// Graphs of duals of symmetric morphisms are isotropic for the
/// difference of the induced forms, at sampled points.
ValidationReport morphismGraphIsotropy(const SymmetricKVB& S, const SymmetricKVB& Sprime,
                                       const Morphism& phi, uint64_t seed, int samples,
                                       int degreeCap = 1);

} // namespace grb
