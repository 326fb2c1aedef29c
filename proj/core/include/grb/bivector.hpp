#pragma once

#include "grb/poly.hpp"

#include <vector>

namespace grb {

/// Bivector field on an explicit chart: antisymmetric component matrix of
/// polynomials over the chart coordinates and the base algebra.
struct Bivector {
    std::vector<CoordSymbol> chart;
    std::vector<std::vector<Poly>> comp;

    explicit Bivector(std::vector<CoordSymbol> coords);
    int dim() const { return static_cast<int>(chart.size()); }
    void set(int u, int v, const Poly& p); // sets comp[u][v] = p, comp[v][u] = -p
    bool isZero() const;

    friend bool operator==(const Bivector&, const Bivector&) = default;
};

Bivector operator-(const Bivector& a, const Bivector& b);
Bivector scale(const Bivector& a, const Rational& c);

/// Schouten self-bracket obstruction: the components of [P,P]/2,
/// J^{abc} = sum_d ( P^{da} d_d P^{bc} + P^{db} d_d P^{ca} + P^{dc} d_d P^{ab} ).
/// Empty result means the bivector is Poisson.
std::vector<std::tuple<int, int, int, Poly>> schoutenJacobiator(const Bivector& P);

/// Lie derivative along the linear weight field sum_u w_u u d_u.
Bivector lieAlongWeights(const Bivector& P, const std::vector<int>& weights);

/// Pushforward through an invertible polynomial map given by the pullback
/// of target coordinates and the inverse substitution of source ones.
Bivector pushforward(const Bivector& P, const std::vector<CoordSymbol>& targetChart,
                     const Assignment& pullbackOfTarget, const Assignment& sourceInTarget);

} // namespace grb
