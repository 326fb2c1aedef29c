#pragma once

#include "grb/rational.hpp"

#include <optional>
#include <vector>

namespace grb {

/// Dense rational matrix, row major.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static RatMatrix identity(int n);

    Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

int rank(RatMatrix m);
std::optional<RatMatrix> inverse(const RatMatrix& m);

} // namespace grb
