#include "grb/linalg.hpp"

#include <stdexcept>

namespace grb {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
    RatMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            if (x.at(i, k).isZero()) continue;
            for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
        }
    return r;
}

int rank(RatMatrix m) {
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (!m.at(i, c).isZero()) { pivot = i; break; }
        if (pivot < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
        Rational inv = m.at(r, c).inv();
        for (int j = 0; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c).isZero()) continue;
            Rational f = m.at(i, c);
            for (int j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (m.rows != m.cols) return std::nullopt;
    int n = m.rows;
    RatMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int i = c; i < n; ++i)
            if (!aug.at(i, c).isZero()) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(c, j), aug.at(pivot, j));
        Rational inv = aug.at(c, c).inv();
        for (int j = 0; j < 2 * n; ++j) aug.at(c, j) *= inv;
        for (int i = 0; i < n; ++i) {
            if (i == c || aug.at(i, c).isZero()) continue;
            Rational f = aug.at(i, c);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(c, j);
        }
    }
    RatMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
    return out;
}

} // namespace grb
