#pragma once

#include <stdexcept>
#include <vector>

namespace holotor {

template <class S>
using Matrix = std::vector<std::vector<S>>;

/// Solves the square system A·x = b over a field S by Gaussian elimination
/// with exact (is_zero-based) pivoting. Throws on singular A.
template <class S>
std::vector<S> solve(Matrix<S> a, std::vector<S> b) {
    const size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw std::domain_error("solve: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            S factor = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    std::vector<S> x(n, S(0));
    for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Exact matrix inverse over a field S. Throws on singular input.
template <class S>
Matrix<S> invert(Matrix<S> a) {
    const size_t n = a.size();
    Matrix<S> inv(n, std::vector<S>(n, S(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = S(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && is_zero(a[piv][col])) ++piv;
        if (piv == n) throw std::domain_error("invert: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        S d = a[col][col];
        for (size_t c = 0; c < n; ++c) {
            a[col][c] /= d;
            inv[col][c] /= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(a[r][col])) continue;
            S factor = a[r][col];
            for (size_t c = 0; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace holotor
