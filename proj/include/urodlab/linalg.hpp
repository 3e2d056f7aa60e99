#pragma once

// Exact dense linear algebra for small blocks.

#include "urodlab/rational.hpp"

#include <numeric>
#include <optional>
#include <vector>

namespace urodlab {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix zero_matrix(std::size_t rows, std::size_t cols) {
    return Matrix(rows, std::vector<Rational>(cols, Rational(0)));
}

inline Matrix identity_matrix(std::size_t n) {
    auto m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// a is r x s, b is s x t. Empty dimensions are passed explicitly.
inline Matrix multiply(const Matrix& a, const Matrix& b, std::size_t inner, std::size_t cols) {
    Matrix c = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < inner; ++j) {
            if (a[i][j] == 0) continue;
            for (std::size_t l = 0; l < cols; ++l)
                if (b[j][l] != 0) c[i][l] += a[i][j] * b[j][l];
        }
    return c;
}

inline bool is_zero(const Matrix& m) {
    for (const auto& row : m)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
inline long bareiss_rank(const Matrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Integer l = 1;
        for (const auto& x : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (std::size_t j = 0; j < cols; ++j) {
            Rational scaled = m[i][j] * l;
            a[i][j] = scaled.get_num();
        }
    }
    long rank = 0;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
        ++rank;
    }
    return rank;
}

/// Inverse of a square matrix, or nullopt if singular.
inline std::optional<Matrix> inverse(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv = identity_matrix(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rational s = 1 / a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

/// Indices of a maximal set of linearly independent rows, in order.
inline std::vector<std::size_t> independent_rows(const Matrix& m, std::size_t cols) {
    std::vector<std::size_t> picked;
    std::vector<std::vector<Rational>> basis; // reduced copies of picked rows
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0; i < m.size() && picked.size() < cols; ++i) {
        auto v = m[i];
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (v[pivots[b]] == 0) continue;
            Rational f = v[pivots[b]];
            for (std::size_t j = 0; j < cols; ++j) v[j] -= f * basis[b][j];
        }
        std::size_t p = 0;
        while (p < cols && v[p] == 0) ++p;
        if (p == cols) continue;
        Rational s = 1 / v[p];
        for (auto& x : v) x *= s;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if (basis[b][p] == 0) continue;
            Rational f = basis[b][p];
            for (std::size_t j = 0; j < cols; ++j) basis[b][j] -= f * v[j];
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
        picked.push_back(i);
    }
    return picked;
}

} // namespace urodlab
