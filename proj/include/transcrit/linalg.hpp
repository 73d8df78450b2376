/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <optional>
#include <vector>

#include "transcrit/bigint.hpp"

namespace transcrit {

// Dense exact rational matrices, row-major. Everything here is plain Gaussian
// elimination; the dimensions in this project are the field degree (tiny).
using VecQ = std::vector<BigRat>;
using MatQ = std::vector<VecQ>;

inline MatQ mat_zero(std::size_t rows, std::size_t cols) {
    return MatQ(rows, VecQ(cols, BigRat(0)));
}

inline MatQ mat_identity(std::size_t n) {
    MatQ m = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline VecQ mat_apply(const MatQ& m, const VecQ& v) {
    VecQ r(m.size(), BigRat(0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

namespace detail {
// Reduce to row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> echelon(MatQ& a) {
    std::vector<std::size_t> pivots;
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0, r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        BigRat inv = a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            BigRat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}
} // namespace detail

inline std::size_t mat_rank(MatQ a) { return detail::echelon(a).size(); }

// Solve A·x = b for square or tall A with full column rank; nullopt when
// inconsistent or underdetermined.
inline std::optional<VecQ> mat_solve(const MatQ& a, const VecQ& b) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    MatQ aug = a;
    for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    auto pivots = detail::echelon(aug);
    bool aug_pivot = !pivots.empty() && pivots.back() == cols;
    if (aug_pivot) return std::nullopt;  // inconsistent
    if (pivots.size() < cols) return std::nullopt;
    VecQ x(cols, BigRat(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

inline std::optional<MatQ> mat_invert(const MatQ& a) {
    std::size_t n = a.size();
    MatQ aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? BigRat(1) : BigRat(0));
    }
    auto pivots = detail::echelon(aug);
    // all n pivots must land in the left block
    if (pivots.size() < n || pivots[n - 1] >= n) return std::nullopt;
    MatQ inv = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

} // namespace transcrit
