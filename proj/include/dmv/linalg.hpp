#ifndef DMV_LINALG_HPP
#define DMV_LINALG_HPP

#include <optional>
#include <vector>

#include "dmv/rational.hpp"

// Small exact dense solvers over the rationals. Dimensions here are tiny
// (the cube dimension, <= 4 or so), so plain Gaussian elimination is fine.

namespace dmv {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

inline Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Solves A x = b exactly; nullopt when A is singular.
inline std::optional<Vec> solve(Mat a, Vec b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Rank of a (rows x cols) rational matrix.
inline std::size_t rank(Mat a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[r]);
        for (std::size_t row = r + 1; row < rows; ++row) {
            if (a[row][col] == 0) continue;
            Rational f = a[row][col] / a[r][col];
            for (std::size_t k = col; k < cols; ++k) a[row][k] -= f * a[r][k];
        }
        ++r;
    }
    return r;
}

/// Dimension of the affine hull of a point set (-1 for the empty set).
inline long affine_dim(const std::vector<Vec>& points) {
    if (points.empty()) return -1;
    Mat diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        Vec d(points[i].size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return static_cast<long>(rank(std::move(diffs)));
}

}  // namespace dmv

#endif
