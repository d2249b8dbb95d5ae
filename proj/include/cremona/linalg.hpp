#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cremona/gaussian.hpp"

namespace cremona {

using Mat = std::vector<std::vector<GaussianRational>>;

/// In-place reduced row echelon form; returns the pivot column indices.
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        GaussianRational inv = m[rank][col].inverse();
        for (size_t j = col; j < cols; ++j) m[rank][j] *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            GaussianRational f = m[r][col];
            for (size_t j = col; j < cols; ++j) m[r][j] -= f * m[rank][j];
        }
        pivots.push_back(static_cast<int>(col));
        ++rank;
    }
    return pivots;
}

/// Canonical basis of the nullspace of m (free columns set to 1 in turn).
inline std::vector<std::vector<GaussianRational>> nullspace(Mat m, size_t cols) {
    for (auto& row : m) row.resize(cols);
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<GaussianRational>> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<GaussianRational> v(cols);
        v[free_col] = GaussianRational(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

using Mat3 = std::array<std::array<GaussianRational, 3>, 3>;
using Vec3 = std::array<GaussianRational, 3>;

inline GaussianRational det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            GaussianRational s;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

inline Vec3 mat3_apply(const Mat3& a, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i) {
        GaussianRational s;
        for (int k = 0; k < 3; ++k) s += a[i][k] * v[k];
        r[i] = s;
    }
    return r;
}

inline Mat3 mat3_inverse(const Mat3& m) {
    GaussianRational d = det3(m);
    check_arg(!d.is_zero(), "mat3_inverse: singular matrix");
    Mat3 adj;
    adj[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    adj[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    adj[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    adj[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    adj[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    adj[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    adj[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    adj[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    adj[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    GaussianRational inv = d.inverse();
    for (auto& row : adj)
        for (auto& e : row) e *= inv;
    return adj;
}

} // namespace cremona
