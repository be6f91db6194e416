#pragma once

#include <optional>
#include <vector>

#include "manin/bigint.hpp"
#include "manin/ints.hpp"
#include "manin/rational.hpp"

namespace manin {

// Small dense exact linear algebra over the rationals. Every matrix in this
// project has a handful of rows, so plain Gaussian elimination is the right
// tool.
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

inline QVec to_qvec(const std::vector<Int>& v) {
    QVec r;
    r.reserve(v.size());
    for (Int x : v) r.push_back(rational_from_int(x));
    return r;
}

inline int matrix_rank(QMat m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline int integer_rank(const std::vector<std::vector<Int>>& rows) {
    QMat m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.push_back(to_qvec(r));
    return matrix_rank(std::move(m));
}

inline Rational determinant(QMat m) {
    std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[col], m[pivot]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Solve A x = b for a (possibly tall) system; returns nothing when the
// system is inconsistent. Free variables, if any, are pinned to zero.
inline std::optional<QVec> solve_linear(QMat a, QVec b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[row], a[pivot]);
        std::swap(b[row], b[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            Rational f = a[r][col] / a[row][col];
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
            b[r] -= f * b[row];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (!b[r].is_zero()) return std::nullopt;
    QVec x(cols, Rational(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
        int c = pivot_col_of_row[r];
        x[c] = b[r] / a[r][c];
    }
    return x;
}

// Scale a rational vector to a primitive integer vector pointing the same way.
inline std::vector<Int> clear_denominators(const QVec& v) {
    BigInt lcm(1);
    for (const Rational& x : v) {
        BigInt d = x.denominator();
        BigInt g = BigInt::gcd(lcm, d);
        lcm = (lcm / g) * d;
    }
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Rational& x : v) {
        BigInt scaled = x.numerator() * (lcm / x.denominator());
        out.push_back(scaled.to_int64());
    }
    make_primitive(out);
    return out;
}

} // namespace manin
