#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skewspec/errors.hpp"

namespace skewspec {

namespace detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in matrix addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in matrix multiplication");
    return r;
}

} // namespace detail

/// Dense row-major matrix with 64-bit integer entries. All arithmetic is
/// overflow-checked, so a result is either exact or an OverflowError.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::int64_t> entries;

    IntMatrix() = default;
    IntMatrix(int r, int c)
        : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {
        if (r < 0 || c < 0) throw DimensionMismatch("negative matrix shape");
    }
    IntMatrix(int r, int c, std::vector<std::int64_t> e) : rows(r), cols(c), entries(std::move(e)) {
        if (entries.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(c))
            throw DimensionMismatch("entry count does not match matrix shape");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::int64_t& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    std::int64_t at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const IntMatrix&) const = default;
};

struct FloatMatrix {
    int rows = 0, cols = 0;
    std::vector<double> entries;

    FloatMatrix() = default;
    FloatMatrix(int r, int c)
        : rows(r), cols(c), entries(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0) {
        if (r < 0 || c < 0) throw DimensionMismatch("negative matrix shape");
    }

    double& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
    double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

inline FloatMatrix to_float(const IntMatrix& m) {
    FloatMatrix out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.entries.size(); ++i) out.entries[i] = static_cast<double>(m.entries[i]);
    return out;
}

/// result[(i*p + k)][(j*q + l)] = a[i][j] * b[k][l] for a p-by-q matrix b.
inline IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            const std::int64_t aij = a.at(i, j);
            if (aij == 0) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    out.at(i * b.rows + k, j * b.cols + l) = detail::checked_mul(aij, b.at(k, l));
        }
    return out;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows)
        throw DimensionMismatch("cannot multiply " + std::to_string(a.rows) + "x" + std::to_string(a.cols) +
                                " by " + std::to_string(b.rows) + "x" + std::to_string(b.cols));
    IntMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const std::int64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j)
                out.at(i, j) = detail::checked_add(out.at(i, j), detail::checked_mul(aik, b.at(k, j)));
        }
    return out;
}

inline IntMatrix transpose(const IntMatrix& a) {
    IntMatrix out(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out.at(j, i) = a.at(i, j);
    return out;
}

inline IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("cannot add matrices of different shapes");
    IntMatrix out(a.rows, a.cols);
    for (std::size_t i = 0; i < out.entries.size(); ++i)
        out.entries[i] = detail::checked_add(a.entries[i], b.entries[i]);
    return out;
}

/// diag(+1 x m1, -1 x m2)
inline IntMatrix signed_identity(int m1, int m2) {
    IntMatrix out(m1 + m2, m1 + m2);
    for (int i = 0; i < m1; ++i) out.at(i, i) = 1;
    for (int i = m1; i < m1 + m2; ++i) out.at(i, i) = -1;
    return out;
}

/// For a skew-symmetric matrix in bipartite block form [[0, A], [-A^T, 0]]
/// (first m1 rows on the X side), returns [[0, A], [A^T, 0]]. The result has
/// the same singular values as the input.
inline IntMatrix symmetrize_bipartite(const IntMatrix& s, int m1) {
    if (s.rows != s.cols) throw DimensionMismatch("expected a square matrix");
    IntMatrix out = s;
    for (int i = m1; i < s.rows; ++i)
        for (int j = 0; j < m1; ++j) out.at(i, j) = s.at(j, i);
    return out;
}

} // namespace skewspec
