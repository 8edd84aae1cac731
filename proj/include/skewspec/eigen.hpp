#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "skewspec/errors.hpp"
#include "skewspec/matrix.hpp"

namespace skewspec {

/// Imaginary parts of the eigenvalues of a skew-symmetric matrix, sorted
/// ascending. The multiset is symmetric under negation.
struct SkewSpectrum {
    std::vector<double> values;

    std::vector<double> positive_values(double zero_threshold = 1e-9) const {
        std::vector<double> out;
        for (double v : values)
            if (v > zero_threshold) out.push_back(v);
        return out;
    }
};

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
/// Iterates until the off-diagonal Frobenius norm drops below 1e-12; if the
/// input is numerically positive semidefinite, eigenvalues below 1e-10 are
/// clamped to zero.
inline std::vector<double> symmetric_eigenvalues(const FloatMatrix& m, int max_sweeps = 100) {
    if (m.rows != m.cols) throw DimensionMismatch("eigensolver needs a square matrix");
    const int n = m.rows;
    for (double v : m.entries)
        if (!std::isfinite(v)) throw Error("matrix entry is not finite");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(m.at(i, j) - m.at(j, i)) > 1e-12)
                throw Error("matrix is not symmetric at entry (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");

    std::vector<double> a = m.entries;
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) at(i, j) = at(j, i) = 0.5 * (at(i, j) + at(j, i));

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += 2.0 * at(i, j) * at(i, j);
        return std::sqrt(s);
    };

    constexpr double off_target = 1e-12;
    double off = off_norm();
    int sweep = 0;
    while (off >= off_target) {
        if (sweep++ >= max_sweeps) throw NonConvergence(off);
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150)
                    t = 1.0 / (2.0 * theta); // avoid overflow in theta*theta
                else
                    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = at(p, k) = c * akp - s * akq;
                    at(k, q) = at(q, k) = s * akp + c * akq;
                }
            }
        }
        off = off_norm();
    }

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = at(i, i);
    std::sort(vals.begin(), vals.end());
    if (!vals.empty() && vals.front() >= -1e-10)
        for (double& v : vals)
            if (v < 1e-10) v = 0.0;
    return vals;
}

namespace detail {

inline void require_skew(const IntMatrix& s) {
    if (s.rows != s.cols) throw NotSkewSymmetric("matrix is not square");
    for (int i = 0; i < s.rows; ++i)
        for (int j = i; j < s.cols; ++j)
            if (s.at(i, j) != -s.at(j, i))
                throw NotSkewSymmetric("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                       ") breaks skew-symmetry");
}

} // namespace detail

/// Spectrum of a skew-symmetric integer matrix, reported as the imaginary
/// parts. Recovered from the positive semidefinite product S^T S: nonzero
/// singular values come in equal pairs, and each pair contributes one +sigma
/// and one -sigma.
inline SkewSpectrum skew_spectrum(const IntMatrix& s) {
    detail::require_skew(s);
    const int n = s.rows;
    const IntMatrix sts = matmul(transpose(s), s);
    const std::vector<double> eig = symmetric_eigenvalues(to_float(sts));

    std::vector<double> sv(n);
    for (int i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(0.0, eig[i]));
    std::sort(sv.rbegin(), sv.rend());

    std::vector<double> out;
    out.reserve(n);
    int i = 0;
    while (i + 1 < n && sv[i + 1] > 0.0) {
        const double sigma = 0.5 * (sv[i] + sv[i + 1]);
        out.push_back(sigma);
        out.push_back(-sigma);
        i += 2;
    }
    while (static_cast<int>(out.size()) < n) out.push_back(0.0);
    std::sort(out.begin(), out.end());
    return SkewSpectrum{std::move(out)};
}

} // namespace skewspec
