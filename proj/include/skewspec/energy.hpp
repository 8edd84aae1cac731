#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "skewspec/eigen.hpp"
#include "skewspec/errors.hpp"
#include "skewspec/matrix.hpp"

namespace skewspec {

inline double skew_energy(const IntMatrix& s) {
    double e = 0.0;
    for (double v : skew_spectrum(s).values) e += std::abs(v);
    return e;
}

/// Predicted spectrum of a skew-symmetric matrix: (value, multiplicity) pairs
/// for the +-value eigenvalue pairs, plus a zero count. Expanding gives
/// 2 * sum(multiplicities) + zero_multiplicity values.
struct SpectrumPrediction {
    std::vector<std::pair<double, int>> entries; // value > 0, ascending
    int zero_multiplicity = 0;

    int order() const {
        int total = zero_multiplicity;
        for (auto [v, mult] : entries) total += 2 * mult;
        return total;
    }
};

namespace detail {

inline void require_positive(const std::vector<double>& vals, const char* who) {
    for (double v : vals)
        if (!(v > 0.0)) throw InvalidSpectrum(std::string(who) + " must list strictly positive values");
}

inline SpectrumPrediction from_accumulator(std::map<double, int>&& acc, int zeros) {
    SpectrumPrediction p;
    p.entries.assign(acc.begin(), acc.end());
    p.zero_multiplicity = zeros;
    return p;
}

} // namespace detail

/// Spectrum of the oriented Kronecker product of a bipartite H (order m,
/// positive eigenvalue parts mu) with G (order n, positive parts lambda):
/// each (mu_j, lambda_k) contributes +-(mu_j * lambda_k) twice, the rest is 0.
inline SpectrumPrediction predict_kronecker(const std::vector<double>& mu, int m,
                                            const std::vector<double>& lambda, int n) {
    const int t = static_cast<int>(mu.size());
    const int r = static_cast<int>(lambda.size());
    detail::require_positive(mu, "mu");
    detail::require_positive(lambda, "lambda");
    if (2 * t > m || 2 * r > n)
        throw InvalidSpectrum("more nonzero eigenvalue pairs than the order allows");
    std::map<double, int> acc;
    for (double u : mu)
        for (double l : lambda) acc[u * l] += 2;
    return detail::from_accumulator(std::move(acc), m * n - 4 * r * t);
}

/// Spectrum of the oriented strong product: +-sqrt((mu^2+1)(lambda^2+1) - 1)
/// twice per pair, +-mu_j with multiplicity n - 2r, +-lambda_k with
/// multiplicity m - 2t, and (m - 2t)(n - 2r) zeros.
inline SpectrumPrediction predict_strong(const std::vector<double>& mu, int m,
                                         const std::vector<double>& lambda, int n) {
    const int t = static_cast<int>(mu.size());
    const int r = static_cast<int>(lambda.size());
    detail::require_positive(mu, "mu");
    detail::require_positive(lambda, "lambda");
    if (2 * t > m || 2 * r > n)
        throw InvalidSpectrum("more nonzero eigenvalue pairs than the order allows");
    std::map<double, int> acc;
    for (double u : mu)
        for (double l : lambda) acc[std::sqrt((u * u + 1.0) * (l * l + 1.0) - 1.0)] += 2;
    if (n - 2 * r > 0)
        for (double u : mu) acc[u] += n - 2 * r;
    if (m - 2 * t > 0)
        for (double l : lambda) acc[l] += m - 2 * t;
    return detail::from_accumulator(std::move(acc), (m - 2 * t) * (n - 2 * r));
}

struct ComparisonReport {
    bool pass = false;
    double max_abs_dev = 0.0;
    int order = 0;
    std::vector<double> predicted, computed;
};

/// Compares a prediction against a computed spectrum elementwise after
/// expanding both to sorted multisets of equal size.
inline ComparisonReport compare(const SpectrumPrediction& prediction, const SkewSpectrum& computed,
                                double tol = 1e-8) {
    std::vector<double> pred;
    pred.reserve(prediction.order());
    for (auto [v, mult] : prediction.entries)
        for (int i = 0; i < mult; ++i) {
            pred.push_back(v);
            pred.push_back(-v);
        }
    pred.insert(pred.end(), prediction.zero_multiplicity, 0.0);
    std::sort(pred.begin(), pred.end());
    if (pred.size() != computed.values.size())
        throw OrderMismatch("prediction covers " + std::to_string(pred.size()) +
                            " values, computed spectrum has " + std::to_string(computed.values.size()));
    double dev = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        dev = std::max(dev, std::abs(pred[i] - computed.values[i]));
    ComparisonReport rep;
    rep.pass = dev <= tol;
    rep.max_abs_dev = dev;
    rep.order = static_cast<int>(pred.size());
    rep.predicted = std::move(pred);
    rep.computed = computed.values;
    return rep;
}

} // namespace skewspec
