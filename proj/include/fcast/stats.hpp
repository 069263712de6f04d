#pragma once

#include "fcast/errors.hpp"

#include <cmath>
#include <span>

namespace fcast {

inline double mean(std::span<const double> x) {
    if (x.empty()) throw EmptyInputError("mean of empty vector");
    double s = 0.0;
    for (double v : x) s += v;
    return s / static_cast<double>(x.size());
}

/// Sample variance with the T-1 divisor (the toolkit-wide convention).
inline double sample_variance(std::span<const double> x) {
    if (x.size() < 2) throw TooShortError("variance needs at least 2 points");
    const double m = mean(x);
    double s = 0.0;
    for (double v : x) s += (v - m) * (v - m);
    return s / static_cast<double>(x.size() - 1);
}

inline double sample_sd(std::span<const double> x) {
    return std::sqrt(sample_variance(x));
}

/// Pearson correlation (divisors cancel).
inline double correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw LengthMismatchError("correlation length mismatch");
    if (x.size() < 2) throw TooShortError("correlation needs at least 2 points");
    const double mx = mean(x);
    const double my = mean(y);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    return sxy / std::sqrt(sxx * syy);
}

/// Lag-k sample autocovariance with divisor T, demeaned by the full-sample mean.
inline double autocovariance(std::span<const double> x, std::size_t k) {
    if (x.empty()) throw EmptyInputError("autocovariance of empty vector");
    if (k >= x.size()) throw TooShortError("autocovariance lag exceeds length");
    const double m = mean(x);
    double s = 0.0;
    for (std::size_t t = k; t < x.size(); ++t) {
        s += (x[t] - m) * (x[t - k] - m);
    }
    return s / static_cast<double>(x.size());
}

}  // namespace fcast
