#include "fcast/spline.hpp"

#include "fcast/errors.hpp"

#include <algorithm>
#include <cstddef>

namespace fcast {

NaturalCubicSpline::NaturalCubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    if (n != y_.size()) throw LengthMismatchError("spline knot arrays differ in length");
    if (n < 2) throw TooFewKnotsError("spline needs at least 2 knots");
    for (std::size_t i = 1; i < n; ++i) {
        if (x_[i] <= x_[i - 1]) throw DataError("spline knots must be strictly increasing");
    }

    m_.assign(n, 0.0);
    if (n == 2) return;  // a single linear segment

    // Tridiagonal system for interior second derivatives:
    //   h_{i-1} m_{i-1} + 2(h_{i-1}+h_i) m_i + h_i m_{i+1} = rhs_i
    // with rhs_i = 6((y_{i+1}-y_i)/h_i - (y_i-y_{i-1})/h_{i-1}).
    const std::size_t interior = n - 2;
    std::vector<double> diag(interior), upper(interior), rhs(interior);
    for (std::size_t i = 0; i < interior; ++i) {
        const double h0 = x_[i + 1] - x_[i];
        const double h1 = x_[i + 2] - x_[i + 1];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((y_[i + 2] - y_[i + 1]) / h1 - (y_[i + 1] - y_[i]) / h0);
    }

    // Thomas forward sweep; the sub-diagonal entry for row i is h_i.
    for (std::size_t i = 1; i < interior; ++i) {
        const double sub = x_[i + 1] - x_[i];
        const double w = sub / diag[i - 1];
        diag[i] -= w * upper[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    m_[interior] = rhs[interior - 1] / diag[interior - 1];
    for (std::size_t i = interior - 1; i >= 1; --i) {
        m_[i] = (rhs[i - 1] - upper[i - 1] * m_[i + 1]) / diag[i - 1];
    }
}

double NaturalCubicSpline::operator()(double at) const {
    const std::size_t n = x_.size();
    auto it = std::upper_bound(x_.begin(), x_.end(), at);
    std::size_t hi = static_cast<std::size_t>(it - x_.begin());
    hi = std::clamp<std::size_t>(hi, 1, n - 1);
    const std::size_t lo = hi - 1;

    const double h = x_[hi] - x_[lo];
    const double a = (x_[hi] - at) / h;
    const double b = (at - x_[lo]) / h;
    return a * y_[lo] + b * y_[hi] +
           ((a * a * a - a) * m_[lo] + (b * b * b - b) * m_[hi]) * h * h / 6.0;
}

}  // namespace fcast
