#pragma once

#include <vector>

namespace fcast {

/// Natural cubic spline through (x, y) knots: second derivative zero at both
/// ends. Interior second derivatives come from the standard tridiagonal
/// system, solved by the Thomas algorithm.
class NaturalCubicSpline {
public:
    /// Knots must be strictly increasing and at least 2.
    NaturalCubicSpline(std::vector<double> x, std::vector<double> y);

    /// Evaluates the spline; clamps to the boundary cubic outside the knots.
    [[nodiscard]] double operator()(double at) const;

    [[nodiscard]] const std::vector<double>& second_derivatives() const {
        return m_;
    }

private:
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> m_;  // second derivatives at knots, m_[0] = m_[n-1] = 0
};

}  // namespace fcast
