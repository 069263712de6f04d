#pragma once

#include <Eigen/Dense>

namespace fcast {

/// Least-squares fit with classical (homoskedastic) inference.
///
/// When fitted with an intercept the intercept is coefficient 0 and
/// r_squared is centered; without one, r_squared is the uncentered ratio
/// 1 - SSR / sum(y^2).
struct OlsFit {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd standard_errors;
    Eigen::VectorXd t_stats;
    Eigen::VectorXd p_values;  // two-sided, t distribution with nobs - ncoef df
    Eigen::VectorXd residuals;
    double r_squared = 0.0;
    double sigma2 = 0.0;  // SSR / (nobs - ncoef)
    int nobs = 0;
    bool has_intercept = false;
};

/// OLS of y on X (an intercept column is prepended when requested).
/// Throws RankDeficientError when the design is singular and
/// SampleTooSmallError when rows(X) <= cols(X).
[[nodiscard]] OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X,
                         bool intercept);

}  // namespace fcast
