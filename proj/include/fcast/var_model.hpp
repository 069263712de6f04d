#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace fcast {

/// VAR(p) fitted by per-equation least squares on a common design.
///
/// coefficients[l](i, j) is the effect of variable j at lag l+1 on
/// variable i. The input data matrix is retained so exclusion refits
/// (Granger tests) reuse the same sample.
struct VarModel {
    std::vector<std::string> variables;
    int p = 1;
    bool intercept = true;
    Eigen::VectorXd intercepts;                  // zeros when intercept == false
    std::vector<Eigen::MatrixXd> coefficients;   // p matrices, each n x n
    Eigen::MatrixXd residual_cov;                // n x n
    Eigen::MatrixXd residuals;                   // nobs x n
    Eigen::MatrixXd data;                        // original T x n
    int nobs = 0;                                // T - p

    [[nodiscard]] int n_vars() const { return static_cast<int>(data.cols()); }
    [[nodiscard]] int index_of(const std::string& name) const;
};

struct GrangerResult {
    std::string equation;
    std::string excluded;  // variable name, or "all"
    double F = 0.0;
    int df_num = 0;
    int df_den = 0;
    double p_value = 1.0;
};

enum class IrfKind { orthogonalized, generalized };

/// responses[h](i, j): response of variable i, h periods after a one
/// standard deviation shock to variable j.
struct IrfResult {
    IrfKind kind = IrfKind::generalized;
    std::vector<Eigen::MatrixXd> responses;  // H+1 matrices, each n x n
};

/// Fits a VAR(p) on Y (rows are time). Residual covariance uses the
/// per-equation degrees-of-freedom divisor nobs - (n*p + intercept).
[[nodiscard]] VarModel var_estimate(const Eigen::MatrixXd& Y, int p, bool intercept,
                                    std::vector<std::string> names = {});

/// Stacks factor scores and the target into the FAVAR state [F_1..F_r, pi];
/// this column order is the system convention everywhere.
[[nodiscard]] Eigen::MatrixXd favar_assemble(const Eigen::MatrixXd& scores,
                                             const Eigen::VectorXd& target);

/// Iterates the VAR recursion P steps ahead from the last p training rows
/// (chronological: last row of last_obs is the most recent). Forecasted
/// values feed back into later steps; no holdout actuals enter.
[[nodiscard]] Eigen::MatrixXd dynamic_forecast(const VarModel& m,
                                               const Eigen::MatrixXd& last_obs, int P);

/// F test that all lags of the excluded variables are jointly zero in one
/// equation. Pass every other variable to realize the "all" variant.
[[nodiscard]] GrangerResult granger_test(const VarModel& m, const std::string& equation,
                                         const std::vector<std::string>& excluded);

/// Impulse responses out to horizon H from the MA recursion
/// Psi_0 = I, Psi_h = sum_{i=1..min(h,p)} Phi_i Psi_{h-i}. Orthogonalized
/// responses use the Cholesky factor of the residual covariance; generalized
/// responses use Sigma e_j / sqrt(sigma_jj) and are invariant to variable
/// ordering.
[[nodiscard]] IrfResult irf(const VarModel& m, int H, IrfKind kind);

}  // namespace fcast
