#include "fcast/ols.hpp"

#include "fcast/distributions.hpp"
#include "fcast/errors.hpp"

#include <cmath>

namespace fcast {

OlsFit ols(const Eigen::VectorXd& y, const Eigen::MatrixXd& X, bool intercept) {
    if (y.size() != X.rows()) throw LengthMismatchError("ols: y and X row counts differ");

    Eigen::MatrixXd design;
    if (intercept) {
        design.resize(X.rows(), X.cols() + 1);
        design.col(0).setOnes();
        design.rightCols(X.cols()) = X;
    } else {
        design = X;
    }

    const Eigen::Index n = design.rows();
    const Eigen::Index k = design.cols();
    if (n <= k) throw SampleTooSmallError("ols: need more observations than coefficients");

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < k) throw RankDeficientError("ols: design matrix is rank deficient");

    OlsFit fit;
    fit.has_intercept = intercept;
    fit.nobs = static_cast<int>(n);
    fit.coefficients = qr.solve(y);
    fit.residuals = y - design * fit.coefficients;

    const double ssr = fit.residuals.squaredNorm();
    const auto df = static_cast<double>(n - k);
    fit.sigma2 = ssr / df;

    const Eigen::MatrixXd xtx_inv =
        (design.transpose() * design)
            .ldlt()
            .solve(Eigen::MatrixXd::Identity(k, k));
    fit.standard_errors = (fit.sigma2 * xtx_inv.diagonal().array()).sqrt();
    fit.t_stats = fit.coefficients.array() / fit.standard_errors.array();
    fit.p_values.resize(k);
    for (Eigen::Index j = 0; j < k; ++j) {
        fit.p_values(j) = dist::student_t_two_sided_p(fit.t_stats(j), df);
    }

    double tss;
    if (intercept) {
        tss = (y.array() - y.mean()).square().sum();
    } else {
        tss = y.squaredNorm();
    }
    fit.r_squared = tss > 0.0 ? 1.0 - ssr / tss : 0.0;
    return fit;
}

}  // namespace fcast
