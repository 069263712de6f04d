#pragma once

#include "fcast/panel.hpp"

#include <Eigen/Dense>

#include <vector>

namespace fcast {

/// Principal-component decomposition of a standardized panel.
///
/// All N components are kept; consumers slice the leading r. Loadings are
/// unit eigenvectors of the correlation matrix (descending eigenvalues), each
/// flipped so its largest-magnitude coordinate is positive, which makes the
/// decomposition deterministic. Scores are X * loadings, not rescaled.
struct FactorDecomposition {
    Eigen::VectorXd eigenvalues;     // length N, nonincreasing
    Eigen::MatrixXd loadings;        // N x N
    Eigen::MatrixXd scores;          // T x N
    Eigen::VectorXd explained_share; // eigenvalue / N

    /// Reconstruction residual X - F_r * L_r' for the leading r components.
    [[nodiscard]] Eigen::MatrixXd residuals(const Eigen::MatrixXd& X, int r) const;
};

/// Variable-level diagnostics for the retained factors.
struct FactorDiagnostics {
    Eigen::MatrixXd corr_xf;  // N x N, Corr(X_i, F_j) from the sample
    Eigen::MatrixXd cos2;     // squared correlations
    Eigen::MatrixXd ctr;      // contributions, each column sums to 1
    Eigen::VectorXd cutoff;   // length r: mean ctr over significantly correlated variables
    Eigen::MatrixXd significant;      // 0/1 at sig_level, N x r
    Eigen::VectorXd cumulative_share; // length N
    int kaiser_count = 0;
    int r = 0;
};

struct BartlettResult {
    double chi2 = 0.0;
    int df = 0;
    double p_value = 1.0;
};

struct ScreeRow {
    int component = 0;  // 1-based
    double eigenvalue = 0.0;
    double share = 0.0;
    double cumulative = 0.0;
};

/// Sample correlation matrix X'X / (T-1) of a standardized panel.
[[nodiscard]] Eigen::MatrixXd correlation_matrix(const Panel& p);

/// Kaiser-Meyer-Olkin sampling adequacy: off-diagonal correlation mass
/// relative to correlation-plus-partial-correlation mass. An identity matrix
/// maps to 0 (nothing to factor). Throws SingularMatrixError when R cannot
/// be inverted.
[[nodiscard]] double kmo(const Eigen::MatrixXd& R);

/// Bartlett sphericity test of H0 "variables are not intercorrelated":
/// chi2 = -(T - 1 - (2N+5)/6) ln det(R) with N(N-1)/2 degrees of freedom.
[[nodiscard]] BartlettResult bartlett_sphericity(const Eigen::MatrixXd& R, int T);

/// PCA via symmetric eigendecomposition of the correlation matrix. The panel
/// must already be standardized.
[[nodiscard]] FactorDecomposition pca(const Panel& p);

/// Correlations, cos2, contributions and per-factor contribution cutoffs.
/// Cutoff_j is the mean contribution over the variables whose correlation
/// with factor j is significant at sig_level (two-sided t test with T-2 df).
[[nodiscard]] FactorDiagnostics diagnostics(const FactorDecomposition& fd,
                                            const Panel& p, int r,
                                            double sig_level = 0.10);

[[nodiscard]] std::vector<ScreeRow> scree_data(const FactorDecomposition& fd);

/// Number of eigenvalues strictly greater than one.
[[nodiscard]] int kaiser_count(const Eigen::VectorXd& eigenvalues);

}  // namespace fcast
