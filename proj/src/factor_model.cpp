#include "fcast/factor_model.hpp"

#include "fcast/distributions.hpp"
#include "fcast/errors.hpp"
#include "fcast/stats.hpp"

#include <cmath>

namespace fcast {

Eigen::MatrixXd FactorDecomposition::residuals(const Eigen::MatrixXd& X, int r) const {
    return X - scores.leftCols(r) * loadings.leftCols(r).transpose();
}

Eigen::MatrixXd correlation_matrix(const Panel& p) {
    const auto T = static_cast<double>(p.rows());
    return p.data.transpose() * p.data / (T - 1.0);
}

double kmo(const Eigen::MatrixXd& R) {
    const Eigen::Index n = R.rows();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(R);
    if (!lu.isInvertible()) throw SingularMatrixError("kmo: correlation matrix is singular");
    const Eigen::MatrixXd S = lu.inverse();

    double r2 = 0.0, q2 = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            if (i == j) continue;
            r2 += R(i, j) * R(i, j);
            const double q = -S(i, j) / std::sqrt(S(i, i) * S(j, j));
            q2 += q * q;
        }
    }
    const double denom = r2 + q2;
    if (denom == 0.0) return 0.0;  // identity correlation: nothing to summarize
    return r2 / denom;
}

BartlettResult bartlett_sphericity(const Eigen::MatrixXd& R, int T) {
    const Eigen::Index n = R.rows();
    if (T <= n) throw SampleTooSmallError("bartlett_sphericity: requires T > N");
    Eigen::LLT<Eigen::MatrixXd> llt(R);
    if (llt.info() != Eigen::Success) {
        throw NonPositiveDeterminantError(
            "bartlett_sphericity: correlation matrix is not positive definite");
    }
    double log_det = 0.0;
    const Eigen::MatrixXd L = llt.matrixL();
    for (Eigen::Index i = 0; i < n; ++i) log_det += std::log(L(i, i));
    log_det *= 2.0;

    BartlettResult out;
    const auto N = static_cast<double>(n);
    out.chi2 = std::max(0.0, -(static_cast<double>(T) - 1.0 - (2.0 * N + 5.0) / 6.0) * log_det);
    out.df = static_cast<int>(n * (n - 1) / 2);
    out.p_value = dist::chi_squared_sf(out.chi2, static_cast<double>(out.df));
    return out;
}

namespace {

void require_standardized(const Panel& p) {
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        const double mean = p.data.col(j).mean();
        const double var = (p.data.col(j).array() - mean).square().sum() /
                           static_cast<double>(p.rows() - 1);
        if (std::fabs(mean) > 1e-8 || std::fabs(var - 1.0) > 1e-6) {
            throw BadSpecError("pca: panel column '" +
                               p.variable_names[static_cast<std::size_t>(j)] +
                               "' is not standardized");
        }
    }
}

// Flip so the largest-magnitude coordinate (first such index on ties) is
// positive.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::fabs(v(i));
        if (mag > best) {
            best = mag;
            arg = i;
        }
    }
    if (v(arg) < 0.0) v = -v;
}

}  // namespace

FactorDecomposition pca(const Panel& p) {
    if (p.rows() < 2) throw TooShortError("pca: panel needs at least 2 rows");
    require_standardized(p);

    const Eigen::MatrixXd R = correlation_matrix(p);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(R);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("pca: eigendecomposition did not converge");
    }

    const Eigen::Index n = R.rows();
    FactorDecomposition fd;
    fd.eigenvalues.resize(n);
    fd.loadings.resize(n, n);
    // Eigen returns ascending eigenvalues; reverse to descending.
    for (Eigen::Index j = 0; j < n; ++j) {
        fd.eigenvalues(j) = solver.eigenvalues()(n - 1 - j);
        fd.loadings.col(j) = solver.eigenvectors().col(n - 1 - j);
        fix_sign(fd.loadings.col(j));
    }
    fd.scores = p.data * fd.loadings;
    fd.explained_share = fd.eigenvalues / static_cast<double>(n);
    return fd;
}

FactorDiagnostics diagnostics(const FactorDecomposition& fd, const Panel& p, int r,
                              double sig_level) {
    const Eigen::Index n = p.cols();
    const Eigen::Index T = p.rows();
    if (r < 1 || r > n) throw BadSpecError("diagnostics: r must be in 1..N");
    if (!(sig_level > 0.0 && sig_level < 1.0)) {
        throw BadSpecError("diagnostics: sig_level must be in (0,1)");
    }

    FactorDiagnostics d;
    d.r = r;
    d.corr_xf.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto xi = p.column(i);
        for (Eigen::Index j = 0; j < n; ++j) {
            // Degenerate score columns (zero eigenvalue) carry no correlation.
            const double sj = fd.scores.col(j).norm();
            if (sj < 1e-12) {
                d.corr_xf(i, j) = 0.0;
                continue;
            }
            std::vector<double> fj(static_cast<std::size_t>(T));
            for (Eigen::Index t = 0; t < T; ++t) {
                fj[static_cast<std::size_t>(t)] = fd.scores(t, j);
            }
            d.corr_xf(i, j) = correlation(xi, fj);
        }
    }
    d.cos2 = d.corr_xf.array().square();

    d.ctr.resize(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double total = d.cos2.col(j).sum();
        d.ctr.col(j) = total > 1e-300 ? (d.cos2.col(j) / total).eval()
                                      : Eigen::VectorXd::Zero(n).eval();
    }

    d.significant.setZero(n, r);
    d.cutoff.setZero(r);
    const auto df = static_cast<double>(T - 2);
    for (Eigen::Index j = 0; j < r; ++j) {
        double sum = 0.0;
        int count = 0;
        for (Eigen::Index i = 0; i < n; ++i) {
            const double rho = d.corr_xf(i, j);
            double pv;
            if (1.0 - rho * rho <= 0.0) {
                pv = 0.0;
            } else {
                const double t = rho * std::sqrt(df / (1.0 - rho * rho));
                pv = dist::student_t_two_sided_p(t, df);
            }
            if (pv < sig_level) {
                d.significant(i, j) = 1.0;
                sum += d.ctr(i, j);
                ++count;
            }
        }
        d.cutoff(j) = count > 0 ? sum / static_cast<double>(count) : 0.0;
    }

    d.cumulative_share.resize(n);
    double acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
        acc += fd.explained_share(j);
        d.cumulative_share(j) = acc;
    }
    d.kaiser_count = kaiser_count(fd.eigenvalues);
    return d;
}

std::vector<ScreeRow> scree_data(const FactorDecomposition& fd) {
    std::vector<ScreeRow> rows;
    rows.reserve(static_cast<std::size_t>(fd.eigenvalues.size()));
    double acc = 0.0;
    for (Eigen::Index j = 0; j < fd.eigenvalues.size(); ++j) {
        acc += fd.explained_share(j);
        rows.push_back(ScreeRow{static_cast<int>(j) + 1, fd.eigenvalues(j),
                                fd.explained_share(j), acc});
    }
    return rows;
}

int kaiser_count(const Eigen::VectorXd& eigenvalues) {
    int count = 0;
    for (Eigen::Index j = 0; j < eigenvalues.size(); ++j) {
        if (eigenvalues(j) > 1.0) ++count;
    }
    return count;
}

}  // namespace fcast
