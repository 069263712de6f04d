#include "fcast/var_model.hpp"

#include "fcast/distributions.hpp"
#include "fcast/errors.hpp"

#include <algorithm>
#include <cmath>

namespace fcast {

int VarModel::index_of(const std::string& name) const {
    const auto it = std::find(variables.begin(), variables.end(), name);
    if (it == variables.end()) {
        throw BadSpecError("VAR: unknown variable '" + name + "'");
    }
    return static_cast<int>(it - variables.begin());
}

namespace {

// Lagged design for rows t = p..T-1: columns are
// [intercept?] [y_{t-1} all vars] [y_{t-2} all vars] ... [y_{t-p} all vars].
Eigen::MatrixXd build_design(const Eigen::MatrixXd& Y, int p, bool intercept) {
    const Eigen::Index T = Y.rows();
    const Eigen::Index n = Y.cols();
    const Eigen::Index rows = T - p;
    const Eigen::Index cols = (intercept ? 1 : 0) + n * p;
    Eigen::MatrixXd Z(rows, cols);
    for (Eigen::Index t = p; t < T; ++t) {
        Eigen::Index col = 0;
        if (intercept) Z(t - p, col++) = 1.0;
        for (int lag = 1; lag <= p; ++lag) {
            for (Eigen::Index j = 0; j < n; ++j) {
                Z(t - p, col++) = Y(t - lag, j);
            }
        }
    }
    return Z;
}

}  // namespace

VarModel var_estimate(const Eigen::MatrixXd& Y, int p, bool intercept,
                      std::vector<std::string> names) {
    const Eigen::Index T = Y.rows();
    const Eigen::Index n = Y.cols();
    if (p < 1) throw BadSpecError("var_estimate: p must be >= 1");
    if (T <= n * p + 1) {
        throw SampleTooSmallError("var_estimate: T must exceed n*p + 1");
    }
    if (names.empty()) {
        for (Eigen::Index j = 0; j < n; ++j) names.push_back("y" + std::to_string(j + 1));
    }
    if (static_cast<Eigen::Index>(names.size()) != n) {
        throw LengthMismatchError("var_estimate: names length must match columns");
    }

    const Eigen::MatrixXd Z = build_design(Y, p, intercept);
    const Eigen::MatrixXd targets = Y.bottomRows(T - p);

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(Z);
    if (qr.rank() < Z.cols()) {
        throw RankDeficientError("var_estimate: lag design is rank deficient");
    }
    // One multi-RHS solve covers every equation at once.
    const Eigen::MatrixXd B = qr.solve(targets);  // cols(Z) x n

    VarModel m;
    m.variables = std::move(names);
    m.p = p;
    m.intercept = intercept;
    m.data = Y;
    m.nobs = static_cast<int>(T - p);
    m.intercepts = intercept ? Eigen::VectorXd(B.row(0).transpose())
                             : Eigen::VectorXd(Eigen::VectorXd::Zero(n));
    const Eigen::Index offset = intercept ? 1 : 0;
    for (int lag = 0; lag < p; ++lag) {
        // Row block for lag l holds coefficients for all variables; transpose
        // so Phi(i, j) multiplies variable j in equation i.
        m.coefficients.push_back(B.middleRows(offset + lag * n, n).transpose());
    }
    m.residuals = targets - Z * B;
    const auto dof = static_cast<double>(m.nobs - (static_cast<int>(n) * p +
                                                   (intercept ? 1 : 0)));
    if (dof <= 0) throw SampleTooSmallError("var_estimate: no residual degrees of freedom");
    m.residual_cov = m.residuals.transpose() * m.residuals / dof;
    return m;
}

Eigen::MatrixXd favar_assemble(const Eigen::MatrixXd& scores,
                               const Eigen::VectorXd& target) {
    if (scores.rows() != target.size()) {
        throw LengthMismatchError("favar_assemble: scores and target lengths differ");
    }
    Eigen::MatrixXd Y(scores.rows(), scores.cols() + 1);
    Y.leftCols(scores.cols()) = scores;
    Y.rightCols(1) = target;
    return Y;
}

Eigen::MatrixXd dynamic_forecast(const VarModel& m, const Eigen::MatrixXd& last_obs,
                                 int P) {
    const int n = m.n_vars();
    if (last_obs.rows() != m.p || last_obs.cols() != n) {
        throw LengthMismatchError("dynamic_forecast: last_obs must be p x n");
    }
    if (P < 1) throw BadSpecError("dynamic_forecast: P must be >= 1");

    // history holds the p most recent values, oldest first.
    Eigen::MatrixXd history = last_obs;
    Eigen::MatrixXd out(P, n);
    for (int s = 0; s < P; ++s) {
        Eigen::VectorXd next = m.intercepts;
        for (int lag = 1; lag <= m.p; ++lag) {
            next += m.coefficients[static_cast<std::size_t>(lag - 1)] *
                    history.row(m.p - lag).transpose();
        }
        out.row(s) = next.transpose();
        if (m.p > 1) {
            history.topRows(m.p - 1) = history.bottomRows(m.p - 1).eval();
        }
        history.row(m.p - 1) = next.transpose();
    }
    return out;
}

GrangerResult granger_test(const VarModel& m, const std::string& equation,
                           const std::vector<std::string>& excluded) {
    if (excluded.empty()) throw BadSpecError("granger_test: excluded set is empty");
    const int eq = m.index_of(equation);
    std::vector<int> drop;
    drop.reserve(excluded.size());
    for (const auto& name : excluded) {
        const int idx = m.index_of(name);
        if (idx == eq) {
            throw BadSpecError("granger_test: cannot exclude the equation's own lags");
        }
        drop.push_back(idx);
    }

    const int n = m.n_vars();
    const int offset = m.intercept ? 1 : 0;
    const Eigen::MatrixXd Z = build_design(m.data, m.p, m.intercept);
    const Eigen::VectorXd y = m.data.bottomRows(m.data.rows() - m.p).col(eq);

    // Restricted design: drop every lag column of the excluded variables.
    std::vector<Eigen::Index> keep;
    for (Eigen::Index c = 0; c < Z.cols(); ++c) {
        if (c < offset) {
            keep.push_back(c);
            continue;
        }
        const int var = static_cast<int>((c - offset) % n);
        if (std::find(drop.begin(), drop.end(), var) == drop.end()) keep.push_back(c);
    }
    Eigen::MatrixXd Zr(Z.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) {
        Zr.col(static_cast<Eigen::Index>(c)) = Z.col(keep[c]);
    }

    const auto ssr_of = [&y](const Eigen::MatrixXd& X) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
        if (qr.rank() < X.cols()) {
            throw RankDeficientError("granger_test: design is rank deficient");
        }
        return (y - X * qr.solve(y)).squaredNorm();
    };
    const double ssr_u = ssr_of(Z);
    const double ssr_r = ssr_of(Zr);

    GrangerResult g;
    g.equation = equation;
    g.excluded = excluded.size() + 1 == static_cast<std::size_t>(n)
                     ? "all"
                     : excluded.size() == 1 ? excluded.front() : "set";
    g.df_num = m.p * static_cast<int>(drop.size());
    g.df_den = m.nobs - (n * m.p + offset);
    g.F = ((ssr_r - ssr_u) / static_cast<double>(g.df_num)) /
          (ssr_u / static_cast<double>(g.df_den));
    g.F = std::max(0.0, g.F);  // guard the exactly-nested roundoff case
    g.p_value = dist::f_sf(g.F, static_cast<double>(g.df_num),
                           static_cast<double>(g.df_den));
    return g;
}

IrfResult irf(const VarModel& m, int H, IrfKind kind) {
    if (H < 0) throw BadSpecError("irf: H must be >= 0");
    const int n = m.n_vars();

    // MA coefficients Psi_h.
    std::vector<Eigen::MatrixXd> psi;
    psi.reserve(static_cast<std::size_t>(H) + 1);
    psi.push_back(Eigen::MatrixXd::Identity(n, n));
    for (int h = 1; h <= H; ++h) {
        Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
        for (int i = 1; i <= std::min(h, m.p); ++i) {
            acc += m.coefficients[static_cast<std::size_t>(i - 1)] *
                   psi[static_cast<std::size_t>(h - i)];
        }
        psi.push_back(std::move(acc));
    }

    IrfResult out;
    out.kind = kind;
    out.responses.reserve(psi.size());
    if (kind == IrfKind::orthogonalized) {
        Eigen::LLT<Eigen::MatrixXd> llt(m.residual_cov);
        if (llt.info() != Eigen::Success) {
            throw CholeskyError("irf: residual covariance is not positive definite");
        }
        const Eigen::MatrixXd L = llt.matrixL();
        for (const auto& ph : psi) out.responses.push_back(ph * L);
    } else {
        Eigen::MatrixXd scale(n, n);  // column j: Sigma e_j / sqrt(sigma_jj)
        for (int j = 0; j < n; ++j) {
            scale.col(j) = m.residual_cov.col(j) / std::sqrt(m.residual_cov(j, j));
        }
        for (const auto& ph : psi) out.responses.push_back(ph * scale);
    }
    return out;
}

}  // namespace fcast
