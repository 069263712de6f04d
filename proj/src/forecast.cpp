#include "fcast/forecast.hpp"

#include "fcast/errors.hpp"

namespace fcast {

OlsFit static_factor_regression(const Eigen::MatrixXd& scores,
                                const Eigen::VectorXd& target) {
    if (scores.rows() != target.size()) {
        throw LengthMismatchError("static_factor_regression: lengths differ");
    }
    return ols(target, scores, /*intercept=*/false);
}

namespace {

// Regressor block for response index t: [F_{t-h} (r cols), pi_{t-h} ..
// pi_{t-h-m+1}].
void fill_row(Eigen::Ref<Eigen::MatrixXd> X, Eigen::Index row, Eigen::Index t,
              const ForecastSpec& spec, const Eigen::MatrixXd& scores,
              const Eigen::VectorXd& target) {
    Eigen::Index col = 0;
    for (int j = 0; j < spec.factors_used; ++j) {
        X(row, col++) = scores(t - spec.horizon, j);
    }
    for (int l = 0; l < spec.target_lags; ++l) {
        X(row, col++) = target(t - spec.horizon - l);
    }
}

OlsFit fit_through(const ForecastSpec& spec, const Eigen::MatrixXd& scores,
                   const Eigen::VectorXd& target, Eigen::Index first,
                   Eigen::Index last) {  // responses t = first..last inclusive
    const Eigen::Index rows = last - first + 1;
    const int ncoef = 1 + spec.factors_used + spec.target_lags;
    if (rows < ncoef + 1) {
        throw InsufficientTrainingError("static_forecast: training window too short");
    }
    Eigen::VectorXd y(rows);
    Eigen::MatrixXd X(rows, ncoef - 1);
    for (Eigen::Index t = first; t <= last; ++t) {
        y(t - first) = target(t);
        fill_row(X, t - first, t, spec, scores, target);
    }
    return ols(y, X, /*intercept=*/true);
}

}  // namespace

StaticForecastResult static_forecast(const ForecastSpec& spec,
                                     const Eigen::MatrixXd& scores,
                                     const Eigen::VectorXd& target, int holdout) {
    const Eigen::Index T = target.size();
    if (spec.factors_used < 0 || spec.target_lags < 0 ||
        spec.factors_used + spec.target_lags < 1) {
        throw BadSpecError("static_forecast: need at least one regressor");
    }
    if (spec.horizon < 1) throw BadSpecError("static_forecast: horizon must be >= 1");
    if (spec.factors_used > 0 && scores.rows() != T) {
        throw LengthMismatchError("static_forecast: scores and target lengths differ");
    }
    if (spec.factors_used > scores.cols()) {
        throw BadSpecError("static_forecast: not enough score columns");
    }
    if (holdout < 1 || holdout >= T) {
        throw BadSpecError("static_forecast: holdout must be in 1..T-1");
    }

    // Earliest usable response index.
    const Eigen::Index t0 =
        spec.horizon + (spec.target_lags > 0 ? spec.target_lags - 1 : 0);
    const Eigen::Index train_last = T - holdout - 1;

    StaticForecastResult out;
    out.fit = fit_through(spec, scores, target, t0, train_last);

    Eigen::VectorXd coef = out.fit.coefficients;
    out.forecasts.resize(holdout);
    Eigen::MatrixXd row(1, coef.size() - 1);
    for (Eigen::Index t = T - holdout; t < T; ++t) {
        if (spec.expanding && t > T - holdout) {
            coef = fit_through(spec, scores, target, t0, t - 1).coefficients;
        }
        fill_row(row, 0, t, spec, scores, target);
        double value = coef(0);
        for (Eigen::Index c = 0; c + 1 < coef.size(); ++c) {
            value += coef(c + 1) * row(0, c);
        }
        out.forecasts(t - (T - holdout)) = value;
    }
    return out;
}

}  // namespace fcast
