#pragma once

#include "fcast/ols.hpp"

#include <Eigen/Dense>

namespace fcast {

/// Shape of a static (one-step-ahead family) forecast model: the target is
/// regressed on r lagged factor scores and m of its own lags, plus an
/// intercept.
struct ForecastSpec {
    int factors_used = 0;  // r
    int target_lags = 1;   // m
    int horizon = 1;       // h, the forecast lead
    bool expanding = false;  // refit as the window advances (default: frozen)
};

/// Contemporaneous regression of the (standardized) target on factor scores,
/// no intercept.
[[nodiscard]] OlsFit static_factor_regression(const Eigen::MatrixXd& scores,
                                              const Eigen::VectorXd& target);

struct StaticForecastResult {
    Eigen::VectorXd forecasts;  // length P, for t = T-P .. T-1
    OlsFit fit;                 // the training-window fit (initial fit when expanding)
};

/// Fits target_t = eta + alpha' F_{t-h} + beta' Z_{t-h} on data through
/// T-P-1 only, then produces P forecasts over the holdout using realized
/// lagged regressors (coefficients frozen unless spec.expanding).
/// Throws InsufficientTrainingError when the training window cannot support
/// the regression.
[[nodiscard]] StaticForecastResult static_forecast(const ForecastSpec& spec,
                                                   const Eigen::MatrixXd& scores,
                                                   const Eigen::VectorXd& target,
                                                   int holdout);

}  // namespace fcast
