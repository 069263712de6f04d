#pragma once

#include "fcast/ols.hpp"
#include "fcast/time_series.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace fcast {

/// Deterministic term in the ADF regression: intercept only (drift) or
/// intercept plus linear trend (trend).
enum class AdfSpec { drift, trend };

[[nodiscard]] std::string to_string(AdfSpec spec);
[[nodiscard]] AdfSpec adf_spec_from_string(const std::string& text);

/// One ADF regression
///   dy_t = d_t + rho * y_{t-1} + sum_{j=1..k} gamma_j * dy_{t-j} + u_t
/// fitted over t = start..n-1 (0-based; start >= k+1 so every lag exists).
struct AdfFit {
    OlsFit fit;
    double statistic = 0.0;  // t-ratio on rho
    double sigma2_ml = 0.0;  // SSR / nobs, the variance entering the AIC
    int k = 0;
    int start = 0;
    int nobs = 0;
};

struct LagSelection {
    int k_opt = 0;
    double aic_opt = 0.0;
    std::vector<double> aic;  // aic[k] for k = 0..k_max, one common sample
    int k_max = 0;
};

struct AdfResult {
    AdfSpec spec = AdfSpec::drift;
    int k_max = 0;
    int k_opt = 0;
    double aic_opt = 0.0;
    double statistic = 0.0;
    double p_value = 1.0;
    std::map<double, bool> reject_at;  // keys 0.01, 0.05, 0.10
};

/// Schwert maximum lag bound floor(12 * (T/100)^(1/4)); requires T >= 16.
[[nodiscard]] int schwert_max_lag(int T);

[[nodiscard]] AdfFit adf_fit(std::span<const double> y, int k, AdfSpec spec, int start);

/// Fits every k in 0..k_max on the common effective sample starting at
/// k_max+1, so the AIC values are comparable; AIC(k) = log(sigma2_ml(k)) +
/// 2k/T_eff. Ties break toward smaller k. k_max <= 0 means the Schwert bound.
[[nodiscard]] LagSelection select_lag(std::span<const double> y, AdfSpec spec,
                                      int k_max = 0);

/// MacKinnon (1994) response-surface p-value for the trend-specification
/// ADF t statistic (single series, large-T surface).
[[nodiscard]] double mackinnon_trend_p(double statistic);

/// Maps an ADF statistic to a p-value: trend spec through the MacKinnon
/// surface, drift spec through the standard normal lower tail (one-sided,
/// left).
[[nodiscard]] double adf_p_value(double statistic, AdfSpec spec);

/// Full test: Schwert bound, AIC lag selection on the common sample, final
/// fit at k_opt on the maximal sample for that k.
[[nodiscard]] AdfResult adf_test(std::span<const double> y, AdfSpec spec);

struct IntegrationResult {
    int order = 0;                 // 0, 1 or 2 (capped at 2)
    std::vector<AdfResult> trail;  // one entry per differencing level tested
};

/// Tests the series at `level`, differencing and retesting while the unit
/// root is not rejected. Differenced series are tested under the drift spec
/// (differencing removes a linear trend).
[[nodiscard]] IntegrationResult integration_order(const TimeSeries& s, AdfSpec spec,
                                                  double level);

}  // namespace fcast
