#pragma once

#include <span>
#include <string>

namespace fcast {

/// Root mean square error over a forecast window.
[[nodiscard]] double rmse(std::span<const double> actual, std::span<const double> forecast);

/// Theil inequality coefficient: RMSE divided by the sum of the
/// root-mean-square levels of actuals and forecasts. Bounded in [0, 1].
/// Throws ZeroDenominatorError when both series are identically zero.
[[nodiscard]] double u_theil(std::span<const double> actual, std::span<const double> forecast);

struct RelativeMeasures {
    double rrmse = 1.0;  // rmse(model) / rmse(benchmark)
    double ru = 1.0;     // u(model) / u(benchmark)
};

/// Ratios against the benchmark; below one means the model beats it.
[[nodiscard]] RelativeMeasures relative_measures(double model_rmse, double model_u,
                                                 double benchmark_rmse, double benchmark_u);

/// Diebold-Mariano equal-accuracy test with squared-error loss.
///
/// The loss differential is d_t = e1_t^2 - e2_t^2, so a positive statistic
/// means the second forecast set is the more accurate one. The long-run
/// variance of d is the truncated flat sum gamma_0 + 2 sum_{k=1..K-1}
/// gamma_k of the lag-k sample autocovariances (divisor T), and
/// S = sqrt(T) dbar / sqrt(lrv) is referred to N(0,1), two-sided.
struct DmResult {
    double statistic = 0.0;
    double p_value = 1.0;
    double dbar = 0.0;
    double var_dbar = 0.0;  // lrv / T
    int K = 1;
    bool inconclusive = false;  // nonpositive truncated variance estimate
};

/// K <= 0 selects the cubic-root rule K = round(T^(1/3)); replication runs
/// should pin K explicitly. Requires equal lengths T >= 4 and 1 <= K <= T.
[[nodiscard]] DmResult dm_test(std::span<const double> e1, std::span<const double> e2,
                               int K = 0);

}  // namespace fcast
