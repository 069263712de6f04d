#include "fcast/evaluation.hpp"

#include "fcast/distributions.hpp"
#include "fcast/errors.hpp"
#include "fcast/stats.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace fcast {

namespace {

void check_pair(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw LengthMismatchError("forecast window lengths differ");
    if (a.empty()) throw EmptyInputError("empty forecast window");
}

double root_mean_square(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s / static_cast<double>(x.size()));
}

}  // namespace

double rmse(std::span<const double> actual, std::span<const double> forecast) {
    check_pair(actual, forecast);
    double s = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i) {
        const double e = actual[i] - forecast[i];
        s += e * e;
    }
    return std::sqrt(s / static_cast<double>(actual.size()));
}

double u_theil(std::span<const double> actual, std::span<const double> forecast) {
    check_pair(actual, forecast);
    const double denom = root_mean_square(actual) + root_mean_square(forecast);
    if (denom == 0.0) throw ZeroDenominatorError("u_theil: both series are zero");
    return rmse(actual, forecast) / denom;
}

RelativeMeasures relative_measures(double model_rmse, double model_u,
                                   double benchmark_rmse, double benchmark_u) {
    if (!(benchmark_rmse > 0.0) || !(benchmark_u > 0.0)) {
        throw ZeroBenchmarkError("relative_measures: benchmark scores must be positive");
    }
    return RelativeMeasures{model_rmse / benchmark_rmse, model_u / benchmark_u};
}

DmResult dm_test(std::span<const double> e1, std::span<const double> e2, int K) {
    check_pair(e1, e2);
    const auto T = static_cast<int>(e1.size());
    if (T < 4) throw TooShortError("dm_test: need at least 4 observations");
    if (K <= 0) K = static_cast<int>(std::lround(std::cbrt(static_cast<double>(T))));
    if (K < 1 || K > T) throw BadSpecError("dm_test: K must be in 1..T");

    std::vector<double> d(static_cast<std::size_t>(T));
    for (int t = 0; t < T; ++t) {
        const auto i = static_cast<std::size_t>(t);
        d[i] = e1[i] * e1[i] - e2[i] * e2[i];
    }

    DmResult r;
    r.K = K;
    r.dbar = mean(d);
    double lrv = autocovariance(d, 0);
    for (int k = 1; k <= K - 1; ++k) {
        lrv += 2.0 * autocovariance(d, static_cast<std::size_t>(k));
    }
    r.var_dbar = lrv / static_cast<double>(T);

    if (!(lrv > 0.0)) {
        // The truncated flat sum can go nonpositive; the test is then
        // uninformative rather than an arithmetic failure.
        r.inconclusive = true;
        r.statistic = std::numeric_limits<double>::quiet_NaN();
        r.p_value = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    r.statistic = std::sqrt(static_cast<double>(T)) * r.dbar / std::sqrt(lrv);
    r.p_value = 2.0 * dist::normal_sf(std::fabs(r.statistic));
    return r;
}

}  // namespace fcast
