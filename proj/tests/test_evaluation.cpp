#include "fcast/evaluation.hpp"

#include "fcast/errors.hpp"
#include "fcast/rng.hpp"
#include "fcast/stats.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace fcast;

namespace {

// Direct-summation DM oracle, written independently of the implementation.
double dm_brute_force(const std::vector<double>& e1, const std::vector<double>& e2,
                      int K) {
    const auto T = e1.size();
    std::vector<double> d(T);
    for (std::size_t t = 0; t < T; ++t) d[t] = e1[t] * e1[t] - e2[t] * e2[t];
    double dbar = 0.0;
    for (double v : d) dbar += v;
    dbar /= static_cast<double>(T);
    double lrv = 0.0;
    for (int k = 0; k <= K - 1; ++k) {
        double gamma = 0.0;
        for (std::size_t t = static_cast<std::size_t>(k); t < T; ++t) {
            gamma += (d[t] - dbar) * (d[t - static_cast<std::size_t>(k)] - dbar);
        }
        gamma /= static_cast<double>(T);
        lrv += (k == 0 ? 1.0 : 2.0) * gamma;
    }
    return std::sqrt(static_cast<double>(T)) * dbar / std::sqrt(lrv);
}

}  // namespace

TEST_CASE("rmse") {
    CHECK(rmse(std::vector<double>{1, -1, 1, -1}, std::vector<double>{0, 0, 0, 0}) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rmse(std::vector<double>{2, 3}, std::vector<double>{2, 3}) == 0.0);
    CHECK(rmse(std::vector<double>{1, 2}, std::vector<double>{0, 0}) ==
          doctest::Approx(std::sqrt(2.5)).epsilon(1e-12));
    CHECK_THROWS_AS((void)rmse(std::vector<double>{1}, std::vector<double>{1, 2}),
                    LengthMismatchError);
    CHECK_THROWS_AS((void)rmse(std::vector<double>{}, std::vector<double>{}),
                    EmptyInputError);
}

TEST_CASE("u theil") {
    const std::vector<double> a{0.4, -1.2, 0.7, 2.0};
    CHECK(u_theil(a, a) == 0.0);

    std::vector<double> neg = a;
    for (double& v : neg) v = -v;
    CHECK(u_theil(a, neg) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(u_theil(std::vector<double>{1, 1}, std::vector<double>{0, 0}) ==
          doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS((void)u_theil(std::vector<double>{0, 0}, std::vector<double>{0, 0}),
                    ZeroDenominatorError);
}

TEST_CASE("u theil bound and scale invariance") {
    Rng rng(3);
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + rng.uniform_int(0, 20);
        std::vector<double> a(static_cast<std::size_t>(n)), f(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            a[static_cast<std::size_t>(i)] = 10.0 * (rng.uniform() - 0.5);
            f[static_cast<std::size_t>(i)] = 10.0 * (rng.uniform() - 0.5);
        }
        bool zero = true;
        for (double v : a) zero = zero && v == 0.0;
        for (double v : f) zero = zero && v == 0.0;
        if (zero) continue;
        const double u = u_theil(a, f);
        CHECK(u >= 0.0);
        CHECK(u <= 1.0 + 1e-12);

        const double scale = 0.1 + 5.0 * rng.uniform();
        std::vector<double> a2 = a, f2 = f;
        for (double& v : a2) v *= scale;
        for (double& v : f2) v *= scale;
        CHECK(u_theil(a2, f2) == doctest::Approx(u).epsilon(1e-12));

        // rmse symmetric under negating both series
        std::vector<double> an = a, fn = f;
        for (double& v : an) v = -v;
        for (double& v : fn) v = -v;
        CHECK(rmse(an, fn) == doctest::Approx(rmse(a, f)).epsilon(1e-13));
    }
}

TEST_CASE("relative measures reproduce pinned reference ratios") {
    // frozen fixture: absolute scores and their expected rounded ratios
    const RelativeMeasures r1 = relative_measures(0.744, 0.461, 0.824, 0.565);
    CHECK(std::fabs(r1.rrmse - 0.902) <= 0.0015);
    CHECK(std::fabs(r1.ru - 0.815) <= 0.0015);
    const RelativeMeasures r2 = relative_measures(0.667, 0.378, 0.824, 0.565);
    CHECK(std::fabs(r2.rrmse - 0.809) <= 0.0015);
    CHECK(std::fabs(r2.ru - 0.669) <= 0.0015);

    const RelativeMeasures same = relative_measures(0.5, 0.3, 0.5, 0.3);
    CHECK(same.rrmse == 1.0);
    CHECK(same.ru == 1.0);

    CHECK_THROWS_AS((void)relative_measures(1.0, 1.0, 0.0, 1.0), ZeroBenchmarkError);
}

TEST_CASE("dm test") {
    SUBCASE("identical errors are inconclusive") {
        const std::vector<double> e{0.5, -0.2, 0.9, -1.4, 0.3};
        const DmResult r = dm_test(e, e, 2);
        CHECK(r.inconclusive);
        CHECK(std::isnan(r.statistic));
    }

    SUBCASE("balanced alternating differential has zero statistic") {
        // d_t alternates +1/-1, mean zero, K = 1
        std::vector<double> e1, e2;
        for (int i = 0; i < 8; ++i) {
            if (i % 2 == 0) {
                e1.push_back(std::sqrt(2.0));
                e2.push_back(1.0);
            } else {
                e1.push_back(1.0);
                e2.push_back(std::sqrt(2.0));
            }
        }
        const DmResult r = dm_test(e1, e2, 1);
        CHECK_FALSE(r.inconclusive);
        CHECK(r.statistic == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(r.dbar == doctest::Approx(0.0).epsilon(1e-14));
    }

    SUBCASE("shifted differential matches the hand oracle") {
        // d_t = {2, 0, 2, 0, ...}: dbar = 1, gamma_0 = 1, K = 1
        std::vector<double> e1, e2;
        for (int i = 0; i < 8; ++i) {
            if (i % 2 == 0) {
                e1.push_back(std::sqrt(3.0));
                e2.push_back(1.0);
            } else {
                e1.push_back(1.0);
                e2.push_back(1.0);
            }
        }
        const DmResult r = dm_test(e1, e2, 1);
        CHECK(r.dbar == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(r.var_dbar == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
        CHECK(r.statistic == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
        CHECK(r.statistic == doctest::Approx(dm_brute_force(e1, e2, 1)).epsilon(1e-12));
    }

    SUBCASE("auto K follows the cubic-root rule") {
        std::vector<double> e1(12), e2(12);
        Rng rng(4);
        for (int i = 0; i < 12; ++i) {
            e1[static_cast<std::size_t>(i)] = rng.normal();
            e2[static_cast<std::size_t>(i)] = rng.normal();
        }
        CHECK(dm_test(e1, e2).K == 2);  // round(12^(1/3)) = round(2.289)
        e1.resize(27);
        e2.resize(27);
        for (int i = 12; i < 27; ++i) {
            e1[static_cast<std::size_t>(i)] = rng.normal();
            e2[static_cast<std::size_t>(i)] = rng.normal();
        }
        CHECK(dm_test(e1, e2).K == 3);
        CHECK(dm_test(e1, e2, 4).K == 4);  // explicit K wins
    }

    SUBCASE("brute force agreement and exact antisymmetry") {
        Rng rng(5);
        for (int trial = 0; trial < 100; ++trial) {
            const int T = 6 + rng.uniform_int(0, 30);
            const int K = 1 + rng.uniform_int(0, 3);
            std::vector<double> e1(static_cast<std::size_t>(T)),
                e2(static_cast<std::size_t>(T));
            for (int i = 0; i < T; ++i) {
                e1[static_cast<std::size_t>(i)] = rng.normal();
                e2[static_cast<std::size_t>(i)] = 1.3 * rng.normal();
            }
            const DmResult r = dm_test(e1, e2, K);
            if (r.inconclusive) continue;
            CHECK(r.statistic == doctest::Approx(dm_brute_force(e1, e2, K)).epsilon(1e-10));
            const DmResult rev = dm_test(e2, e1, K);
            CHECK(rev.statistic == -r.statistic);  // exact, not approximate
            CHECK(rev.p_value == r.p_value);
        }
    }

    SUBCASE("K = 1 equals the plain t statistic of the mean") {
        Rng rng(6);
        std::vector<double> e1(20), e2(20);
        for (int i = 0; i < 20; ++i) {
            e1[static_cast<std::size_t>(i)] = rng.normal() + 0.4;
            e2[static_cast<std::size_t>(i)] = rng.normal();
        }
        const DmResult r = dm_test(e1, e2, 1);
        std::vector<double> d(20);
        for (int i = 0; i < 20; ++i) {
            d[static_cast<std::size_t>(i)] =
                e1[static_cast<std::size_t>(i)] * e1[static_cast<std::size_t>(i)] -
                e2[static_cast<std::size_t>(i)] * e2[static_cast<std::size_t>(i)];
        }
        const double tstat = mean(d) / std::sqrt(autocovariance(d, 0) / 20.0);
        CHECK(r.statistic == doctest::Approx(tstat).epsilon(1e-12));
    }

    SUBCASE("input validation") {
        std::vector<double> a{1, 2, 3};
        CHECK_THROWS_AS((void)dm_test(a, a, 1), TooShortError);
        std::vector<double> b{1, 2, 3, 4};
        CHECK_THROWS_AS((void)dm_test(b, b, 9), BadSpecError);
    }
}
