#include "fcast/ols.hpp"

#include "fcast/distributions.hpp"
#include "fcast/errors.hpp"
#include "fcast/rng.hpp"

#include <doctest.h>

#include <cmath>

using namespace fcast;

TEST_CASE("exact proportional relation") {
    Eigen::VectorXd x(5), y(5);
    x << 1, 2, 3, 4, 5;
    y = 2.0 * x;
    const OlsFit fit = ols(y, x, /*intercept=*/false);
    CHECK(fit.coefficients(0) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(fit.residuals.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("orthogonal target gives zero slope") {
    Eigen::VectorXd x(4), y(4);
    x << 1, -1, 1, -1;
    y << 1, 1, -1, -1;
    const OlsFit fit = ols(y, x, /*intercept=*/true);
    CHECK(fit.coefficients(1) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(fit.r_squared == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("three point fixture with intercept") {
    // Normal-equations oracle: slope Sxy/Sxx = 3/2, intercept ybar - slope*xbar.
    Eigen::VectorXd x(3), y(3);
    x << 0, 1, 2;
    y << 1, 2, 4;
    const OlsFit fit = ols(y, x, /*intercept=*/true);
    CHECK(fit.coefficients(0) == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    CHECK(fit.coefficients(1) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(fit.nobs == 3);
}

TEST_CASE("standard errors match the simple-regression formula") {
    Rng rng(23);
    Eigen::VectorXd x(40), y(40);
    for (int i = 0; i < 40; ++i) {
        x(i) = rng.normal();
        y(i) = 1.0 + 0.5 * x(i) + 0.3 * rng.normal();
    }
    const OlsFit fit = ols(y, x, /*intercept=*/true);
    const double xbar = x.mean();
    const double sxx = (x.array() - xbar).square().sum();
    const double expected_se = std::sqrt(fit.sigma2 / sxx);
    CHECK(fit.standard_errors(1) == doctest::Approx(expected_se).epsilon(1e-10));
    CHECK(fit.t_stats(1) == doctest::Approx(fit.coefficients(1) / expected_se).epsilon(1e-10));
    CHECK(fit.p_values(1) ==
          doctest::Approx(dist::student_t_two_sided_p(fit.t_stats(1), 38.0)).epsilon(1e-12));
}

TEST_CASE("residuals orthogonal to the design") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 20 + rng.uniform_int(0, 60);
        const int k = 1 + rng.uniform_int(0, 4);
        Eigen::MatrixXd X(n, k);
        Eigen::VectorXd y(n);
        for (int i = 0; i < n; ++i) {
            y(i) = rng.normal();
            for (int j = 0; j < k; ++j) X(i, j) = rng.normal();
        }
        const OlsFit fit = ols(y, X, /*intercept=*/true);
        CHECK(std::fabs(fit.residuals.sum()) < 1e-8);  // intercept column
        for (int j = 0; j < k; ++j) {
            CHECK(std::fabs(X.col(j).dot(fit.residuals)) < 1e-8);
        }
        CHECK(fit.r_squared >= 0.0);
        CHECK(fit.r_squared <= 1.0);
    }
}

TEST_CASE("rank deficiency and short samples rejected") {
    Eigen::MatrixXd X(5, 2);
    Eigen::VectorXd y(5);
    for (int i = 0; i < 5; ++i) {
        X(i, 0) = i;
        X(i, 1) = 2.0 * i;  // duplicated direction
        y(i) = i;
    }
    CHECK_THROWS_AS((void)ols(y, X, false), RankDeficientError);

    Eigen::MatrixXd X2 = Eigen::MatrixXd::Random(3, 3);
    Eigen::VectorXd y2 = Eigen::VectorXd::Random(3);
    CHECK_THROWS_AS((void)ols(y2, X2, false), SampleTooSmallError);
}
