#include "fcast/distributions.hpp"
#include "fcast/errors.hpp"

#include <doctest.h>

#include <cmath>

using namespace fcast;

TEST_CASE("normal cdf reference points") {
    CHECK(dist::normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(dist::normal_cdf(-1.959963985) == doctest::Approx(0.025).epsilon(1e-7));
    CHECK(dist::normal_cdf(1.644853627) == doctest::Approx(0.95).epsilon(1e-7));
    CHECK(dist::normal_cdf(-2.15) == doctest::Approx(0.0157776).epsilon(1e-4));
    CHECK(dist::normal_sf(1.2) == doctest::Approx(1.0 - dist::normal_cdf(1.2)).epsilon(1e-12));
}

TEST_CASE("incomplete gamma against closed forms") {
    // P(1, x) = 1 - exp(-x)
    for (double x : {0.1, 0.5, 1.0, 2.0, 10.0}) {
        CHECK(dist::gamma_p(1.0, x) == doctest::Approx(1.0 - std::exp(-x)).epsilon(1e-12));
        CHECK(dist::gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-12));
    }
    CHECK(dist::gamma_p(3.7, 0.0) == 0.0);
    CHECK(dist::gamma_q(3.7, 0.0) == 1.0);
    CHECK_THROWS_AS((void)dist::gamma_p(-1.0, 1.0), BadSpecError);
}

TEST_CASE("chi squared tail") {
    // df = 2: sf(x) = exp(-x/2) exactly.
    for (double x : {0.5, 1.0, 3.0, 8.0}) {
        CHECK(dist::chi_squared_sf(x, 2.0) == doctest::Approx(std::exp(-x / 2.0)).epsilon(1e-12));
    }
    CHECK(dist::chi_squared_sf(3.841458821, 1.0) == doctest::Approx(0.05).epsilon(1e-7));
    CHECK(dist::chi_squared_sf(0.0, 5.0) == 1.0);
}

TEST_CASE("incomplete beta basics") {
    // I_x(1,1) = x
    for (double x : {0.1, 0.25, 0.5, 0.9}) {
        CHECK(dist::incomplete_beta(1.0, 1.0, x) == doctest::Approx(x).epsilon(1e-12));
    }
    CHECK(dist::incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(dist::incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    // symmetry I_x(a,b) = 1 - I_{1-x}(b,a)
    CHECK(dist::incomplete_beta(2.5, 4.0, 0.3) ==
          doctest::Approx(1.0 - dist::incomplete_beta(4.0, 2.5, 0.7)).epsilon(1e-12));
}

TEST_CASE("student t two sided") {
    CHECK(dist::student_t_two_sided_p(2.228138852, 10.0) ==
          doctest::Approx(0.05).epsilon(1e-6));
    CHECK(dist::student_t_two_sided_p(0.0, 7.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dist::student_t_two_sided_p(-2.228138852, 10.0) ==
          doctest::Approx(dist::student_t_two_sided_p(2.228138852, 10.0)).epsilon(1e-12));
    // Large df approaches the normal two-sided p.
    CHECK(dist::student_t_two_sided_p(1.96, 1e7) ==
          doctest::Approx(2.0 * dist::normal_sf(1.96)).epsilon(1e-4));
}

TEST_CASE("F upper tail") {
    CHECK(dist::f_sf(4.964603, 1.0, 10.0) == doctest::Approx(0.05).epsilon(1e-5));
    // F(1, df) equals the square of a t(df): identical p-values.
    for (double t : {0.7, 1.3, 2.6}) {
        CHECK(dist::f_sf(t * t, 1.0, 12.0) ==
              doctest::Approx(dist::student_t_two_sided_p(t, 12.0)).epsilon(1e-10));
    }
    CHECK(dist::f_sf(0.0, 3.0, 9.0) == 1.0);
}
