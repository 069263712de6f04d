#pragma once

namespace fcast::dist {

/// Standard normal CDF Phi(x), via erfc.
[[nodiscard]] double normal_cdf(double x);

/// Standard normal upper tail 1 - Phi(x).
[[nodiscard]] double normal_sf(double x);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
[[nodiscard]] double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
[[nodiscard]] double gamma_q(double a, double x);

/// Chi-squared upper tail probability with df degrees of freedom.
[[nodiscard]] double chi_squared_sf(double x, double df);

/// Regularized incomplete beta I_x(a, b), 0 <= x <= 1.
[[nodiscard]] double incomplete_beta(double a, double b, double x);

/// Two-sided p-value of a t statistic with df degrees of freedom.
[[nodiscard]] double student_t_two_sided_p(double t, double df);

/// Upper tail probability of an F statistic with (df1, df2) degrees of freedom.
[[nodiscard]] double f_sf(double f, double df1, double df2);

}  // namespace fcast::dist
