#pragma once

namespace tempograph::special {

/// Standard normal CDF.
double normal_cdf(double x);

/// Inverse of the standard normal CDF for p in (0, 1), accurate to ~1e-15.
double normal_quantile(double p);

/// Regularized incomplete beta I_x(a, b).
double incomplete_beta(double a, double b, double x);

/// Two-sided tail probability P(|T| >= |t|) for Student's t with `dof` degrees of freedom.
double student_t_two_sided_p(double t, double dof);

}  // namespace tempograph::special
