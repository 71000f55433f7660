#pragma once

namespace unitfit::specfun {

/// Natural log of the gamma function for x > 0.
/// Throws std::domain_error for x <= 0 or non-finite x.
double log_gamma(double x);

/// Digamma function psi(x) = d/dx ln Gamma(x) for x > 0.
/// Throws std::domain_error for x <= 0 or non-finite x.
double digamma(double x);

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and x in [0, 1].
/// Monotone nondecreasing in x with I_0 = 0 and I_1 = 1.
/// Throws std::domain_error outside the argument domain.
double reg_inc_beta(double x, double a, double b);

/// ln B(a, b) = ln Gamma(a) + ln Gamma(b) - ln Gamma(a + b).
double log_beta(double a, double b);

} // namespace unitfit::specfun
