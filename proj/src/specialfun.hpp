#pragma once

#include "basics.hpp"

namespace zagreb {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008;
inline constexpr double kLn2 = 0.69314718055994530941723212146;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334;
inline constexpr double kLnPi = 1.14472988584940017414342735135;

// Stirling series with recurrence shift to x >= 10; absolute error < 1e-13
// over the positive axis (cross-checked against the duplication identity and
// the stdlib in the tests).
double log_gamma(double x);
double digamma(double x);

inline double log_binomial(double n, double r) {
  return log_gamma(n + 1.0) - log_gamma(r + 1.0) - log_gamma(n - r + 1.0);
}

// exact H_n and shifted Catalan C_n = binom(2n-2, n-1)/n (C_1 = 1)
Rat harmonic(std::int64_t n);
Int catalan(std::int64_t n);

// Regularized upper incomplete gamma Q(a, x); chi-square tail
// P(X_df > x) = gamma_q(df/2, x/2).
double gamma_q(double a, double x);
double chi_square_pvalue(double statistic, double dof);

}  // namespace zagreb
