#include <doctest.h>

#include <cmath>

#include "specialfun.hpp"

using namespace zagreb;

TEST_CASE("log_gamma matches the stdlib and the duplication identity") {
  for (double x = 0.1; x < 50.0; x += 0.37)
    CHECK(std::fabs(log_gamma(x) - std::lgamma(x)) < 1e-12 * (1 + std::fabs(std::lgamma(x))));
  // Gamma(x) Gamma(x+1/2) = 2^{1-2x} sqrt(pi) Gamma(2x)
  for (double x = 0.5; x <= 50.0; x += 0.25) {
    const double lhs = log_gamma(x) + log_gamma(x + 0.5);
    const double rhs = (1.0 - 2.0 * x) * kLn2 + 0.5 * kLnPi + log_gamma(2.0 * x);
    CHECK(std::fabs(lhs - rhs) < 1e-12);
  }
  CHECK_THROWS_AS(log_gamma(0.0), contract_error);
}

TEST_CASE("digamma recurrence and reflection values") {
  // psi(x+1) = psi(x) + 1/x
  for (double x = 0.3; x < 30.0; x += 0.7)
    CHECK(std::fabs(digamma(x + 1.0) - digamma(x) - 1.0 / x) < 1e-13);
  CHECK(std::fabs(digamma(1.0) + kEulerGamma) < 1e-13);
  CHECK(std::fabs(digamma(2.0) - (1.0 - kEulerGamma)) < 1e-13);
  // series from the mean computation: 2 sum_{j>=2} psi(j)/(j(j+1)) = 2 - gamma
  double s = 0.0;
  const int J = 1000000;
  for (int j = 2; j <= J; ++j) s += digamma(j) / (static_cast<double>(j) * (j + 1));
  CHECK(std::fabs(2.0 * s - (2.0 - kEulerGamma)) < 5e-5);
}

TEST_CASE("harmonic numbers are exact") {
  CHECK(harmonic(0) == Rat(0));
  CHECK(harmonic(1) == Rat(1));
  CHECK(harmonic(5) == Rat(137, 60));
  for (int n = 1; n <= 300; ++n)
    CHECK(harmonic(n) - harmonic(n - 1) == Rat(1, n));
}

TEST_CASE("shifted catalan numbers") {
  CHECK(catalan(1) == 1);
  CHECK(catalan(2) == 1);
  CHECK(catalan(3) == 2);
  CHECK(catalan(4) == 5);
  CHECK(catalan(5) == 14);
  // convolution C_n = sum_{j=1}^{n-1} C_j C_{n-j}, n >= 2
  for (int n = 2; n <= 60; ++n) {
    Int s = 0;
    for (int j = 1; j < n; ++j) s += catalan(j) * catalan(n - j);
    CHECK(s == catalan(n));
  }
}

TEST_CASE("chi-square tail probabilities") {
  CHECK(gamma_q(0.5, 0.0) == 1.0);
  // classical 5% critical values
  CHECK(std::fabs(chi_square_pvalue(3.841, 1) - 0.05) < 2e-4);
  CHECK(std::fabs(chi_square_pvalue(18.307, 10) - 0.05) < 2e-4);
  CHECK(std::fabs(chi_square_pvalue(124.342, 100) - 0.05) < 2e-4);
}
