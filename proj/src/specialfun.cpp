#include "specialfun.hpp"

#include <cmath>

namespace zagreb {

namespace {
// B_{2m} / (2m (2m-1)) for the log-gamma asymptotic series
constexpr double kStirling[] = {
    1.0 / 12.0,   -1.0 / 360.0,        1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0,   1.0 / 156.0,
};
// B_{2m} / (2m) for the digamma asymptotic series
constexpr double kDigamma[] = {
    1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,       -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
};
constexpr double kHalfLn2Pi = 0.91893853320467274178032973640562;
}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw contract_error("log_gamma: requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  double series = 0.0;
  double p = inv;
  for (double c : kStirling) {
    series += c * p;
    p *= inv2;
  }
  return shift + (x - 0.5) * std::log(x) - x + kHalfLn2Pi + series;
}

double digamma(double x) {
  if (!(x > 0.0)) throw contract_error("digamma: requires x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv2 = 1.0 / (x * x);
  double series = 0.0;
  double p = inv2;
  for (double c : kDigamma) {
    series += c * p;
    p *= inv2;
  }
  return shift + std::log(x) - 0.5 / x - series;
}

Rat harmonic(std::int64_t n) {
  if (n < 0) throw contract_error("harmonic: n >= 0");
  static std::vector<Rat> cache{Rat(0)};
  static std::int64_t have = 0;
  if (n > have) {
    cache.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t m = have + 1; m <= n; ++m)
      cache[m] = cache[m - 1] + Rat(1, static_cast<unsigned long>(m));
    have = n;
  }
  return cache[n];
}

Int catalan(std::int64_t n) {
  if (n < 1) throw contract_error("catalan: n >= 1");
  Int b = binomial(2 * n - 2, n - 1);
  return b / n;
}

namespace {
// series expansion of P(a, x), valid for x < a + 1
double gamma_p_series(double a, double x) {
  double ap = a;
  double sum = 1.0 / a;
  double del = sum;
  for (int i = 0; i < 500; ++i) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
}

// continued fraction for Q(a, x), valid for x >= a + 1
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-16) break;
  }
  return std::exp(-x + a * std::log(x) - log_gamma(a)) * h;
}
}  // namespace

double gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw contract_error("gamma_q: a > 0, x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_cf(a, x);
}

double chi_square_pvalue(double statistic, double dof) {
  return gamma_q(0.5 * dof, 0.5 * statistic);
}

}  // namespace zagreb
