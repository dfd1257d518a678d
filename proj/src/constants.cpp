#include "constants.hpp"

#include <cmath>

#include "moment_table.hpp"
#include "specialfun.hpp"

namespace zagreb {

SeriesValue exp_mu_series(const std::vector<long double>& b, std::int64_t J) {
  if (J < 10) throw contract_error("exp_mu_series: J >= 10");
  if (b.size() < static_cast<std::size_t>(J) + 1)
    throw contract_error("exp_mu_series: toll shorter than J");
  long double s = 0.0L, s_half = 0.0L;
  const std::int64_t half = J / 2;
  for (std::int64_t j = 2; j <= J; ++j) {
    s += b[j] / (static_cast<long double>(j) * (j + 1));
    if (j == half) s_half = s;
  }
  SeriesValue out;
  out.value = static_cast<double>(2.0L * s);
  out.error = static_cast<double>(3.0L * std::fabs(2.0L * s - 2.0L * s_half));
  out.J = J;
  return out;
}

SeriesValue mu_k(int k, std::int64_t J) {
  if (k < 2) throw contract_error("mu_k: k >= 2");
  if (J < 10) throw contract_error("mu_k: J >= 10");
  const auto er = nonplane_rmoments_f(J, k - 1);
  std::vector<long double> pref(static_cast<std::size_t>(k), 0.0L);
  std::vector<long double> b(static_cast<std::size_t>(J) + 1, 0.0L);
  for (int l = 0; l < k; ++l) pref[l] = er[1][l];
  for (std::int64_t j = 2; j <= J; ++j) {
    long double bj = 0.0L;
    for (int l = 0; l < k; ++l)
      bj += binomial_i64(k, l) * 2.0L * pref[l] / (j - 1);
    b[j] = bj;
    for (int l = 0; l < k; ++l) pref[l] += er[j][l];
  }
  return exp_mu_series(b, J);
}

LimitConstants limit_constants(int k, std::int64_t J) {
  if (k < 2) throw contract_error("limit_constants: k >= 2");
  if (J < 10) throw contract_error("limit_constants: J >= 10");
  LimitConstants out;
  out.k = k;
  out.mu = mu_k(k, J);

  // Variance toll of the two-sided recurrence for E(Zbar_n^2):
  //   b_n = E(T_{n,I_n}^2) + 4 sum_l C(k,l) E(Zbar_{I_n} R_{I_n}^l)
  // with T_{n,j} = S_j + S'_{n-j} + Delta(n,j), S_j = sum_l C(k,l) R_j^l and
  // Delta(n,j) = mu(j) + mu(n-j) - mu(n). Everything reconstructs from the
  // raw table (E(Zbar_j) = 0 kills the remaining cross terms).
  FloatMomentTable tab(TreeModel::NonPlane, k, J, 2 * k);
  std::vector<long double> mu_n(static_cast<std::size_t>(J) + 1);
  std::vector<long double> es(static_cast<std::size_t>(J) + 1);
  std::vector<long double> es2(static_cast<std::size_t>(J) + 1);
  std::vector<long double> covpref(static_cast<std::size_t>(J) + 1, 0.0L);
  for (std::int64_t j = 1; j <= J; ++j) {
    mu_n[j] = tab.at(j, 1, 0);
    long double s1 = 0.0L, s2 = 0.0L, cov = 0.0L;
    for (int l = 0; l < k; ++l) {
      const long double c = binomial_i64(k, l);
      s1 += c * tab.at(j, 0, l);
      for (int lp = 0; lp < k; ++lp)
        s2 += c * binomial_i64(k, lp) * tab.at(j, 0, l + lp);
      cov += c * (tab.at(j, 1, l) - mu_n[j] * tab.at(j, 0, l));
    }
    es[j] = s1;
    es2[j] = s2;
    covpref[j] = covpref[j - 1] + cov;
  }
  std::vector<long double> b(static_cast<std::size_t>(J) + 1, 0.0L);
  long double min_toll = 0.0L;
  for (std::int64_t n = 2; n <= J; ++n) {
    long double et2 = 0.0L;
    // the summand is symmetric under j <-> n-j
    for (std::int64_t j = 1; 2 * j <= n - 1; ++j) {
      const long double delta = mu_n[j] + mu_n[n - j] - mu_n[n];
      et2 += 2.0L * (es2[j] + es2[n - j] + delta * delta +
                     2.0L * es[j] * es[n - j] +
                     2.0L * delta * (es[j] + es[n - j]));
    }
    if (n % 2 == 0) {
      const std::int64_t j = n / 2;
      const long double delta = 2.0L * mu_n[j] - mu_n[n];
      et2 += 2.0L * es2[j] + delta * delta + 2.0L * es[j] * es[j] +
             4.0L * delta * es[j];
    }
    et2 /= (n - 1);
    b[n] = et2 + 4.0L * covpref[n - 1] / (n - 1);
    min_toll = std::min(min_toll, b[n]);
  }
  out.var = exp_mu_series(b, J);
  out.min_toll = static_cast<double>(min_toll);

  const auto vr = [&](std::int64_t n) {
    const long double m1 = tab.at(n, 1, 0);
    return static_cast<double>((tab.at(n, 2, 0) - m1 * m1) / n);
  };
  out.var_at_J = vr(J);
  out.var_at_J_err = 3.0 * std::fabs(vr(J) - vr(J / 2));
  return out;
}

double LimitConstants::sigma() const { return std::sqrt(var.value); }

double predicted_mean(TreeModel model, int k, std::int64_t n,
                      const LimitConstants* c) {
  if (k < 2 || n < 1) throw contract_error("predicted_mean: k >= 2, n >= 1");
  const double nn = static_cast<double>(n);
  if (model == TreeModel::NonPlane) {
    double mu;
    if (c && c->k == k) {
      mu = c->mu.value;
    } else {
      mu = mu_k(k, 10000).value;
    }
    return mu * nn;
  }
  if (k == 2)
    return 2.0 * nn * std::log(nn) + (4.0 * kLn2 + 2.0 * kEulerGamma - 2.0) * nn;
  const double coeff = 2.0 * std::exp(log_gamma(k + 1.0)) * kSqrtPi /
                       ((k - 2.0) * std::exp(log_gamma((k - 1) / 2.0)));
  return coeff * std::pow(nn, k / 2.0);
}

}  // namespace zagreb
