#include "transfer.hpp"

#include <cmath>

#include "recurrence.hpp"
#include "specialfun.hpp"

namespace zagreb {

TransferResult transfer_check(TransferLemma lemma, double c, double alpha,
                              std::int64_t N) {
  if (N < 10) throw contract_error("transfer_check: N >= 10");
  switch (lemma) {
    case TransferLemma::NPOneSided:
      if (alpha < 0) throw contract_error("NP one-sided requires alpha >= 0");
      break;
    case TransferLemma::NPTwoSidedI:
      if (alpha < 0 || alpha >= 1)
        throw contract_error("NP two-sided (i) requires 0 <= alpha < 1");
      break;
    case TransferLemma::NPTwoSidedII:
      if (alpha <= 1) throw contract_error("NP two-sided (ii) requires alpha > 1");
      break;
    case TransferLemma::POneSided:
      if (alpha <= -0.5)
        throw contract_error("plane one-sided requires alpha > -1/2");
      break;
    case TransferLemma::PTwoSidedI:
      if (std::fabs(alpha - 0.5) > 1e-12)
        throw contract_error("plane two-sided (i) is the alpha = 1/2 case");
      break;
    case TransferLemma::PTwoSidedII:
      if (alpha <= 0.5)
        throw contract_error("plane two-sided (ii) requires alpha > 1/2");
      break;
  }

  std::vector<double> b(static_cast<std::size_t>(N) + 1, 0.0);
  for (std::int64_t n = 2; n <= N; ++n)
    b[n] = c * std::pow(static_cast<double>(n), alpha);

  TransferResult out;
  out.lemma = lemma;
  out.c = c;
  out.alpha = alpha;
  out.N = N;

  const double nn = static_cast<double>(N);
  std::vector<double> a;
  switch (lemma) {
    case TransferLemma::NPOneSided:
      a = solve_one_sided_f(TreeModel::NonPlane, b, N);
      out.predicted = 0.0;
      out.ratio = a[N] / (c * std::pow(nn, alpha));
      break;
    case TransferLemma::NPTwoSidedI: {
      a = solve_two_sided_f(TreeModel::NonPlane, b, N);
      // mu from (exp-mu) on the same toll
      double mu = 0.0;
      for (std::int64_t j = 2; j <= N; ++j)
        mu += 2.0 * b[j] / (static_cast<double>(j) * (j + 1));
      out.predicted = mu * nn;
      break;
    }
    case TransferLemma::NPTwoSidedII:
      a = solve_two_sided_f(TreeModel::NonPlane, b, N);
      out.predicted = c * (alpha + 1.0) / (alpha - 1.0) * std::pow(nn, alpha);
      break;
    case TransferLemma::POneSided:
      a = solve_one_sided_f(TreeModel::Plane, b, N);
      out.predicted = c *
                      std::exp(log_gamma(alpha + 0.5) - log_gamma(alpha + 1.0)) *
                      std::pow(nn, alpha + 0.5);
      break;
    case TransferLemma::PTwoSidedI:
      a = solve_two_sided_f(TreeModel::Plane, b, N);
      out.predicted = c * nn * std::log(nn) / kSqrtPi;
      break;
    case TransferLemma::PTwoSidedII:
      a = solve_two_sided_f(TreeModel::Plane, b, N);
      out.predicted = c *
                      std::exp(log_gamma(alpha - 0.5) - log_gamma(alpha)) *
                      std::pow(nn, alpha + 0.5);
      break;
  }
  out.a_n = a[N];
  if (out.predicted != 0.0) {
    out.ratio = out.a_n / out.predicted;
    out.rel_gap = std::fabs(out.ratio - 1.0);
  }
  return out;
}

}  // namespace zagreb
