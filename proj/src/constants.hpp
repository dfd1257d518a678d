#pragma once

#include "basics.hpp"
#include "report.hpp"

namespace zagreb {

struct SeriesValue {
  double value = 0;
  double error = 0;  // Richardson-style: 3 |S(J) - S(J/2)|
  std::int64_t J = 0;
};

// mu = 2 sum_{j=2}^{J} b_j / (j (j+1)) for a toll sequence b[2..J]
SeriesValue exp_mu_series(const std::vector<long double>& b, std::int64_t J);

struct LimitConstants {
  int k = 2;
  SeriesValue mu;        // E(Z_n)/n limit (non-plane)
  SeriesValue var;       // Var(Z_n)/n limit (non-plane)
  double sigma() const;  // sqrt(var)
  double min_toll = 0;   // smallest variance toll seen (must be >= 0)
  double var_at_J = 0;   // Var(Z_J)/J from the same table
  double var_at_J_err = 0;
};

// Series evaluation of mu_k ((exp-mu) applied to the mean toll) and of the
// variance constant (same series applied to the second-moment toll
// E(T^2) + 4 sum_l C(k,l) Cov(Z, R^l) averaged over the split).
// Root-degree and mixed moments come from the float moment tables; J >= 10.
LimitConstants limit_constants(int k, std::int64_t J);

SeriesValue mu_k(int k, std::int64_t J);

// NonPlane: mu_k n. Plane k = 2: 2 n log n + (4 log 2 + 2 gamma - 2) n.
// Plane k >= 3: 2 k! sqrt(pi) / ((k-2) Gamma((k-1)/2)) n^{k/2}.
double predicted_mean(TreeModel model, int k, std::int64_t n,
                      const LimitConstants* c = nullptr);

}  // namespace zagreb
