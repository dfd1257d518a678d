#pragma once

#include "basics.hpp"
#include "report.hpp"

namespace zagreb {

// Limit moment array for plane trees: E(Z_n^r R_n^s) ~ g_{r,s} n^{(kr+s)/2},
// kept in natural-log space (g grows like sqrt((kr+s)!) and overflows doubles
// near kr+s ~ 300). Row r is built to a padded extent internally because
// g_{r,s} pulls on g_{r-1,k+s-1}.
class GTable {
 public:
  GTable(int k, int r_max, int s_max);

  int k() const { return k_; }
  int r_max() const { return r_max_; }
  int s_max() const { return s_max_; }
  double log_g(int r, int s) const;
  bool g_overflows(int r, int s) const;  // exp(log_g) > double max
  double g(int r, int s) const;

 private:
  int k_, r_max_, s_max_;
  std::vector<std::vector<double>> logg_;
};

GTable g_table(int k, int r_max, int s_max);

// Two-route identity checks: g_{1,0} recurrence vs 2 k! sqrt(pi) /
// ((k-2) Gamma((k-1)/2)), and g_{0,s+2}/g_{0,s} vs the Rayleigh(sqrt 2)
// moment ratio 2(s+2).
CheckReport g_consistency_check(const GTable& t, double rel_tol = 1e-10);

struct CarlemanReport {
  int k = 0;
  int R = 0;
  std::vector<double> terms;         // g_{r,0}^{-1/(2r)}, r = 1..R
  std::vector<double> partial_sums;
  double fitted_exponent = 0;        // local decay power over [R/2, R]
  double band_ratio_inv_r = 0;       // spread of term*r over [R/2, R]
  double band_ratio_pow = 0;         // spread of term*r^{k/4}
  std::string verdict;               // "divergent-like" / "convergent-like"
  CheckReport report;
};

CarlemanReport carleman_diagnostic(const GTable& t, int R);

struct AppendixBound {
  bool feasible = false;
  double A = 0;
  int binding_r = 0, binding_s = 0;  // tightest entry at the reported A
  double max_violation = 0;          // over the grid top when infeasible
  CheckReport report;
};

// least A in {1+step, 1+2 step, ...} <= A_max with
// log g_{r,s} <= (kr+s) log A + 0.5 log((kr+s)!) over the whole table
AppendixBound appendix_bound_check(const GTable& t, double A_max = 16.0,
                                   double step = 0.05);

// side inequalities behind the factorial bound (pure grids, table-free)
CheckReport gamma_ratio_grid(int a_max = 60, int b_max = 60);
CheckReport binomial_domination_grid(int r_max = 20, int s_max = 10,
                                     int k_min = 2, int k_max = 5);

}  // namespace zagreb
