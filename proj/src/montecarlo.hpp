#pragma once

#include <array>

#include "basics.hpp"
#include "constants.hpp"
#include "gtable.hpp"
#include "report.hpp"

namespace zagreb {

struct SimConfig {
  TreeModel model = TreeModel::NonPlane;
  int k = 2;
  std::vector<std::int64_t> sizes;  // ascending
  std::int64_t replicates = 1;
  std::uint64_t seed = 0;
  int workers = 0;  // <= 0: hardware concurrency
  int z_order = 4;  // raw moments of Z/n^{k/2}, 1..z_order (max 4)
  int r_order = 4;  // raw moments of R/sqrt(n)
  double hist_lo = 0.0, hist_hi = 0.0;
  int hist_bins = 0;  // histogram of Z/n^{k/2}; 0 disables
};

// One-pass power sums about a fixed pilot shift (the value of replicate 0).
// Merging is plain addition, so any fixed merge order gives byte-identical
// results no matter how blocks were scheduled across workers.
struct ShiftedSums {
  long double shift = 0.0L;
  std::int64_t count = 0;
  std::array<long double, 9> s{};  // s[i] = sum (x - shift)^i, s[0] unused

  void add(long double x) {
    const long double d = x - shift;
    long double p = d;
    ++count;
    for (int i = 1; i <= 8; ++i) {
      s[i] += p;
      p *= d;
    }
  }
  void merge(const ShiftedSums& o) {
    count += o.count;
    for (int i = 1; i <= 8; ++i) s[i] += o.s[i];
  }
  long double mean() const { return shift + s[1] / count; }
  // central moment M_i about the sample mean
  long double central(int i) const;
  // raw moment E((x/scale)^i)
  long double raw(int i, long double scale) const;
};

struct SizeSummary {
  std::int64_t n = 0;
  std::int64_t replicates = 0;
  double z_mean = 0, z_var = 0;
  double z_skew = 0, z_kurt = 0;  // self-normalized m3*, m4*
  double r_mean = 0, r_var = 0;
  std::vector<double> zn_moment, zn_se;  // orders 1..z_order of Z/n^{k/2}
  std::vector<double> rn_moment, rn_se;  // orders 1..r_order of R/sqrt(n)
  std::vector<std::int64_t> hist;
  double hist_lo = 0, hist_hi = 0;
  ShiftedSums zacc, racc;
};

struct SimSummary {
  SimConfig config;
  std::vector<SizeSummary> per_size;
};

SimSummary simulate(const SimConfig& config);

// Theorem-level checks against a simulation summary.
CheckReport clt_check(const SimSummary& s, const LimitConstants& c);
CheckReport plane_limit_check(const SimSummary& s, const GTable& g);

struct SplitCheck {
  double chi2 = 0;
  double pvalue = 1;
  std::int64_t cells = 0;
  CheckReport report;
};
SplitCheck empirical_split_check(TreeModel model, std::int64_t n,
                                 std::int64_t replicates, std::uint64_t seed);

}  // namespace zagreb
