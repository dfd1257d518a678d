#pragma once

#include <map>

#include "basics.hpp"

namespace zagreb {

// Exact law of (Z_n^(k), R_n) as a sparse rational PMF. Supports are small
// integers (z is capped by the star-tree bound (n-1)^k + (n-1)), so keys are
// machine ints while probabilities stay exact.
struct JointPMF {
  TreeModel model;
  int k = 2;
  std::int64_t n = 1;
  std::map<std::pair<std::int64_t, std::int32_t>, Rat> p;

  Rat total() const;
  Rat moment(int i, int l) const;  // E(Z^i R^l)
};

struct PmfLimits {
  std::uint64_t work = 200000000;   // convolution pair budget
  std::size_t entries = 4000000;    // max live support size
};

// Built by convolving subtree laws over the split law: given I_n = j and
// independent draws (z1,d1), (z2,d2) of sizes j and n-j, the pair becomes
// (z1 + z2 + f(d1) + f(d2), d2 + 1) with f(d) = (d+1)^k - d^k.
JointPMF joint_pmf(TreeModel model, int k, std::int64_t n,
                   const PmfLimits& limits = {});

}  // namespace zagreb
