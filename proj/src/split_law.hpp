#pragma once

#include "basics.hpp"

namespace zagreb {

// Law of the left-most root-subtree size I_n: pi_{n,j} = P(I_n = j),
// 1 <= j <= n-1. NonPlane: uniform 1/(n-1). Plane:
// 2 (n-j) C_j C_{n-j} / (n C_n) with shifted Catalan numbers.
struct SplitLaw {
  TreeModel model;
  std::int64_t n;
  std::vector<Rat> weights;  // weights[j-1] = pi_{n,j}

  const Rat& pi(std::int64_t j) const { return weights[j - 1]; }
  Rat sum() const;
};

SplitLaw split_law(TreeModel model, std::int64_t n);

// w_m = C_m 4^{-m}, bounded in (0, 1/4]; pi_{n,j} = 2 (n-j) w_j w_{n-j} /
// (n w_n) without overflow. w_cache(N)[m] valid for 1 <= m <= N.
std::vector<long double> w_cache(std::int64_t N);

}  // namespace zagreb
