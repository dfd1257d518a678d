#pragma once

#include <map>

#include "basics.hpp"
#include "joint_pmf.hpp"

namespace zagreb {

// Exhaustive generation of every attachment history of size n, aggregated as
// exact multiplicity weights of (Z^(k), R). Plane histories that differ only
// in which of a node's equivalent free places was used share the same parent
// sequence, so parent sequences are enumerated with weight children(v)+1 per
// step; total weight still equals count_trees.
struct EnumerationResult {
  TreeModel model;
  int k = 2;
  std::int64_t n = 1;
  Int total_weight;
  std::map<std::pair<std::int64_t, std::int32_t>, Int> weights;

  JointPMF to_pmf() const;
  std::map<std::int64_t, Int> zagreb_multiset() const;  // z -> multiplicity
};

EnumerationResult enumerate_all(TreeModel model, int k, std::int64_t n);

}  // namespace zagreb
