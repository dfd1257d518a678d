#pragma once

#include "trees.hpp"

namespace zagreb {

// degrees[v-1] = total degree of node v (root degree = its child count)
std::vector<std::int64_t> degree_profile(const RecursiveTree& tree);

// Z^(k) = sum_v D_v^k, arbitrary precision; k >= 2
Int zagreb_index(const RecursiveTree& tree, int k);

// Z^(k) = sum_{uv in E} (D_u^{k-1} + D_v^{k-1}); equals the vertex form on
// every tree
Int zagreb_index_edge_form(const RecursiveTree& tree, int k);

inline std::int64_t root_degree(const RecursiveTree& tree) {
  return tree.root_degree();
}

// change of Z^(k) when a new leaf is attached to a node of current degree d
inline Int attach_delta(std::int64_t d, int k) {
  return ipow(d + 1, k) - ipow(d, k) + 1;
}

}  // namespace zagreb
