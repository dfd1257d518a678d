#include "zagreb_index.hpp"

namespace zagreb {

std::vector<std::int64_t> degree_profile(const RecursiveTree& tree) {
  std::vector<std::int64_t> deg(static_cast<std::size_t>(tree.n));
  for (std::int64_t v = 1; v <= tree.n; ++v) deg[v - 1] = tree.degree(v);
  return deg;
}

namespace {
void check_order(int k) {
  if (k < 2) throw contract_error("zagreb order k must be >= 2");
}
}  // namespace

Int zagreb_index(const RecursiveTree& tree, int k) {
  check_order(k);
  Int z = 0;
  for (std::int64_t v = 1; v <= tree.n; ++v) z += ipow(tree.degree(v), k);
  return z;
}

Int zagreb_index_edge_form(const RecursiveTree& tree, int k) {
  check_order(k);
  Int z = 0;
  for (std::int64_t v = 2; v <= tree.n; ++v) {
    const std::int64_t u = tree.parent[static_cast<std::size_t>(v)];
    z += ipow(tree.degree(u), k - 1) + ipow(tree.degree(v), k - 1);
  }
  return z;
}

}  // namespace zagreb
