#include "enumeration.hpp"

#include "trees.hpp"

namespace zagreb {

JointPMF EnumerationResult::to_pmf() const {
  JointPMF pmf;
  pmf.model = model;
  pmf.k = k;
  pmf.n = n;
  for (const auto& [key, w] : weights) {
    Rat q(w, total_weight);
    q.canonicalize();
    pmf.p[key] = q;
  }
  return pmf;
}

std::map<std::int64_t, Int> EnumerationResult::zagreb_multiset() const {
  std::map<std::int64_t, Int> out;
  for (const auto& [key, w] : weights) out[key.first] += w;
  return out;
}

namespace {

struct Enumerator {
  TreeModel model;
  int k;
  std::int64_t n;
  std::vector<std::int32_t> cc;        // child counts
  std::vector<std::int64_t> fdelta;    // (d+1)^k - d^k for attach updates
  EnumerationResult* out;

  void run() {
    cc.assign(static_cast<std::size_t>(n) + 1, 0);
    fdelta.resize(static_cast<std::size_t>(n) + 1);
    for (std::int64_t d = 0; d <= n; ++d) {
      std::int64_t p1 = 1, p0 = 1;
      for (int e = 0; e < k; ++e) {
        p1 *= d + 1;
        p0 *= d;
      }
      fdelta[d] = p1 - p0;
    }
    dfs(2, 0, 1);
  }

  void dfs(std::int64_t i, std::int64_t z, std::uint64_t weight) {
    if (i > n) {
      out->weights[{z, cc[1]}] += Int(static_cast<unsigned long>(weight));
      return;
    }
    for (std::int64_t v = 1; v < i; ++v) {
      const std::int64_t d = cc[v] + (v == 1 ? 0 : 1);
      const std::uint64_t mult =
          model == TreeModel::Plane ? static_cast<std::uint64_t>(cc[v]) + 1 : 1;
      ++cc[v];
      dfs(i + 1, z + fdelta[d] + 1, weight * mult);
      --cc[v];
    }
  }
};

}  // namespace

EnumerationResult enumerate_all(TreeModel model, int k, std::int64_t n) {
  if (k < 2) throw contract_error("enumerate_all: k >= 2");
  if (n < 1) throw contract_error("enumerate_all: n >= 1");
  if (n > 9)
    throw resource_error("enumerate_all: n <= 9 (history count grows as " +
                         std::string(model == TreeModel::Plane ? "(2n-3)!!"
                                                               : "(n-1)!") +
                         ")");
  EnumerationResult res;
  res.model = model;
  res.k = k;
  res.n = n;
  if (n == 1) {
    res.weights[{0, 0}] = 1;
    res.total_weight = 1;
    return res;
  }
  Enumerator e{model, k, n, {}, {}, &res};
  e.run();
  res.total_weight = 0;
  for (const auto& [key, w] : res.weights) res.total_weight += w;
  return res;
}

}  // namespace zagreb
