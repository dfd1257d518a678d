#include "joint_pmf.hpp"

#include <cmath>
#include <string>

#include "split_law.hpp"

namespace zagreb {

Rat JointPMF::total() const {
  Rat t = 0;
  for (const auto& [key, prob] : p) t += prob;
  return t;
}

Rat JointPMF::moment(int i, int l) const {
  if (i < 0 || l < 0) throw contract_error("joint_pmf moment: orders >= 0");
  Rat acc = 0;
  for (const auto& [key, prob] : p) {
    Int zi = ipow(key.first, i);
    Int dl = ipow(key.second, l);
    acc += Rat(zi * dl) * prob;
  }
  return acc;
}

JointPMF joint_pmf(TreeModel model, int k, std::int64_t n,
                   const PmfLimits& limits) {
  if (k < 2) throw contract_error("joint_pmf: k >= 2");
  if (n < 1) throw contract_error("joint_pmf: n >= 1");
  if (k * std::log2(static_cast<double>(n) + 1) > 61)
    throw resource_error("joint_pmf: zagreb support exceeds 63-bit keys at n=" +
                         std::to_string(n));
  std::vector<std::int64_t> fdelta(static_cast<std::size_t>(n), 0);
  for (std::int64_t d = 0; d < n; ++d) {
    std::int64_t p1 = 1, p0 = 1;
    for (int e = 0; e < k; ++e) {
      p1 *= d + 1;
      p0 *= d;
    }
    fdelta[d] = p1 - p0;
  }

  std::vector<JointPMF> law(static_cast<std::size_t>(n) + 1);
  law[1].model = model;
  law[1].k = k;
  law[1].n = 1;
  law[1].p[{0, 0}] = Rat(1);
  std::uint64_t work = 0;
  for (std::int64_t m = 2; m <= n; ++m) {
    auto& out = law[m];
    out.model = model;
    out.k = k;
    out.n = m;
    const SplitLaw pi = split_law(model, m);
    for (std::int64_t j = 1; j < m; ++j) {
      const auto& left = law[j].p;
      const auto& right = law[m - j].p;
      work += static_cast<std::uint64_t>(left.size()) * right.size();
      if (work > limits.work)
        throw resource_error("joint_pmf: support too large at n=" +
                             std::to_string(m) + " (work limit)");
      const Rat& w = pi.pi(j);
      for (const auto& [kl, pl] : left) {
        const Rat wl = w * pl;
        const std::int64_t zbase = kl.first + fdelta[kl.second];
        for (const auto& [kr, pr] : right) {
          const std::int64_t z = zbase + kr.first + fdelta[kr.second];
          out.p[{z, kr.second + 1}] += wl * pr;
        }
      }
      if (out.p.size() > limits.entries)
        throw resource_error("joint_pmf: support too large at n=" +
                             std::to_string(m) + " (entry limit)");
    }
  }
  return std::move(law[static_cast<std::size_t>(n)]);
}

}  // namespace zagreb
