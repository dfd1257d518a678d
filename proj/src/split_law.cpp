#include "split_law.hpp"

#include "specialfun.hpp"

namespace zagreb {

Rat SplitLaw::sum() const {
  Rat s = 0;
  for (const Rat& w : weights) s += w;
  return s;
}

SplitLaw split_law(TreeModel model, std::int64_t n) {
  if (n < 2) throw contract_error("split_law: n >= 2");
  SplitLaw law;
  law.model = model;
  law.n = n;
  law.weights.reserve(static_cast<std::size_t>(n - 1));
  if (model == TreeModel::NonPlane) {
    const Rat u(1, static_cast<unsigned long>(n - 1));
    for (std::int64_t j = 1; j < n; ++j) law.weights.push_back(u);
    return law;
  }
  std::vector<Int> C(static_cast<std::size_t>(n) + 1);
  for (std::int64_t m = 1; m <= n; ++m) C[m] = catalan(m);
  const Int den = n * C[n];
  for (std::int64_t j = 1; j < n; ++j) {
    Rat w(2 * (n - j) * C[j] * C[n - j], den);
    w.canonicalize();
    law.weights.push_back(w);
  }
  return law;
}

std::vector<long double> w_cache(std::int64_t N) {
  std::vector<long double> w(static_cast<std::size_t>(N) + 1, 0.0L);
  if (N >= 1) w[1] = 0.25L;
  for (std::int64_t m = 2; m <= N; ++m)
    w[m] = w[m - 1] * static_cast<long double>(2 * m - 3) /
           static_cast<long double>(2 * m);
  return w;
}

}  // namespace zagreb
