#include "recurrence.hpp"

#include "specialfun.hpp"
#include "split_law.hpp"

namespace zagreb {

namespace {
void check_args(std::size_t bsize, std::int64_t N) {
  if (N < 1) throw contract_error("recurrence: N >= 1");
  if (bsize < static_cast<std::size_t>(N) + 1)
    throw contract_error("recurrence: toll sequence shorter than N");
}
}  // namespace

std::vector<Rat> solve_one_sided(TreeModel model, const std::vector<Rat>& b,
                                 std::int64_t N) {
  check_args(b.size(), N);
  std::vector<Rat> a(static_cast<std::size_t>(N) + 1, Rat(0));
  if (model == TreeModel::NonPlane) {
    Rat pref = 0;  // sum_{m<n} a_m
    for (std::int64_t n = 2; n <= N; ++n) {
      a[n] = pref / Rat(n - 1) + b[n];
      pref += a[n];
    }
    return a;
  }
  std::vector<Int> C(static_cast<std::size_t>(N) + 1);
  for (std::int64_t m = 1; m <= N; ++m) C[m] = catalan(m);
  std::vector<Rat> u(static_cast<std::size_t>(N) + 1, Rat(0));  // m C_m a_m
  std::vector<Rat> buf;
  for (std::int64_t n = 2; n <= N; ++n) {
    buf.clear();
    for (std::int64_t j = 1; j < n; ++j) buf.push_back(C[j] * u[n - j]);
    Rat s = pairwise_sum(buf);
    a[n] = 2 * s / Rat(n * C[n]) + b[n];
    u[n] = Rat(n * C[n]) * a[n];
  }
  return a;
}

std::vector<Rat> solve_two_sided(TreeModel model, const std::vector<Rat>& b,
                                 std::int64_t N) {
  check_args(b.size(), N);
  std::vector<Rat> a(static_cast<std::size_t>(N) + 1, Rat(0));
  if (model == TreeModel::NonPlane) {
    Rat pref = 0;
    for (std::int64_t n = 2; n <= N; ++n) {
      a[n] = Rat(2) * pref / Rat(n - 1) + b[n];
      pref += a[n];
    }
    return a;
  }
  std::vector<Int> C(static_cast<std::size_t>(N) + 1);
  for (std::int64_t m = 1; m <= N; ++m) C[m] = catalan(m);
  std::vector<Rat> v(static_cast<std::size_t>(N) + 1, Rat(0));  // C_m a_m
  std::vector<Rat> buf;
  for (std::int64_t n = 2; n <= N; ++n) {
    buf.clear();
    for (std::int64_t j = 1; j < n; ++j) buf.push_back(C[j] * v[n - j]);
    Rat s = pairwise_sum(buf);
    a[n] = 2 * s / Rat(C[n]) + b[n];
    v[n] = Rat(C[n]) * a[n];
  }
  return a;
}

std::vector<double> solve_one_sided_f(TreeModel model,
                                      const std::vector<double>& b,
                                      std::int64_t N) {
  check_args(b.size(), N);
  std::vector<double> a(static_cast<std::size_t>(N) + 1, 0.0);
  if (model == TreeModel::NonPlane) {
    double pref = 0.0;
    for (std::int64_t n = 2; n <= N; ++n) {
      a[n] = pref / static_cast<double>(n - 1) + b[n];
      pref += a[n];
    }
    return a;
  }
  const auto wl = w_cache(N);
  std::vector<double> w(wl.begin(), wl.end());
  std::vector<double> u(static_cast<std::size_t>(N) + 1, 0.0);  // n w_n a_n
  for (std::int64_t n = 2; n <= N; ++n) {
    double s = 0.0;
    const double* wj = w.data() + 1;
    const double* ur = u.data() + 1;
    for (std::int64_t j = 1; j < n; ++j) s += wj[j - 1] * ur[n - j - 1];
    a[n] = 2.0 * s / (static_cast<double>(n) * w[n]) + b[n];
    u[n] = static_cast<double>(n) * w[n] * a[n];
  }
  return a;
}

std::vector<double> solve_two_sided_f(TreeModel model,
                                      const std::vector<double>& b,
                                      std::int64_t N) {
  check_args(b.size(), N);
  std::vector<double> a(static_cast<std::size_t>(N) + 1, 0.0);
  if (model == TreeModel::NonPlane) {
    double pref = 0.0;
    for (std::int64_t n = 2; n <= N; ++n) {
      a[n] = 2.0 * pref / static_cast<double>(n - 1) + b[n];
      pref += a[n];
    }
    return a;
  }
  const auto wl = w_cache(N);
  std::vector<double> w(wl.begin(), wl.end());
  std::vector<double> v(static_cast<std::size_t>(N) + 1, 0.0);  // w_n a_n
  for (std::int64_t n = 2; n <= N; ++n) {
    double s = 0.0;
    const double* wj = w.data() + 1;
    const double* vr = v.data() + 1;
    for (std::int64_t j = 1; j < n; ++j) s += wj[j - 1] * vr[n - j - 1];
    a[n] = 2.0 * s / w[n] + b[n];
    v[n] = w[n] * a[n];
  }
  return a;
}

std::vector<Rat> one_sided_closed_uniform(const std::vector<Rat>& b,
                                          std::int64_t N) {
  check_args(b.size(), N);
  std::vector<Rat> a(static_cast<std::size_t>(N) + 1, Rat(0));
  Rat tail = 0;  // sum_{j=2}^{n-1} b_j / j
  for (std::int64_t n = 2; n <= N; ++n) {
    a[n] = b[n] + tail;
    tail += b[n] / Rat(n);
  }
  return a;
}

}  // namespace zagreb
