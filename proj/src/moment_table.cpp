#include "moment_table.hpp"

#include <array>

#include "specialfun.hpp"
#include "split_law.hpp"

namespace zagreb {

namespace {

constexpr std::int64_t kExactSizeLimit = 2000;
constexpr std::int64_t kFloatSizeLimit = 10000000;

// coefficients of ((R+1)^k - R^k)^p as polynomials in R, p = 0..pmax
std::vector<std::vector<std::int64_t>> f_power_coeffs(int k, int pmax) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(k));
  for (int l = 0; l < k; ++l) f[l] = binomial_i64(k, l);
  std::vector<std::vector<std::int64_t>> fc;
  fc.push_back({1});
  for (int p = 1; p <= pmax; ++p) {
    const auto& prev = fc.back();
    std::vector<std::int64_t> next(prev.size() + f.size() - 1, 0);
    for (std::size_t a = 0; a < prev.size(); ++a)
      for (std::size_t bpos = 0; bpos < f.size(); ++bpos)
        next[a + bpos] += prev[a] * f[bpos];
    fc.push_back(std::move(next));
  }
  return fc;
}

template <typename T>
struct PiRow;

// exact split weights pi_{n,j}
template <>
struct PiRow<Rat> {
  std::vector<Int> C;
  explicit PiRow(std::int64_t N) : C(static_cast<std::size_t>(N) + 1) {
    for (std::int64_t m = 1; m <= N; ++m) C[m] = catalan(m);
  }
  void fill(TreeModel model, std::int64_t n, std::vector<Rat>& row) const {
    row.resize(static_cast<std::size_t>(n - 1));
    if (model == TreeModel::NonPlane) {
      const Rat u(1, static_cast<unsigned long>(n - 1));
      for (auto& x : row) x = u;
      return;
    }
    const Int den = n * C[n];
    for (std::int64_t j = 1; j < n; ++j) {
      Rat w(2 * (n - j) * C[j] * C[n - j], den);
      w.canonicalize();
      row[j - 1] = w;
    }
  }
};

// float split weights via the scaled Catalan sequence
template <>
struct PiRow<long double> {
  std::vector<long double> w;
  explicit PiRow(std::int64_t N) : w(w_cache(N)) {}
  void fill(TreeModel model, std::int64_t n,
            std::vector<long double>& row) const {
    row.resize(static_cast<std::size_t>(n - 1));
    if (model == TreeModel::NonPlane) {
      const long double u = 1.0L / static_cast<long double>(n - 1);
      for (auto& x : row) x = u;
      return;
    }
    const long double den = static_cast<long double>(n) * w[n];
    for (std::int64_t j = 1; j < n; ++j)
      row[j - 1] = 2.0L * static_cast<long double>(n - j) * w[j] * w[n - j] / den;
  }
};

}  // namespace

template <typename T>
MomentTableT<T>::MomentTableT(TreeModel model, int k, std::int64_t N, int W)
    : model_(model), k_(k), N_(N), W_(W) {
  if (k < 2) throw contract_error("moment_table: k >= 2");
  if (N < 1) throw contract_error("moment_table: N >= 1");
  if (W < 0) throw contract_error("moment_table: W >= 0");
  const bool exact = std::is_same_v<T, Rat>;
  if (exact && N > kExactSizeLimit)
    throw resource_error("moment_table: exact kind limited to N <= 2000; use the float kind");
  if (N > kFloatSizeLimit) throw resource_error("moment_table: N too large");
  rmax_ = W / k;
  idx_.assign(static_cast<std::size_t>(rmax_ + 1) * (W + 1), SIZE_MAX);
  for (int i = 0; i <= rmax_; ++i)
    for (int l = 0; l + std::int64_t(k) * i <= W; ++l) {
      idx_[static_cast<std::size_t>(i) * (W + 1) + l] = entries_.size();
      entries_.emplace_back(i, l);
    }
  fcoef_ = f_power_coeffs(k, rmax_);
  build();
}

template <typename T>
const T& MomentTableT<T>::at(std::int64_t n, int i, int l) const {
  if (n < 1 || n > N_) throw contract_error("moment_table: n out of range");
  if (!has(i, l)) throw contract_error("moment_table: (i,l) above weight cap");
  return m_[static_cast<std::size_t>(n)][eidx(i, l)];
}

template <typename T>
T MomentTableT<T>::central(std::int64_t n, int r) const {
  if (r < 0) throw contract_error("central: r >= 0");
  if (std::int64_t(k_) * r > W_)
    throw contract_error("central: weight cap below k*r");
  const T mu = at(n, 1, 0);
  T acc(0);
  T neg_mu_pow(1);  // (-mu)^{r-i}, built from the top
  // sum_i binom(r,i) E(Z^i) (-mu)^{r-i}
  std::vector<T> terms;
  for (int i = r; i >= 0; --i) {
    terms.push_back(T(binomial_i64(r, i)) * at(n, i, 0) * neg_mu_pow);
    neg_mu_pow = neg_mu_pow * (-mu);
  }
  for (const T& t : terms) acc = acc + t;
  return acc;
}

template <typename T>
void MomentTableT<T>::build() {
  const std::size_t ne = entries_.size();
  m_.assign(static_cast<std::size_t>(N_) + 1, {});
  P_.assign(static_cast<std::size_t>(N_) + 1, {});
  Q_.assign(static_cast<std::size_t>(N_) + 1, {});

  auto build_pq = [&](std::int64_t j) {
    auto& Pj = P_[j];
    auto& Qj = Q_[j];
    Pj.assign(static_cast<std::size_t>(rmax_) + 1, T(0));
    Qj.assign(ne, T(0));
    const auto& mj = m_[j];
    for (int t = 0; t <= rmax_; ++t) {
      T tot(0);
      for (int u = 0; u <= t; ++u) {
        const std::int64_t cu = binomial_i64(t, u);
        const auto& fc = fcoef_[t - u];
        for (std::size_t d = 0; d < fc.size(); ++d)
          if (fc[d] != 0)
            tot += T(cu * fc[d]) * mj[eidx(u, static_cast<int>(d))];
      }
      Pj[t] = tot;
    }
    for (std::size_t e = 0; e < ne; ++e) {
      const auto [v, s] = entries_[e];
      T tot(0);
      for (int u = 0; u <= v; ++u) {
        const std::int64_t cu = binomial_i64(v, u);
        const auto& fc = fcoef_[v - u];
        for (std::size_t d = 0; d < fc.size(); ++d) {
          if (fc[d] == 0) continue;
          for (int ee = 0; ee <= s; ++ee)
            tot += T(cu * fc[d] * binomial_i64(s, ee)) *
                   mj[eidx(u, static_cast<int>(d) + ee)];
        }
      }
      Qj[e] = tot;
    }
  };

  // n = 1: Z_1 = 0, R_1 = 0
  m_[1].assign(ne, T(0));
  m_[1][eidx(0, 0)] = T(1);
  build_pq(1);

  // per-entry expansion stencils: m_n(r,s) = sum_j pi_j sum_t C(r,t) P_j[t]
  // Q_{n-j}[(r-t, s)]; the t = 0 term is just Q (P_j[0] = 1)
  struct Stencil {
    std::vector<T> coeff;            // C(r,t), t = 1..r
    std::vector<std::size_t> qcol;   // eidx(r-t, s), t = 0..r
  };
  std::vector<Stencil> stencils(ne);
  for (std::size_t e = 0; e < ne; ++e) {
    const auto [r, s] = entries_[e];
    for (int t = 0; t <= r; ++t) stencils[e].qcol.push_back(eidx(r - t, s));
    for (int t = 1; t <= r; ++t) stencils[e].coeff.push_back(T(binomial_i64(r, t)));
  }

  const bool uniform = model_ == TreeModel::NonPlane;
  PiRow<T> pirow(N_);
  std::vector<T> row, buf;
  buf.reserve(static_cast<std::size_t>(N_));
  for (std::int64_t n = 2; n <= N_; ++n) {
    if (!uniform) pirow.fill(model_, n, row);
    auto& mn = m_[n];
    mn.assign(ne, T(0));
    for (std::size_t e = 0; e < ne; ++e) {
      const auto& st = stencils[e];
      const int r = entries_[e].first;
      buf.resize(static_cast<std::size_t>(n - 1));
      for (std::int64_t j = 1; j < n; ++j) {
        const auto& Pj = P_[j];
        const auto& Qr = Q_[n - j];
        T inner = Qr[st.qcol[0]];
        for (int t = 1; t <= r; ++t)
          inner += st.coeff[t - 1] * Pj[t] * Qr[st.qcol[t]];
        buf[j - 1] = uniform ? inner : row[j - 1] * inner;
      }
      T tot = pairwise_sum(buf);
      mn[e] = uniform ? T(tot / T(n - 1)) : tot;
    }
    build_pq(n);
  }
}

template class MomentTableT<Rat>;
template class MomentTableT<long double>;

MomentTable moment_table(TreeModel model, int k, std::int64_t N, int W,
                         bool exact) {
  if (W < k) throw contract_error("moment_table: weight cap W must be >= k");
  MomentTable t;
  t.exact = exact;
  if (exact)
    t.ex = std::make_shared<ExactMomentTable>(model, k, N, W);
  else
    t.fl = std::make_shared<FloatMomentTable>(model, k, N, W);
  return t;
}

std::vector<std::vector<long double>> nonplane_rmoments_f(std::int64_t N,
                                                          int smax) {
  if (N < 1 || smax < 0) throw contract_error("nonplane_rmoments_f: bad args");
  std::vector<std::vector<long double>> er(
      static_cast<std::size_t>(N) + 1,
      std::vector<long double>(static_cast<std::size_t>(smax) + 1, 0.0L));
  for (std::int64_t n = 1; n <= N; ++n) er[n][0] = 1.0L;
  // pref[s] = sum_{m<n} E((R_m+1)^s)
  std::vector<long double> pref(static_cast<std::size_t>(smax) + 1, 0.0L);
  auto bump = [&](std::int64_t n) {
    for (int s = 0; s <= smax; ++s) {
      long double t = 0.0L;
      for (int i = 0; i <= s; ++i) t += binomial_i64(s, i) * er[n][i];
      pref[s] += t;
    }
  };
  bump(1);
  for (std::int64_t n = 2; n <= N; ++n) {
    for (int s = 1; s <= smax; ++s)
      er[n][s] = pref[s] / static_cast<long double>(n - 1);
    bump(n);
  }
  return er;
}

std::vector<Rat> mean_toll(TreeModel model, int k, std::int64_t N) {
  if (k < 2 || N < 1) throw contract_error("mean_toll: k >= 2, N >= 1");
  // exact E(R_n^l), l <= k-1, via the table restricted to i = 0
  ExactMomentTable rtab(model, k, N, k - 1);
  std::vector<Rat> b(static_cast<std::size_t>(N) + 1, Rat(0));
  if (model == TreeModel::NonPlane) {
    std::vector<Rat> pref(static_cast<std::size_t>(k), Rat(0));  // sum_{j<n} E(R_j^l)
    for (int l = 0; l < k; ++l) pref[l] = rtab.at(1, 0, l);
    for (std::int64_t n = 2; n <= N; ++n) {
      Rat s(0);
      for (int l = 0; l < k; ++l)
        s += Rat(binomial_i64(k, l)) * Rat(2) * pref[l] / Rat(n - 1);
      b[n] = s;
      for (int l = 0; l < k; ++l) pref[l] += rtab.at(n, 0, l);
    }
    return b;
  }
  std::vector<Int> C(static_cast<std::size_t>(N) + 1);
  for (std::int64_t m = 1; m <= N; ++m) C[m] = catalan(m);
  for (std::int64_t n = 2; n <= N; ++n) {
    const Int den = n * C[n];
    Rat s(0);
    for (int l = 0; l < k; ++l) {
      Rat conv(0);
      for (std::int64_t j = 1; j < n; ++j) {
        Rat pi(2 * (n - j) * C[j] * C[n - j], den);
        pi.canonicalize();
        conv += pi * rtab.at(j, 0, l);
      }
      const int sign = ((k - l) % 2 == 0) ? 1 : -1;
      s += Rat(binomial_i64(k, l)) * (conv - Rat(sign) * rtab.at(n, 0, l));
    }
    b[n] = s;
  }
  return b;
}

}  // namespace zagreb
