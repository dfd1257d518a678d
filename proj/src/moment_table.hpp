#pragma once

#include <memory>

#include "basics.hpp"

namespace zagreb {

// Raw mixed moments m[n][(i,l)] = E(Z_n^i R_n^l) for 1 <= n <= N and
// k*i + l <= W, propagated through the split-law recurrence
//
//   (Z_n, R_n) | I_n=j  =  (Z_j + Z'_{n-j} + f(R_j) + f(R'_{n-j}), R'_{n-j}+1)
//
// with f(d) = (d+1)^k - d^k and independent subtrees. Centered moments are a
// binomial transform of the raw ones (raw propagation keeps the recursion
// free of the running mean).
//
// Scalar T is mpq_class (exact) or long double (float kind; the convolution
// over j is pairwise-summed, so the rounding error of an entry grows like
// O(eps log n) relative per step rather than O(eps n)).
template <typename T>
class MomentTableT {
 public:
  MomentTableT(TreeModel model, int k, std::int64_t N, int W);

  TreeModel model() const { return model_; }
  int k() const { return k_; }
  std::int64_t size() const { return N_; }
  int weight_cap() const { return W_; }
  int rmax() const { return rmax_; }

  bool has(int i, int l) const {
    return i >= 0 && l >= 0 && std::int64_t(k_) * i + l <= W_;
  }
  const T& at(std::int64_t n, int i, int l) const;
  const std::vector<std::pair<int, int>>& entries() const { return entries_; }

  // E((Z_n - E Z_n)^r); requires W >= k*r
  T central(std::int64_t n, int r) const;

 private:
  void build();
  std::size_t eidx(int i, int l) const {
    return idx_[static_cast<std::size_t>(i) * (W_ + 1) + l];
  }

  TreeModel model_;
  int k_;
  std::int64_t N_;
  int W_;
  int rmax_;
  std::vector<std::pair<int, int>> entries_;
  std::vector<std::size_t> idx_;
  std::vector<std::vector<std::int64_t>> fcoef_;  // f(R)^p coefficients
  std::vector<std::vector<T>> m_;                 // [n][entry]
  std::vector<std::vector<T>> P_;  // P[j][t]   = E((Z_j + f(R_j))^t)
  std::vector<std::vector<T>> Q_;  // Q[j][v,s] = E((Z_j + f(R_j))^v (R_j+1)^s)
};

using ExactMomentTable = MomentTableT<Rat>;
using FloatMomentTable = MomentTableT<long double>;

// Kind-tagged wrapper matching the moment_table operation.
struct MomentTable {
  bool exact = true;
  std::shared_ptr<ExactMomentTable> ex;
  std::shared_ptr<FloatMomentTable> fl;

  TreeModel model() const { return exact ? ex->model() : fl->model(); }
  int k() const { return exact ? ex->k() : fl->k(); }
  std::int64_t size() const { return exact ? ex->size() : fl->size(); }
  int weight_cap() const { return exact ? ex->weight_cap() : fl->weight_cap(); }
  double at_d(std::int64_t n, int i, int l) const {
    return exact ? ex->at(n, i, l).get_d()
                 : static_cast<double>(fl->at(n, i, l));
  }
};

MomentTable moment_table(TreeModel model, int k, std::int64_t N, int W,
                         bool exact);

// NonPlane root-degree moments E(R_n^s), s <= smax, in long double via the
// uniform-law prefix form; O(N smax^2), good to very large N.
std::vector<std::vector<long double>> nonplane_rmoments_f(std::int64_t N,
                                                          int smax);

// Exact toll of the mean recurrence: plugging this into solve_two_sided
// reproduces E(Z_n^(k)). NonPlane:
//   b_n = sum_{l<k} C(k,l) (2/(n-1)) sum_{j<n} E(R_j^l)
// Plane:
//   b_n = sum_{l<k} C(k,l) (sum_j pi_{n,j} E(R_j^l) - (-1)^{k-l} E(R_n^l))
std::vector<Rat> mean_toll(TreeModel model, int k, std::int64_t N);

}  // namespace zagreb
