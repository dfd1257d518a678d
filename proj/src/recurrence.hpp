#pragma once

#include "basics.hpp"

namespace zagreb {

// Solvers for the two recurrence shapes behind all moment computations, with
// a_1 = 0 and the toll b defined on indices 2..N (b[0], b[1] ignored):
//
//   one-sided:  a_n = sum_{j=1}^{n-1} pi_{n,j} a_{n-j} + b_n
//   two-sided:  a_n = sum_{j=1}^{n-1} pi_{n,j} (a_j + a_{n-j}) + b_n
//
// Exact solvers take rational tolls; the float solvers run in double and are
// meant for large N (the plane solvers are O(N^2) convolutions).

std::vector<Rat> solve_one_sided(TreeModel model, const std::vector<Rat>& b,
                                 std::int64_t N);
std::vector<Rat> solve_two_sided(TreeModel model, const std::vector<Rat>& b,
                                 std::int64_t N);

std::vector<double> solve_one_sided_f(TreeModel model,
                                      const std::vector<double>& b,
                                      std::int64_t N);
std::vector<double> solve_two_sided_f(TreeModel model,
                                      const std::vector<double>& b,
                                      std::int64_t N);

// Closed solution of the one-sided recurrence under the uniform split law:
// a_n = b_n + sum_{j=2}^{n-1} b_j / j.
std::vector<Rat> one_sided_closed_uniform(const std::vector<Rat>& b,
                                          std::int64_t N);

}  // namespace zagreb
