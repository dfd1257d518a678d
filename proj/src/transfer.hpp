#pragma once

#include "basics.hpp"

namespace zagreb {

// Numeric validators of the asymptotic transfer results: solve the designated
// recurrence with a synthetic toll b_n = c n^alpha and compare a_N with the
// predicted asymptotic.
enum class TransferLemma {
  NPOneSided = 0,   // b = O~(n^a), a >= 0     -> a_n = O~(n^a); no constant
  NPTwoSidedI = 1,  // b = O~(n^a), 0 <= a < 1 -> a_n = mu n + O~(n^a)
  NPTwoSidedII = 2, // b ~ c n^a, a > 1        -> a_n ~ c (a+1) n^a / (a-1)
  POneSided = 3,    // b ~ c n^a, a > -1/2     -> c G(a+1/2) n^{a+1/2} / G(a+1)
  PTwoSidedI = 4,   // b ~ c sqrt n            -> c n log n / sqrt(pi)
  PTwoSidedII = 5,  // b ~ c n^a, a > 1/2      -> c G(a-1/2) n^{a+1/2} / G(a)
};

struct TransferResult {
  TransferLemma lemma;
  double c = 0, alpha = 0;
  std::int64_t N = 0;
  double a_n = 0;
  double predicted = 0;  // 0 when the lemma gives no constant
  double ratio = 0;      // a_n / predicted, or a_n / (c N^alpha) if none
  double rel_gap = 0;    // |ratio - 1| when a prediction exists
};

TransferResult transfer_check(TransferLemma lemma, double c, double alpha,
                              std::int64_t N);

}  // namespace zagreb
