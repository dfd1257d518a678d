#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace zagreb {

using Int = mpz_class;  // arbitrary-precision integer
using Rat = mpq_class;  // canonical rational: den > 0, gcd(|num|, den) = 1

// Contract violations (bad sizes, orders, caps) vs. blown size/support limits.
struct contract_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TreeModel { NonPlane = 0, Plane = 1 };

inline const char* model_name(TreeModel m) {
  return m == TreeModel::NonPlane ? "nonplane" : "plane";
}

inline Int factorial(std::int64_t n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || r > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(r));
  return b;
}

// small-exponent integer powers of machine ints; k <= 40 or so
inline Int ipow(std::int64_t base, int k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(k));
  return r;
}

inline unsigned __int128 upow128(std::uint64_t base, int k) {
  unsigned __int128 r = 1;
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

// binomial coefficients as int64 (valid for the small r used in moment
// expansions; asserts no overflow via the gmp value)
std::int64_t binomial_i64(int n, int r);

// Pairwise (tree) summation over a scratch buffer. Keeps float rounding flat
// in n and keeps rational denominators balanced.
template <typename T>
T pairwise_sum(std::vector<T>& buf) {
  std::size_t m = buf.size();
  if (m == 0) return T(0);
  while (m > 1) {
    std::size_t half = m / 2;
    for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
    if (m & 1) {
      buf[half] = buf[m - 1];
      m = half + 1;
    } else {
      m = half;
    }
  }
  return buf[0];
}

std::string rat_num_str(const Rat& q);
std::string rat_den_str(const Rat& q);

}  // namespace zagreb
