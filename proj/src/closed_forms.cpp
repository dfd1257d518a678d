#include "closed_forms.hpp"

#include "specialfun.hpp"

namespace zagreb {

namespace {
Int pow4(std::int64_t e) {
  Int r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * e));
  return r;
}
}  // namespace

Rat plane_mean_rootdeg(std::int64_t n) {
  if (n < 1) throw contract_error("plane_mean_rootdeg: n >= 1");
  if (n == 1) return Rat(0);
  Rat r(pow4(n - 1), n * catalan(n));
  r.canonicalize();
  return r - 1;
}

Rat plane_mean_z2(std::int64_t n) {
  if (n < 1) throw contract_error("plane_mean_z2: n >= 1");
  if (n == 1) return Rat(0);
  Rat r = Rat(2 * n - 1) * (2 * harmonic(2 * n) - harmonic(n)) - Rat(2 * n);
  Rat q(pow4(n), 2 * n * catalan(n));
  q.canonicalize();
  return r - q + 2;
}

}  // namespace zagreb
