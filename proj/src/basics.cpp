#include "basics.hpp"

namespace zagreb {

std::int64_t binomial_i64(int n, int r) {
  Int b = binomial(n, r);
  if (!b.fits_slong_p()) throw resource_error("binomial_i64: overflow");
  return static_cast<std::int64_t>(b.get_si());
}

std::string rat_num_str(const Rat& q) { return q.get_num().get_str(); }
std::string rat_den_str(const Rat& q) { return q.get_den().get_str(); }

}  // namespace zagreb
