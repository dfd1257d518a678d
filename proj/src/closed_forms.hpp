#pragma once

#include "basics.hpp"

namespace zagreb {

// E(R_n) for plane trees: 4^{n-1} / (n C_n) - 1
Rat plane_mean_rootdeg(std::int64_t n);

// E(Z_n^(2)) for plane trees:
// (2n-1)(2 H_{2n} - H_n) - 2n - 4^n / (2 n C_n) + 2
Rat plane_mean_z2(std::int64_t n);

}  // namespace zagreb
