#pragma once

#include "report.hpp"

#include <cstdint>
#include <string>

namespace zagreb {

// Acceptance suites behind `zagreb-lab verify --suite ...`.
//   oracle       exact agreement of enumeration, joint PMF and moment DP
//   closed-forms harmonic/Catalan closed forms vs DP, mu_2, mean expansion
//   transfer     numeric transfer-lemma ratio checks
//   clt          non-plane CLT moment checks (Monte Carlo)
//   plane-limit  plane k=3,4 limit moment ladder (Monte Carlo)
//   appendix     g-table consistency, Carleman dichotomy, appendix bounds
CheckReport run_suite(const std::string& suite, std::int64_t n_max,
                      std::uint64_t seed, int workers);

}  // namespace zagreb
