#include <doctest.h>

#include <cmath>

#include "constants.hpp"
#include "gtable.hpp"
#include "moment_table.hpp"
#include "specialfun.hpp"
#include "transfer.hpp"
#include "verify.hpp"

using namespace zagreb;

TEST_CASE("g-table base row and first column") {
  const GTable t(3, 2, 20);
  CHECK(t.log_g(0, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(t.g(0, 2) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(t.g(1, 0) == doctest::Approx(12.0 * kSqrtPi).epsilon(1e-12));
  CHECK(t.g(2, 0) == doctest::Approx(720.0).epsilon(1e-12));
  const GTable t4(4, 2, 8);
  CHECK(t4.g(1, 0) == doctest::Approx(48.0).epsilon(1e-12));
  CHECK_THROWS_AS(GTable(2, 4, 4), contract_error);
  CHECK_THROWS_AS(t.log_g(3, 0), contract_error);
}

TEST_CASE("g-table consistency for k in {3,4,5}") {
  for (int k : {3, 4, 5}) {
    const GTable t(k, 2, 22);
    const CheckReport rep = g_consistency_check(t, 1e-10);
    CHECK(rep.all_passed());
  }
}

TEST_CASE("g-table entries are finite, positive, and increase in r") {
  for (int k : {3, 4, 5}) {
    const GTable t(k, 12, 6);
    for (int s = 0; s <= 6; ++s)
      for (int r = 0; r <= 12; ++r) {
        CHECK(std::isfinite(t.log_g(r, s)));
        if (r > 0) CHECK(t.log_g(r, s) > t.log_g(r - 1, s));
        if (s > 0) CHECK(t.log_g(r, s) > t.log_g(r, s - 1));
      }
  }
}

TEST_CASE("oracle chain invariant extends to n = 8") {
  CHECK(run_suite("oracle", 8, 0, 1).all_passed());
}

TEST_CASE("carleman dichotomy") {
  for (int k : {3, 4, 5}) {
    const GTable t(k, 60, 0);
    const CarlemanReport cr = carleman_diagnostic(t, 60);
    if (k <= 4) CHECK(cr.verdict == "divergent-like");
    if (k == 5) CHECK(cr.verdict == "convergent-like");
    if (k == 4) CHECK(cr.band_ratio_inv_r < 0.20);
    if (k == 5) CHECK(cr.band_ratio_pow < 0.20);
    if (k == 3) CHECK(cr.band_ratio_inv_r > 0.20);  // decays slower than 1/r
    CHECK(cr.fitted_exponent == doctest::Approx(k / 4.0).epsilon(0.08));
    // partial sums are increasing by positivity
    for (std::size_t i = 1; i < cr.partial_sums.size(); ++i)
      CHECK(cr.partial_sums[i] > cr.partial_sums[i - 1]);
  }
}

TEST_CASE("appendix bound and lemma grids") {
  for (int k : {3, 4, 5}) {
    const GTable t(k, 30, 10);
    const AppendixBound ab = appendix_bound_check(t);
    CHECK(ab.feasible);
    CHECK(ab.A < 4.0);
  }
  CHECK(gamma_ratio_grid().all_passed());
  CHECK(binomial_domination_grid().all_passed());
}

TEST_CASE("mu series: synthetic tolls with known limits") {
  const std::int64_t J = 200000;
  {
    std::vector<long double> b(J + 1, 3.0L);  // sum 1/(j(j+1)) = 1/2
    const SeriesValue s = exp_mu_series(b, J);
    CHECK(std::fabs(s.value - 3.0) < 1e-4);
  }
  {
    std::vector<long double> b(J + 1, 0.0L);
    for (std::int64_t j = 2; j <= J; ++j)
      b[j] = static_cast<long double>(digamma(static_cast<double>(j)));
    const SeriesValue s = exp_mu_series(b, J);
    CHECK(std::fabs(s.value - (2.0 - kEulerGamma)) < 2e-4);
  }
  CHECK_THROWS_AS(exp_mu_series(std::vector<long double>(9, 1.0L), 8),
                  contract_error);
}

TEST_CASE("mu_2 is 6 and the estimates behave like a Cauchy sequence") {
  const SeriesValue m1 = mu_k(2, 10000);
  CHECK(std::fabs(m1.value - 6.0) < 1e-2);
  CHECK(std::fabs(m1.value - 6.0) <= m1.error);
  const SeriesValue m2 = mu_k(2, 20000);
  CHECK(std::fabs(m2.value - m1.value) <= m1.error);
  CHECK(m2.error < m1.error);
  CHECK_THROWS_AS(mu_k(2, 5), contract_error);
  CHECK_THROWS_AS(mu_k(1, 100), contract_error);
}

TEST_CASE("variance constant: series vs table, nonnegative tolls") {
  const LimitConstants c = limit_constants(2, 2000);
  CHECK(c.min_toll >= -1e-9);
  CHECK(c.var.value > 0);
  // two independent routes to the same constant agree within the estimates
  CHECK(std::fabs(c.var.value - c.var_at_J) <= c.var.error + c.var_at_J_err);
  // exact finite-n check at n = 4: Var(Z_4^(2)) = 8/9
  ExactMomentTable t(TreeModel::NonPlane, 2, 4, 4);
  CHECK(t.central(4, 2) == Rat(8, 9));
}

TEST_CASE("predicted means") {
  LimitConstants c = limit_constants(2, 2000);
  CHECK(predicted_mean(TreeModel::NonPlane, 2, 1000, &c) ==
        doctest::Approx(6000.0).epsilon(0.01));
  const double second = 4.0 * kLn2 + 2.0 * kEulerGamma - 2.0;
  CHECK(second == doctest::Approx(1.92702).epsilon(1e-5));
  CHECK(predicted_mean(TreeModel::Plane, 2, 100) ==
        doctest::Approx(2.0 * 100 * std::log(100.0) + second * 100)
            .epsilon(1e-12));
  CHECK(predicted_mean(TreeModel::Plane, 4, 10) ==
        doctest::Approx(48.0 * 100.0).epsilon(1e-12));
  CHECK(predicted_mean(TreeModel::Plane, 3, 100) ==
        doctest::Approx(12.0 * kSqrtPi * 1000.0).epsilon(1e-12));
}

TEST_CASE("transfer checks hit the stated ratios") {
  const std::int64_t N = 100000;
  const TransferResult p1 = transfer_check(TransferLemma::POneSided, 1.0, 0.0, N);
  CHECK(p1.rel_gap < 0.02);
  const TransferResult n2 =
      transfer_check(TransferLemma::NPTwoSidedII, 1.0, 2.0, N);
  CHECK(n2.rel_gap < 0.02);
  // the n log n transfer converges like 1/log n; the gap at N=1e5 is ~11%
  const TransferResult pi = transfer_check(TransferLemma::PTwoSidedI, 1.0, 0.5, N);
  CHECK(pi.ratio == doctest::Approx(1.0).epsilon(0.15));
  CHECK(pi.rel_gap > 0.05);  // documents the miscalibrated acceptance bound
  // smaller lemmas: boundedness of the ratio
  const TransferResult os = transfer_check(TransferLemma::NPOneSided, 2.0, 1.0, N);
  CHECK(os.ratio > 0.0);
  CHECK(os.ratio < 50.0);
  const TransferResult ts1 =
      transfer_check(TransferLemma::NPTwoSidedI, 1.0, 0.0, N);
  CHECK(ts1.ratio == doctest::Approx(1.0).epsilon(0.01));
  // hypothesis violations
  CHECK_THROWS_AS(transfer_check(TransferLemma::NPTwoSidedII, 1.0, 1.0, N),
                  contract_error);
  CHECK_THROWS_AS(transfer_check(TransferLemma::PTwoSidedII, 1.0, 0.5, N),
                  contract_error);
  CHECK_THROWS_AS(transfer_check(TransferLemma::POneSided, 1.0, -0.6, N),
                  contract_error);
}
