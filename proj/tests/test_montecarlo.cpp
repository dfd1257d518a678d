#include <doctest.h>

#include <cmath>

#include "enumeration.hpp"
#include "moment_table.hpp"
#include "exports.hpp"
#include "montecarlo.hpp"
#include "rng.hpp"

using namespace zagreb;

TEST_CASE("shifted sums reproduce direct moment computations") {
  Rng rng(3);
  std::vector<long double> xs;
  for (int i = 0; i < 2000; ++i)
    xs.push_back(100.0L + static_cast<long double>(rng.bounded(1000)) / 7.0L);
  ShiftedSums acc;
  acc.shift = xs[0];
  for (long double x : xs) acc.add(x);
  long double mean = 0;
  for (long double x : xs) mean += x;
  mean /= xs.size();
  CHECK(static_cast<double>(acc.mean()) ==
        doctest::Approx(static_cast<double>(mean)).epsilon(1e-15));
  for (int p = 2; p <= 8; ++p) {
    long double m = 0;
    for (long double x : xs) m += powl(x - mean, p);
    m /= xs.size();
    CHECK(static_cast<double>(acc.central(p)) ==
          doctest::Approx(static_cast<double>(m)).epsilon(1e-10));
  }
  for (int p = 1; p <= 8; ++p) {
    long double m = 0;
    for (long double x : xs) m += powl(x / 50.0L, p);
    m /= xs.size();
    CHECK(static_cast<double>(acc.raw(p, 50.0L)) ==
          doctest::Approx(static_cast<double>(m)).epsilon(1e-10));
  }
  // merging blocks approximates the single pass (different addition order)
  // and is bit-identical between runs with the same block structure
  ShiftedSums a, b;
  a.shift = b.shift = xs[0];
  for (std::size_t i = 0; i < xs.size(); ++i) (i < 700 ? a : b).add(xs[i]);
  a.merge(b);
  for (int p = 1; p <= 8; ++p)
    CHECK(static_cast<double>(a.s[p]) ==
          doctest::Approx(static_cast<double>(acc.s[p])).epsilon(1e-14));
  ShiftedSums a2, b2;
  a2.shift = b2.shift = xs[0];
  for (std::size_t i = 0; i < xs.size(); ++i) (i < 700 ? a2 : b2).add(xs[i]);
  a2.merge(b2);
  for (int p = 1; p <= 8; ++p) CHECK(a2.s[p] == a.s[p]);
}

TEST_CASE("simulation is deterministic and worker-independent") {
  SimConfig cfg;
  cfg.model = TreeModel::Plane;
  cfg.k = 3;
  cfg.sizes = {50, 200};
  cfg.replicates = 20000;
  cfg.seed = 99;
  cfg.workers = 1;
  const std::string a = json_sim_summary(simulate(cfg));
  cfg.workers = 4;
  const std::string b = json_sim_summary(simulate(cfg));
  CHECK(a == b);
  cfg.seed = 100;
  CHECK(json_sim_summary(simulate(cfg)) != a);
}

TEST_CASE("simulated moments match the enumeration oracle at small n") {
  // mean of Z^(2) at n=4 is 32/3; mean of R at n=6 is H_5
  SimConfig cfg;
  cfg.model = TreeModel::NonPlane;
  cfg.k = 2;
  cfg.sizes = {4, 6};
  cfg.replicates = 1000000;
  cfg.seed = 2024;
  const SimSummary s = simulate(cfg);
  const double se4 =
      std::sqrt(s.per_size[0].z_var / static_cast<double>(cfg.replicates));
  CHECK(std::fabs(s.per_size[0].z_mean - 32.0 / 3.0) < 4.0 * se4);
  const double h5 = 137.0 / 60.0;
  const double ser =
      std::sqrt(s.per_size[1].r_var / static_cast<double>(cfg.replicates));
  CHECK(std::fabs(s.per_size[1].r_mean - h5) < 4.0 * ser);
}

TEST_CASE("exact DP means match monte carlo at n in {50, 100}") {
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    FloatMomentTable table(model, 2, 100, 2);
    SimConfig cfg;
    cfg.model = model;
    cfg.k = 2;
    cfg.sizes = {50, 100};
    cfg.replicates = 100000;
    cfg.seed = 424242;
    const SimSummary s = simulate(cfg);
    for (const auto& ss : s.per_size) {
      const double exact = static_cast<double>(table.at(ss.n, 1, 0));
      const double se = std::sqrt(ss.z_var / static_cast<double>(ss.replicates));
      CHECK(std::fabs(ss.z_mean - exact) < 4.0 * se);
    }
  }
}

TEST_CASE("plane size-3 trees all carry Z^(3) = 10") {
  SimConfig cfg;
  cfg.model = TreeModel::Plane;
  cfg.k = 3;
  cfg.sizes = {3};
  cfg.replicates = 5000;
  cfg.seed = 5;
  const SimSummary s = simulate(cfg);
  CHECK(s.per_size[0].z_mean == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(s.per_size[0].z_var == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("unbiasedness harness: 100 meta-trials vs enumeration") {
  // reduced-scale version of the CI harness: for both models and n in {5, 7},
  // at least 99 of 100 independent runs land within 4 standard errors
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    for (std::int64_t n : {5, 7}) {
      const Rat exact = enumerate_all(model, 2, n).to_pmf().moment(1, 0);
      const double target = exact.get_d();
      int hits = 0;
      for (int trial = 0; trial < 100; ++trial) {
        SimConfig cfg;
        cfg.model = model;
        cfg.k = 2;
        cfg.sizes = {n};
        cfg.replicates = 20000;
        cfg.seed = derive_stream(31337, trial);
        const SimSummary s = simulate(cfg);
        const double se = std::sqrt(s.per_size[0].z_var /
                                    static_cast<double>(cfg.replicates));
        if (std::fabs(s.per_size[0].z_mean - target) <= 4.0 * se) ++hits;
      }
      CHECK(hits >= 99);
    }
  }
}

TEST_CASE("empirical split check") {
  const SplitCheck np = empirical_split_check(TreeModel::NonPlane, 10, 1000000, 77);
  CHECK(np.pvalue > 0.001);
  CHECK(np.report.all_passed());
  const SplitCheck pl = empirical_split_check(TreeModel::Plane, 6, 1000000, 78);
  CHECK(pl.report.all_passed());
  const SplitCheck two = empirical_split_check(TreeModel::Plane, 2, 100, 1);
  CHECK(two.pvalue == 1.0);
  CHECK_THROWS_AS(empirical_split_check(TreeModel::Plane, 1, 10, 1),
                  contract_error);
}

TEST_CASE("config validation") {
  SimConfig cfg;
  cfg.sizes = {10, 5};
  cfg.replicates = 10;
  CHECK_THROWS_AS(simulate(cfg), contract_error);
  cfg.sizes = {};
  CHECK_THROWS_AS(simulate(cfg), contract_error);
  cfg.sizes = {1000000000};
  cfg.k = 8;
  CHECK_THROWS_AS(simulate(cfg), resource_error);
}
