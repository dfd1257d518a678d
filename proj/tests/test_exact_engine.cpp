#include <doctest.h>

#include <cmath>

#include "closed_forms.hpp"
#include "enumeration.hpp"
#include "joint_pmf.hpp"
#include "moment_table.hpp"
#include "recurrence.hpp"
#include "rng.hpp"
#include "specialfun.hpp"
#include "split_law.hpp"

using namespace zagreb;

TEST_CASE("split law values and normalization") {
  CHECK_THROWS_AS(split_law(TreeModel::NonPlane, 1), contract_error);
  const SplitLaw np5 = split_law(TreeModel::NonPlane, 5);
  for (int j = 1; j <= 4; ++j) CHECK(np5.pi(j) == Rat(1, 4));
  const SplitLaw p3 = split_law(TreeModel::Plane, 3);
  CHECK(p3.pi(1) == Rat(2, 3));
  CHECK(p3.pi(2) == Rat(1, 3));
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane})
    for (std::int64_t n : {2, 3, 17, 100, 200, 500}) {
      const SplitLaw law = split_law(model, n);
      CHECK(law.sum() == Rat(1));
      for (const Rat& w : law.weights) CHECK(w > 0);
    }
}

TEST_CASE("one-sided solver examples") {
  std::vector<Rat> ones(11, Rat(1));
  const auto a = solve_one_sided(TreeModel::NonPlane, ones, 10);
  CHECK(a[1] == 0);
  CHECK(a[2] == 1);
  CHECK(a[3] == Rat(3, 2));
  CHECK(a[4] == Rat(11, 6));
  for (int n = 2; n <= 10; ++n) CHECK(a[n] == harmonic(n - 1));

  const auto ap = solve_one_sided(TreeModel::Plane, ones, 10);
  CHECK(ap[2] == 1);
  CHECK(ap[3] == Rat(5, 3));
  for (int n = 1; n <= 10; ++n) CHECK(ap[n] == plane_mean_rootdeg(n));

  std::vector<Rat> zeros(11, Rat(0));
  for (const Rat& v : solve_one_sided(TreeModel::Plane, zeros, 10))
    CHECK(v == 0);
  CHECK_THROWS_AS(solve_one_sided(TreeModel::NonPlane, zeros, 20),
                  contract_error);
}

TEST_CASE("closed uniform solution equals the solver on random tolls") {
  Rng rng(17);
  std::vector<Rat> b(51, Rat(0));
  for (int n = 2; n <= 50; ++n) {
    b[n] = Rat(static_cast<long>(rng.bounded(2001)) - 1000,
               1 + static_cast<long>(rng.bounded(40)));
    b[n].canonicalize();
  }
  const auto direct = solve_one_sided(TreeModel::NonPlane, b, 50);
  const auto closed = one_sided_closed_uniform(b, 50);
  for (int n = 1; n <= 50; ++n) CHECK(direct[n] == closed[n]);
  std::vector<Rat> ones(31, Rat(1));
  const auto h = one_sided_closed_uniform(ones, 30);
  for (int n = 2; n <= 30; ++n) CHECK(h[n] == harmonic(n - 1));
}

TEST_CASE("two-sided solver with the exact mean toll reproduces the tables") {
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    for (int k : {2, 3}) {
      const std::int64_t N = 40;
      const auto b = mean_toll(model, k, N);
      const auto a = solve_two_sided(model, b, N);
      ExactMomentTable t(model, k, N, k);
      for (std::int64_t n = 1; n <= N; ++n) CHECK(a[n] == t.at(n, 1, 0));
    }
  }
  // hand values: E(Z_3^(2)) = 6 on both models
  const auto bn = mean_toll(TreeModel::NonPlane, 2, 3);
  CHECK(solve_two_sided(TreeModel::NonPlane, bn, 3)[3] == 6);
  const auto bp = mean_toll(TreeModel::Plane, 2, 3);
  CHECK(solve_two_sided(TreeModel::Plane, bp, 3)[3] == 6);
  std::vector<Rat> zeros(11, Rat(0));
  for (const Rat& v : solve_two_sided(TreeModel::Plane, zeros, 10))
    CHECK(v == 0);
}

TEST_CASE("joint pmf small cases") {
  const JointPMF one = joint_pmf(TreeModel::Plane, 2, 1);
  CHECK(one.p.size() == 1);
  CHECK(one.p.at({0, 0}) == 1);

  const JointPMF p33 = joint_pmf(TreeModel::Plane, 3, 3);
  CHECK(p33.p.size() == 2);
  CHECK(p33.p.at({10, 2}) == Rat(2, 3));
  CHECK(p33.p.at({10, 1}) == Rat(1, 3));

  const JointPMF np4 = joint_pmf(TreeModel::NonPlane, 2, 4);
  CHECK(np4.moment(1, 0) == Rat(32, 3));
  CHECK(np4.total() == 1);
  CHECK_THROWS_AS(joint_pmf(TreeModel::Plane, 1, 3), contract_error);
}

TEST_CASE("joint pmf support sits between the path and star values") {
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane})
    for (int k : {2, 3})
      for (std::int64_t n : {2, 4, 6, 8}) {
        const JointPMF pmf = joint_pmf(model, k, n);
        const std::int64_t path = 2 + (n - 2) * (std::int64_t(1) << k);
        Int star = ipow(n - 1, k) + (n - 1);
        Rat total = 0;
        for (const auto& [key, q] : pmf.p) {
          CHECK(key.first >= std::min<std::int64_t>(path, 2));
          CHECK(Int(static_cast<long>(key.first)) <= star);
          CHECK(key.second >= 1);
          CHECK(key.second <= n - 1);
          CHECK(q > 0);
          total += q;
        }
        CHECK(total == 1);
      }
}

TEST_CASE("enumeration oracle") {
  const EnumerationResult np4 = enumerate_all(TreeModel::NonPlane, 2, 4);
  CHECK(np4.total_weight == 6);
  const auto ms = np4.zagreb_multiset();
  CHECK(ms.at(12) == 2);
  CHECK(ms.at(10) == 4);

  const EnumerationResult p3 = enumerate_all(TreeModel::Plane, 2, 3);
  CHECK(p3.total_weight == 3);
  const JointPMF pmf3 = p3.to_pmf();
  Rat pr_deg2 = 0;
  for (const auto& [key, q] : pmf3.p)
    if (key.second == 2) pr_deg2 += q;
  CHECK(pr_deg2 == Rat(2, 3));

  CHECK(enumerate_all(TreeModel::Plane, 2, 5).total_weight == 105);
  CHECK_THROWS_AS(enumerate_all(TreeModel::Plane, 2, 10), resource_error);
}

TEST_CASE("oracle chain at small sizes") {
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane})
    for (int k : {2, 3}) {
      ExactMomentTable table(model, k, 6, 2 * k);
      for (std::int64_t n = 1; n <= 6; ++n) {
        const JointPMF via_enum = enumerate_all(model, k, n).to_pmf();
        const JointPMF direct = joint_pmf(model, k, n);
        for (const auto& [i, l] : table.entries()) {
          CHECK(via_enum.moment(i, l) == direct.moment(i, l));
          CHECK(direct.moment(i, l) == table.at(n, i, l));
        }
      }
    }
}

TEST_CASE("moment table equals pmf moments up to n = 12") {
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    ExactMomentTable table(model, 2, 12, 4);
    for (std::int64_t n = 1; n <= 12; ++n) {
      const JointPMF pmf = joint_pmf(model, 2, n);
      for (const auto& [i, l] : table.entries())
        CHECK(pmf.moment(i, l) == table.at(n, i, l));
    }
  }
}

TEST_CASE("moment table closed-form columns") {
  ExactMomentTable np(TreeModel::NonPlane, 2, 100, 2);
  for (std::int64_t n = 1; n <= 100; ++n)
    CHECK(np.at(n, 0, 1) == harmonic(n - 1));
  ExactMomentTable pl(TreeModel::Plane, 2, 100, 2);
  for (std::int64_t n = 1; n <= 100; ++n) {
    CHECK(pl.at(n, 0, 1) == plane_mean_rootdeg(n));
    CHECK(pl.at(n, 1, 0) == plane_mean_z2(n));
  }
  // mean column never decreases
  for (std::int64_t n = 2; n <= 100; ++n)
    CHECK(pl.at(n, 1, 0) >= pl.at(n - 1, 1, 0));
}

TEST_CASE("centered moments") {
  ExactMomentTable t(TreeModel::NonPlane, 2, 10, 8);
  for (std::int64_t n = 1; n <= 10; ++n) CHECK(t.central(n, 1) == 0);
  CHECK(t.central(2, 2) == 0);  // Z_2 is deterministic
  CHECK(t.central(4, 2) == Rat(8, 9));
  CHECK_THROWS_AS(t.central(5, 5), contract_error);
}

TEST_CASE("float tables track the exact tables") {
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    ExactMomentTable ex(model, 2, 100, 6);
    FloatMomentTable fl(model, 2, 100, 6);
    for (std::int64_t n = 1; n <= 100; ++n)
      for (const auto& [i, l] : ex.entries()) {
        const double e = ex.at(n, i, l).get_d();
        const double f = static_cast<double>(fl.at(n, i, l));
        CHECK(std::fabs(f - e) <= 1e-12 * (1.0 + std::fabs(e)));
      }
  }
}

TEST_CASE("closed forms at small n") {
  CHECK(plane_mean_rootdeg(2) == 1);
  CHECK(plane_mean_rootdeg(3) == Rat(5, 3));
  CHECK(plane_mean_rootdeg(4) == Rat(11, 5));
  CHECK(plane_mean_z2(2) == 2);
  CHECK(plane_mean_z2(3) == 6);
  CHECK(plane_mean_z2(1) == 0);
}

TEST_CASE("contract and resource errors") {
  CHECK_THROWS_AS(moment_table(TreeModel::Plane, 2, 10, 1, true),
                  contract_error);
  CHECK_THROWS_AS(ExactMomentTable(TreeModel::Plane, 2, 5000, 4),
                  resource_error);
  PmfLimits tight;
  tight.work = 10;
  CHECK_THROWS_AS(joint_pmf(TreeModel::NonPlane, 2, 12, tight),
                  resource_error);
}
