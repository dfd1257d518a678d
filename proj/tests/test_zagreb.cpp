#include <doctest.h>

#include <numeric>
#include <sstream>

#include "rng.hpp"
#include "trees.hpp"
#include "zagreb_index.hpp"

using namespace zagreb;

namespace {
RecursiveTree from_parents(const std::vector<std::int32_t>& parents) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    // ranks in insertion order
    int rank = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (parents[j] == parents[i]) ++rank;
    os << (i + 2) << '\t' << parents[i] << '\t' << rank << '\n';
  }
  std::istringstream is(os.str());
  return read_dump(is, TreeModel::NonPlane);
}
}  // namespace

TEST_CASE("degree profiles") {
  CHECK(degree_profile(from_parents({})) == std::vector<std::int64_t>{0});
  CHECK(degree_profile(from_parents({1, 2})) ==
        std::vector<std::int64_t>{1, 2, 1});
  CHECK(degree_profile(from_parents({1, 1, 1})) ==
        std::vector<std::int64_t>{3, 1, 1, 1});
}

TEST_CASE("zagreb index examples") {
  const RecursiveTree single = from_parents({});
  CHECK(zagreb_index(single, 2) == 0);
  const RecursiveTree pair = from_parents({1});
  for (int k = 2; k <= 6; ++k) CHECK(zagreb_index(pair, k) == 2);
  const RecursiveTree path3 = from_parents({1, 2});
  const RecursiveTree star3 = from_parents({1, 1});
  CHECK(zagreb_index(path3, 2) == 6);
  CHECK(zagreb_index(star3, 2) == 6);
  CHECK(zagreb_index(path3, 3) == 10);
  CHECK(zagreb_index(from_parents({1, 1, 1}), 3) == 30);
  CHECK(zagreb_index_edge_form(pair, 2) == 2);
  CHECK(zagreb_index_edge_form(path3, 3) == 10);
  CHECK_THROWS_AS(zagreb_index(path3, 1), contract_error);
  CHECK_THROWS_AS(zagreb_index_edge_form(path3, 0), contract_error);
}

TEST_CASE("vertex and edge forms agree on random trees") {
  std::int64_t done = 0;
  for (std::uint64_t seed = 0; done < 10000; ++seed) {
    const TreeModel model =
        seed % 2 ? TreeModel::Plane : TreeModel::NonPlane;
    const std::int64_t n = 1 + (seed * 37) % 50;
    const RecursiveTree t = generate(model, n, derive_stream(88, seed));
    const auto deg = degree_profile(t);
    CHECK(std::accumulate(deg.begin(), deg.end(), std::int64_t(0)) ==
          2 * (n - 1));
    for (int k : {2, 3, 4, 5})
      CHECK(zagreb_index(t, k) == zagreb_index_edge_form(t, k));
    ++done;
  }
}

TEST_CASE("attachment delta matches batch recomputation") {
  // grow a tree node by node; Z must move by (D_v+1)^k - D_v^k + 1
  for (int k : {2, 3, 4}) {
    Rng rng(k * 101);
    RecursiveTree t = generate(TreeModel::NonPlane, 1, 0);
    Int z = 0;
    for (std::int64_t i = 2; i <= 40; ++i) {
      std::ostringstream os;
      write_dump(t, os);
      const std::int64_t v =
          1 + static_cast<std::int64_t>(rng.bounded(i - 1));
      z += attach_delta(t.degree(v), k);
      os << i << '\t' << v << '\t' << (t.child_count[v] + 1) << '\n';
      std::istringstream is(os.str());
      t = read_dump(is, TreeModel::NonPlane);
      CHECK(zagreb_index(t, k) == z);
    }
  }
}

TEST_CASE("root degree") {
  CHECK(root_degree(from_parents({})) == 0);
  CHECK(root_degree(from_parents({1})) == 1);
  CHECK(root_degree(from_parents({1, 1, 2, 1})) == 3);
}
