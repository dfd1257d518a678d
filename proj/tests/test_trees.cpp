#include <doctest.h>

#include <cmath>
#include <sstream>
#include <unordered_map>

#include "rng.hpp"
#include "specialfun.hpp"
#include "trees.hpp"
#include "zagreb_index.hpp"

using namespace zagreb;

namespace {
bool valid_tree(const RecursiveTree& t) {
  std::int64_t edges = 0;
  for (std::int64_t v = 2; v <= t.n; ++v) {
    if (!(t.parent[v] >= 1 && t.parent[v] < v)) return false;
    ++edges;
  }
  std::int64_t kids = 0;
  for (std::int64_t v = 1; v <= t.n; ++v) kids += t.child_count[v];
  return kids == edges && edges == t.n - 1;
}
}  // namespace

TEST_CASE("generation basics and determinism") {
  CHECK_THROWS_AS(gen_nonplane(0, 1), contract_error);
  CHECK_THROWS_AS(gen_plane(0, 1), contract_error);
  const RecursiveTree one = gen_nonplane(1, 7);
  CHECK(one.n == 1);
  CHECK(one.root_degree() == 0);
  CHECK(gen_nonplane(2, 99).parent[2] == 1);
  CHECK(gen_plane(2, 99).parent[2] == 1);

  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    for (std::uint64_t seed : {0ull, 1ull, 77ull}) {
      const RecursiveTree a = generate(model, 500, seed);
      const RecursiveTree b = generate(model, 500, seed);
      CHECK(valid_tree(a));
      CHECK(tree_key(a) == tree_key(b));
    }
  }
  CHECK(tree_key(gen_nonplane(100, 1)) != tree_key(gen_nonplane(100, 2)));
}

TEST_CASE("count_trees closed forms") {
  CHECK(count_trees(TreeModel::NonPlane, 4) == 6);
  CHECK(count_trees(TreeModel::Plane, 4) == 15);
  CHECK(count_trees(TreeModel::Plane, 1) == 1);
  CHECK(count_trees(TreeModel::Plane, 2) == 1);
  CHECK(count_trees(TreeModel::Plane, 5) == 105);
  // (2n-3)!! = (2n-2)! / (2^{n-1} (n-1)!) = n! C_n / 2^{n-1}
  for (int n = 1; n <= 40; ++n) {
    const Int lhs = count_trees(TreeModel::Plane, n) * (Int(1) << (n - 1));
    CHECK(lhs == factorial(n) * catalan(n));
  }
}

TEST_CASE("nonplane attachment is uniform (empirical)") {
  const std::int64_t reps = 1000000;
  std::int64_t root_hits = 0;
  for (std::int64_t i = 0; i < reps; ++i) {
    Rng rng(derive_stream(12345, i));
    // parent of node 3 among {1, 2}
    rng.bounded(1);
    root_hits += rng.bounded(2) == 0;
  }
  const double p = static_cast<double>(root_hits) / reps;
  CHECK(std::fabs(p - 0.5) < 0.002);
}

TEST_CASE("plane root degree law at small n (empirical)") {
  const std::int64_t reps = 1000000;
  SimScratch scratch;
  std::int64_t deg2 = 0;
  double sum4 = 0;
  for (std::int64_t i = 0; i < reps; ++i) {
    Rng rng3(derive_stream(777, i));
    if (generate_stats(TreeModel::Plane, 3, 2, rng3, scratch).root_degree == 2)
      ++deg2;
    Rng rng4(derive_stream(778, i));
    sum4 += static_cast<double>(
        generate_stats(TreeModel::Plane, 4, 2, rng4, scratch).root_degree);
  }
  CHECK(std::fabs(static_cast<double>(deg2) / reps - 2.0 / 3.0) < 0.002);
  CHECK(std::fabs(sum4 / reps - 2.2) < 0.01);
}

TEST_CASE("uniformity over all trees: chi-square (nonplane) and 3sd (plane)") {
  // non-plane: uniform over (n-1)! labeled histories
  for (std::int64_t n : {4, 5, 6}) {
    const std::int64_t cells = count_trees(TreeModel::NonPlane, n).get_si();
    const std::int64_t reps = 120000ll * cells / 24;  // scale with cell count
    std::unordered_map<std::string, std::int64_t> freq;
    for (std::int64_t i = 0; i < reps; ++i)
      ++freq[tree_key(gen_nonplane(n, derive_stream(4242 + n, i)))];
    CHECK(static_cast<std::int64_t>(freq.size()) == cells);
    const double expect = static_cast<double>(reps) / cells;
    double chi2 = 0;
    for (const auto& [key, c] : freq) {
      const double d = c - expect;
      chi2 += d * d / expect;
    }
    const double p = chi_square_pvalue(chi2, static_cast<double>(cells - 1));
    CHECK(p > 0.001);
  }
  // plane: each distinct plane tree has probability 1/(2n-3)!!
  for (std::int64_t n : {4, 5}) {
    const std::int64_t cells = count_trees(TreeModel::Plane, n).get_si();
    const std::int64_t reps = 1000000;
    std::unordered_map<std::string, std::int64_t> freq;
    for (std::int64_t i = 0; i < reps; ++i)
      ++freq[tree_key(gen_plane(n, derive_stream(999 + n, i)))];
    CHECK(static_cast<std::int64_t>(freq.size()) == cells);
    const double p = 1.0 / static_cast<double>(cells);
    const double sd = std::sqrt(reps * p * (1 - p));
    for (const auto& [key, c] : freq)
      CHECK(std::fabs(static_cast<double>(c) - reps * p) <= 3.0 * sd);
  }
}

TEST_CASE("leftmost subtree size") {
  CHECK_THROWS_AS(leftmost_subtree_size(gen_nonplane(1, 3)), contract_error);
  for (std::uint64_t s = 0; s < 50; ++s) {
    CHECK(leftmost_subtree_size(generate(TreeModel::NonPlane, 2, s)) == 1);
    CHECK(leftmost_subtree_size(generate(TreeModel::Plane, 2, s)) == 1);
  }
  // plane n=3: leftmost subtree has size 1 iff both children hang off the root
  const std::int64_t reps = 1000000;
  std::int64_t ones = 0;
  for (std::int64_t i = 0; i < reps; ++i)
    ones += leftmost_subtree_size(gen_plane(3, derive_stream(31, i))) == 1;
  CHECK(std::fabs(static_cast<double>(ones) / reps - 2.0 / 3.0) < 0.002);
  // nonplane n=5: uniform over {1,2,3,4}
  std::int64_t c[5] = {0, 0, 0, 0, 0};
  for (std::int64_t i = 0; i < reps; ++i)
    ++c[leftmost_subtree_size(gen_nonplane(5, derive_stream(51, i)))];
  for (int j = 1; j <= 4; ++j)
    CHECK(std::fabs(static_cast<double>(c[j]) / reps - 0.25) < 0.002);
}

TEST_CASE("dump writes final sibling ranks and round-trips") {
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    const RecursiveTree t = generate(model, 64, 2024);
    std::ostringstream os;
    write_dump(t, os);
    std::istringstream is(os.str());
    const RecursiveTree u = read_dump(is, model);
    CHECK(tree_key(t) == tree_key(u));
    CHECK(zagreb_index(t, 3) == zagreb_index(u, 3));
  }
  std::istringstream bad("2\t1\t1\n3\t5\t1\n");
  CHECK_THROWS_AS(read_dump(bad, TreeModel::NonPlane), contract_error);
}

TEST_CASE("generate_stats walks the same stream as the tree builders") {
  SimScratch scratch;
  for (TreeModel model : {TreeModel::NonPlane, TreeModel::Plane}) {
    for (std::uint64_t seed : {5ull, 6ull, 7ull}) {
      const RecursiveTree t = generate(model, 300, seed);
      Rng rng(seed);
      const SimStats st = generate_stats(model, 300, 3, rng, scratch, true);
      CHECK(Int(static_cast<unsigned long>(
                static_cast<std::uint64_t>(st.zagreb))) == zagreb_index(t, 3));
      CHECK(st.root_degree == t.root_degree());
      CHECK(st.leftmost_size == leftmost_subtree_size(t));
    }
  }
}
