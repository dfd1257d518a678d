#include "trees.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace zagreb {

namespace {

void check_size(std::int64_t n) {
  if (n < 1) throw contract_error("tree size must be >= 1");
  if (n > (std::int64_t(1) << 31) - 2) throw resource_error("tree too large");
}

struct Builder {
  RecursiveTree t;
  explicit Builder(TreeModel model, std::int64_t n) {
    t.model = model;
    t.n = n;
    const auto sz = static_cast<std::size_t>(n) + 1;
    t.parent.assign(sz, 0);
    t.first_child.assign(sz, 0);
    t.next_sib.assign(sz, 0);
    t.child_count.assign(sz, 0);
  }
  // insert node v as child of u at 0-based sibling position `rank`
  void attach(std::int32_t v, std::int32_t u, std::int32_t rank) {
    t.parent[v] = u;
    if (rank == 0) {
      t.next_sib[v] = t.first_child[u];
      t.first_child[u] = v;
    } else {
      std::int32_t w = t.first_child[u];
      for (std::int32_t i = 1; i < rank; ++i) w = t.next_sib[w];
      t.next_sib[v] = t.next_sib[w];
      t.next_sib[w] = v;
    }
    ++t.child_count[u];
  }
};

}  // namespace

std::vector<std::int32_t> RecursiveTree::children(std::int64_t v) const {
  std::vector<std::int32_t> out;
  for (std::int32_t c = first_child[static_cast<std::size_t>(v)]; c != 0;
       c = next_sib[c])
    out.push_back(c);
  return out;
}

RecursiveTree gen_nonplane(std::int64_t n, std::uint64_t seed) {
  check_size(n);
  Builder b(TreeModel::NonPlane, n);
  Rng rng(seed);
  for (std::int64_t i = 2; i <= n; ++i) {
    const auto u = static_cast<std::int32_t>(1 + rng.bounded(i - 1));
    // children kept in insertion order; order is ignored by NonPlane semantics
    b.attach(static_cast<std::int32_t>(i), u, b.t.child_count[u]);
  }
  return std::move(b.t);
}

RecursiveTree gen_plane(std::int64_t n, std::uint64_t seed) {
  check_size(n);
  Builder b(TreeModel::Plane, n);
  Rng rng(seed);
  std::vector<std::int32_t> gaps;
  gaps.reserve(static_cast<std::size_t>(2 * n));
  gaps.push_back(1);
  for (std::int64_t i = 2; i <= n; ++i) {
    const auto u = gaps[rng.bounded(gaps.size())];
    const auto rank =
        static_cast<std::int32_t>(rng.bounded(b.t.child_count[u] + 1));
    b.attach(static_cast<std::int32_t>(i), u, rank);
    gaps.push_back(u);
    gaps.push_back(static_cast<std::int32_t>(i));
  }
  return std::move(b.t);
}

RecursiveTree generate(TreeModel model, std::int64_t n, std::uint64_t seed) {
  return model == TreeModel::NonPlane ? gen_nonplane(n, seed)
                                      : gen_plane(n, seed);
}

Int count_trees(TreeModel model, std::int64_t n) {
  check_size(n);
  if (model == TreeModel::NonPlane) return factorial(n - 1);
  Int r = 1;
  for (std::int64_t m = 3; m <= 2 * n - 3; m += 2) r *= m;
  return r;
}

std::int64_t leftmost_subtree_size(const RecursiveTree& tree) {
  if (tree.n < 2) throw contract_error("leftmost_subtree_size: n >= 2");
  const std::int32_t c1 = tree.first_child[1];
  // parent[v] < v, so one forward pass resolves each node's root-child anchor
  std::vector<std::int32_t> anchor(static_cast<std::size_t>(tree.n) + 1, 0);
  std::int64_t count = 0;
  for (std::int64_t v = 2; v <= tree.n; ++v) {
    const std::int32_t p = tree.parent[static_cast<std::size_t>(v)];
    anchor[v] = (p == 1) ? static_cast<std::int32_t>(v) : anchor[p];
    if (anchor[v] == c1) ++count;
  }
  return count;
}

void write_dump(const RecursiveTree& tree, std::ostream& os) {
  std::vector<std::int32_t> rank(static_cast<std::size_t>(tree.n) + 1, 0);
  for (std::int64_t u = 1; u <= tree.n; ++u) {
    std::int32_t r = 1;
    for (std::int32_t c = tree.first_child[static_cast<std::size_t>(u)];
         c != 0; c = tree.next_sib[c])
      rank[c] = r++;
  }
  for (std::int64_t v = 2; v <= tree.n; ++v)
    os << v << '\t' << tree.parent[static_cast<std::size_t>(v)] << '\t'
       << rank[v] << '\n';
}

RecursiveTree read_dump(std::istream& is, TreeModel model) {
  std::vector<std::pair<std::int64_t, std::int64_t>> rows;  // (parent, rank)
  std::string line;
  std::int64_t expect = 2;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::int64_t v = 0, p = 0, r = 0;
    if (!(ls >> v >> p >> r)) throw contract_error("dump: malformed line");
    if (v != expect) throw contract_error("dump: nodes must be 2..n in order");
    if (p < 1 || p >= v) throw contract_error("dump: parent must be < node");
    if (r < 1) throw contract_error("dump: rank must be >= 1");
    rows.emplace_back(p, r);
    ++expect;
  }
  const std::int64_t n = expect - 1;
  check_size(n);
  Builder b(model, n);
  // ranks are final sibling positions: group children per parent, order by rank
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> kids(
      static_cast<std::size_t>(n) + 1);
  for (std::int64_t v = 2; v <= n; ++v)
    kids[rows[v - 2].first].emplace_back(rows[v - 2].second, v);
  for (std::int64_t u = 1; u <= n; ++u) {
    auto& ks = kids[u];
    std::sort(ks.begin(), ks.end());
    for (std::size_t i = 0; i < ks.size(); ++i) {
      if (ks[i].first != static_cast<std::int64_t>(i) + 1)
        throw contract_error("dump: sibling ranks must be 1..c");
      b.attach(static_cast<std::int32_t>(ks[i].second),
               static_cast<std::int32_t>(u), static_cast<std::int32_t>(i));
    }
  }
  return std::move(b.t);
}

std::string tree_key(const RecursiveTree& tree) {
  std::string key;
  const bool plane = tree.model == TreeModel::Plane;
  std::vector<std::int32_t> rank;
  if (plane) {
    rank.assign(static_cast<std::size_t>(tree.n) + 1, 0);
    for (std::int64_t u = 1; u <= tree.n; ++u) {
      std::int32_t r = 1;
      for (std::int32_t c = tree.first_child[static_cast<std::size_t>(u)];
           c != 0; c = tree.next_sib[c])
        rank[c] = r++;
    }
  }
  key.reserve(static_cast<std::size_t>(tree.n) * (plane ? 8 : 4));
  auto put32 = [&key](std::int32_t x) {
    for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>((x >> (8 * b)) & 0xff));
  };
  for (std::int64_t v = 2; v <= tree.n; ++v) {
    put32(tree.parent[static_cast<std::size_t>(v)]);
    if (plane) put32(rank[v]);
  }
  return key;
}

SimStats generate_stats(TreeModel model, std::int64_t n, int k, Rng& rng,
                        SimScratch& scratch, bool want_leftmost) {
  check_size(n);
  if (k < 2) throw contract_error("zagreb order k must be >= 2");
  // (n-1)^k + (n-1) must fit the 128-bit accumulator
  if (k * std::log2(static_cast<double>(n) + 1) > 120)
    throw resource_error("generate_stats: zagreb value exceeds 128-bit range");
  auto& cc = scratch.deg;  // child counts
  cc.assign(static_cast<std::size_t>(n) + 1, 0);
  SimStats st;
  std::int32_t leftmost = 0;
  std::vector<std::int32_t>* anchor = nullptr;
  std::vector<std::int32_t> anchor_buf;
  if (want_leftmost) {
    anchor_buf.assign(static_cast<std::size_t>(n) + 1, 0);
    anchor = &anchor_buf;
  }
  const bool plane = model == TreeModel::Plane;
  auto& gaps = scratch.gaps;
  if (plane) {
    gaps.clear();
    gaps.reserve(static_cast<std::size_t>(2 * n));
    gaps.push_back(1);
  }
  for (std::int64_t i = 2; i <= n; ++i) {
    std::int32_t u;
    if (plane) {
      u = gaps[rng.bounded(gaps.size())];
      const auto rank = rng.bounded(static_cast<std::uint64_t>(cc[u]) + 1);
      if (want_leftmost && u == 1 && (rank == 0 || cc[1] == 0))
        leftmost = static_cast<std::int32_t>(i);
      gaps.push_back(u);
      gaps.push_back(static_cast<std::int32_t>(i));
    } else {
      u = static_cast<std::int32_t>(1 + rng.bounded(i - 1));
      if (want_leftmost && u == 1 && cc[1] == 0)
        leftmost = static_cast<std::int32_t>(i);
    }
    const std::uint64_t d = static_cast<std::uint64_t>(cc[u]) + (u == 1 ? 0 : 1);
    st.zagreb += upow128(d + 1, k) - upow128(d, k) + 1;
    ++cc[u];
    if (want_leftmost) {
      (*anchor)[i] = (u == 1) ? static_cast<std::int32_t>(i) : (*anchor)[u];
    }
  }
  st.root_degree = cc[1];
  if (want_leftmost && n >= 2) {
    std::int64_t cnt = 0;
    for (std::int64_t v = 2; v <= n; ++v)
      if ((*anchor)[v] == leftmost) ++cnt;
    st.leftmost_size = cnt;
  }
  return st;
}

}  // namespace zagreb
