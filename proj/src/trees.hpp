#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "basics.hpp"
#include "rng.hpp"

namespace zagreb {

// Labeled rooted recursive tree. Node labels are 1..n, node 1 is the root,
// parent[v] < v. Children are kept in left-to-right order via sibling links;
// for NonPlane trees the order is insertion order and carries no meaning.
struct RecursiveTree {
  TreeModel model = TreeModel::NonPlane;
  std::int64_t n = 0;
  std::vector<std::int32_t> parent;       // [1..n], parent[1] = 0
  std::vector<std::int32_t> first_child;  // 0 = none
  std::vector<std::int32_t> next_sib;     // 0 = none
  std::vector<std::int32_t> child_count;

  std::vector<std::int32_t> children(std::int64_t v) const;
  // total degree: child count, plus one for the parent edge when v != 1
  std::int64_t degree(std::int64_t v) const {
    return child_count[static_cast<std::size_t>(v)] + (v == 1 ? 0 : 1);
  }
  std::int64_t root_degree() const { return child_count[1]; }
};

// Uniform attachment: node i picks its parent uniformly from {1,...,i-1}.
RecursiveTree gen_nonplane(std::int64_t n, std::uint64_t seed);

// Gap insertion: node i lands in one of the 2(i-1)-1 free places, so parent
// v is chosen with probability (children(v)+1)/(2i-3) and the place fixes the
// rank among v's children.
RecursiveTree gen_plane(std::int64_t n, std::uint64_t seed);

RecursiveTree generate(TreeModel model, std::int64_t n, std::uint64_t seed);

// (n-1)! for NonPlane, (2n-3)!! for Plane (1 when n = 1).
Int count_trees(TreeModel model, std::int64_t n);

// Size of the subtree rooted at the left-most child of the root (NonPlane:
// the child with the smallest label). Requires n >= 2.
std::int64_t leftmost_subtree_size(const RecursiveTree& tree);

// Dump format: one line "v\tparent\trank" per node v = 2..n in order, where
// rank is the 1-based final position of v among its parent's children.
void write_dump(const RecursiveTree& tree, std::ostream& os);
RecursiveTree read_dump(std::istream& is, TreeModel model);

// Canonical byte key of the sampled tree: parent sequence for NonPlane,
// (parent, sibling rank) pairs for Plane. Distinct keys <-> distinct trees.
std::string tree_key(const RecursiveTree& tree);

// Allocation-free generation for simulation: walks the same RNG stream as
// gen_* but only maintains degrees, the incremental Zagreb sum and the root
// degree. Values are accumulated in 128-bit integers.
struct SimScratch {
  std::vector<std::int32_t> deg;
  std::vector<std::int32_t> gaps;
};

struct SimStats {
  unsigned __int128 zagreb = 0;
  std::int64_t root_degree = 0;
  std::int64_t leftmost_size = 0;
};

SimStats generate_stats(TreeModel model, std::int64_t n, int k, Rng& rng,
                        SimScratch& scratch, bool want_leftmost = false);

}  // namespace zagreb
