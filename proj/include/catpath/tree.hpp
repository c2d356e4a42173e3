#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "catpath/exact.hpp"

namespace catpath {

/// Ordered full binary tree: every internal vertex has exactly two children
/// and left/right order matters. A default-constructed TreeShape is the
/// single-leaf tree (zero internal vertices). Copies share structure.
class TreeShape {
 public:
  TreeShape() = default;  // single leaf
  TreeShape(TreeShape left, TreeShape right);

  bool is_leaf() const { return root_ == nullptr; }
  const TreeShape& left() const;
  const TreeShape& right() const;

  std::int64_t internal_count() const;
  std::int64_t leaf_count() const { return internal_count() + 1; }

  bool operator==(const TreeShape& other) const;

 private:
  struct Node;
  std::shared_ptr<const Node> root_;
};

/// Text codec: '(' descends into an internal vertex (left subtree first),
/// ')' marks a leaf. Grammar:  tree := ')' | '(' tree tree
/// A tree with n internal vertices encodes to n '(' followed-by-structure
/// and n+1 ')' characters (length 2n+1). decode rejects malformed or
/// trailing input with a domain error.
std::string encode_parens(const TreeShape& t);
TreeShape decode_parens(std::string_view s);

/// Default cap for exhaustive enumeration (trees visited once each).
/// Overridable with the CATALAN_PATHS_ENUM_BOUND environment variable.
std::int64_t default_enumeration_bound();

/// Default cap for the all-pairs path-length oracle, which touches every
/// leaf pair of every tree.
std::int64_t default_pair_bound();

/// Visits every tree with n internal vertices exactly once, ordered by
/// left-subtree size ascending, then recursively (left rank major, right
/// rank minor). Exactly C_n trees. n beyond `bound` is a resource error.
void for_each_tree(std::int64_t n, const std::function<void(const TreeShape&)>& fn,
                   std::int64_t bound = default_enumeration_bound());

std::vector<TreeShape> enumerate_trees(
    std::int64_t n, std::int64_t bound = default_enumeration_bound());

/// Depths of leaves 1..n+1 left to right; the depth of a leaf counts the
/// internal vertices on its path to the root, root included.
std::vector<std::int64_t> leaf_depths(const TreeShape& t);

/// Number of internal vertices on the unique path between leaves a and b
/// (1-based, a < b), highest common ancestor included. Computed from the two
/// root-to-leaf vertex lists: len(a) + len(b) - 2*common + 1.
std::int64_t path_length(const TreeShape& t, std::int64_t a, std::int64_t b);

/// D_{m,n}: depth of leaf m summed over all C_n trees, by enumeration.
Int oracle_depth_sum(std::int64_t m, std::int64_t n,
                     std::int64_t bound = default_enumeration_bound());

/// All of D_{1,n}..D_{n+1,n} in a single sweep.
std::vector<Int> oracle_depth_sums(
    std::int64_t n, std::int64_t bound = default_enumeration_bound());

/// Aggregated path statistics at leaf separation r over all C_n trees.
struct PathStats {
  std::int64_t n = 0;
  std::int64_t r = 0;
  Int sum;    // S_n(r)
  Int count;  // (tree, leaf-pair) instances = (n+1-r) C_n
  Rat avg;    // A_n(r) = sum / count (0 when count is 0)
};

/// Sums path_length over all trees and all leaf pairs (m, m+r).
/// r in [1, n] is the normal domain; r = n+1 yields empty stats (no pairs);
/// anything else is a domain error.
PathStats oracle_path_stats(std::int64_t n, std::int64_t r,
                            std::int64_t bound = default_pair_bound());

/// PathStats for every r = 1..n in one enumeration pass.
std::vector<PathStats> oracle_path_stats_all(
    std::int64_t n, std::int64_t bound = default_pair_bound());

/// Uniform sample over the C_n shapes by exact-weight sequential
/// construction: each split chooses the left-subtree size a with probability
/// C_a C_{n-1-a} / C_n. Deterministic for a given seed.
TreeShape sample_random_tree(std::int64_t n, std::uint64_t seed);

}  // namespace catpath
