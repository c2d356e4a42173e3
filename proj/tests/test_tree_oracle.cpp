#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "catpath/catalan.hpp"
#include "catpath/tree.hpp"

using namespace catpath;

namespace {

// Independent path oracle: flatten the tree into an adjacency list and BFS
// between the two leaves, counting internal vertices on the path. Shares no
// logic with the library's LCA route.
struct FlatTree {
  std::vector<std::vector<int>> adj;
  std::map<std::int64_t, int> leaf_vertex;  // 1-based leaf index -> vertex
  std::vector<bool> is_internal;

  explicit FlatTree(const TreeShape& t) {
    std::int64_t next_leaf = 1;
    build(t, -1, next_leaf);
  }

  int build(const TreeShape& t, int parent, std::int64_t& next_leaf) {
    const int id = static_cast<int>(adj.size());
    adj.emplace_back();
    is_internal.push_back(!t.is_leaf());
    if (parent >= 0) {
      adj[static_cast<std::size_t>(id)].push_back(parent);
      adj[static_cast<std::size_t>(parent)].push_back(id);
    }
    if (t.is_leaf()) {
      leaf_vertex[next_leaf++] = id;
    } else {
      build(t.left(), id, next_leaf);
      build(t.right(), id, next_leaf);
    }
    return id;
  }

  std::int64_t bfs_path_internal_count(std::int64_t a, std::int64_t b) const {
    const int start = leaf_vertex.at(a), goal = leaf_vertex.at(b);
    std::vector<int> prev(adj.size(), -2);
    std::queue<int> q;
    q.push(start);
    prev[static_cast<std::size_t>(start)] = -1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      if (v == goal) break;
      for (int w : adj[static_cast<std::size_t>(v)])
        if (prev[static_cast<std::size_t>(w)] == -2) {
          prev[static_cast<std::size_t>(w)] = v;
          q.push(w);
        }
    }
    std::int64_t internals = 0;
    for (int v = goal; v != -1; v = prev[static_cast<std::size_t>(v)])
      if (is_internal[static_cast<std::size_t>(v)]) ++internals;
    return internals;
  }
};

TreeShape comb_left(std::int64_t n) {
  TreeShape t;
  for (std::int64_t i = 0; i < n; ++i) t = TreeShape(t, TreeShape());
  return t;
}

}  // namespace

TEST_CASE("basic shape properties") {
  TreeShape leaf;
  CHECK(leaf.is_leaf());
  CHECK(leaf.internal_count() == 0);
  CHECK(leaf.leaf_count() == 1);
  CHECK_THROWS_AS(leaf.left(), std::domain_error);

  TreeShape cherry(TreeShape{}, TreeShape{});
  CHECK(cherry.internal_count() == 1);
  CHECK(cherry.leaf_count() == 2);
  CHECK(cherry.left().is_leaf());
  CHECK(cherry == TreeShape(TreeShape{}, TreeShape{}));
  CHECK_FALSE(cherry == leaf);
}

TEST_CASE("enumeration counts match Catalan numbers") {
  for (std::int64_t n = 0; n <= 12; ++n) {
    std::int64_t count = 0;
    for_each_tree(n, [&](const TreeShape& t) {
      ++count;
      if (count == 1) {  // spot-check fullness on the first tree
        CHECK(t.internal_count() == n);
        CHECK(t.leaf_count() == n + 1);
      }
    });
    CHECK(Int(count) == catalan(n));
  }
}

TEST_CASE("enumeration order is deterministic, left size ascending") {
  std::vector<std::string> n2;
  for (const TreeShape& t : enumerate_trees(2)) n2.push_back(encode_parens(t));
  CHECK(n2 == std::vector<std::string>{"()())", "(()))"});

  const auto n3 = enumerate_trees(3);
  CHECK(n3.size() == 5);
  CHECK(encode_parens(n3.front()) == "()()())");
  CHECK(encode_parens(n3.back()) == "((())))");

  std::set<std::string> distinct;
  for (const TreeShape& t : n3) distinct.insert(encode_parens(t));
  CHECK(distinct.size() == 5);
}

TEST_CASE("enumeration bound is a resource error") {
  CHECK_THROWS_AS(enumerate_trees(17), bound_error);
  CHECK_THROWS_AS(for_each_tree(13, [](const TreeShape&) {}, 12),
                  bound_error);
  CHECK_THROWS_AS(enumerate_trees(-1), std::domain_error);
}

TEST_CASE("leaf depths") {
  CHECK(leaf_depths(TreeShape{}) == std::vector<std::int64_t>{0});
  CHECK(leaf_depths(TreeShape(TreeShape{}, TreeShape{})) ==
        std::vector<std::int64_t>{1, 1});
  // left-comb with two internal vertices: deepest pair on the left
  CHECK(leaf_depths(comb_left(2)) == std::vector<std::int64_t>{2, 2, 1});
  CHECK(leaf_depths(decode_parens("()())")) ==
        std::vector<std::int64_t>{1, 2, 2});
}

TEST_CASE("path_length basics") {
  const TreeShape cherry(TreeShape{}, TreeShape{});
  CHECK(path_length(cherry, 1, 2) == 1);
  for (const TreeShape& t : enumerate_trees(2))
    CHECK(path_length(t, 1, 3) == 2);
  CHECK_THROWS_AS(path_length(cherry, 2, 1), std::domain_error);
  CHECK_THROWS_AS(path_length(cherry, 1, 1), std::domain_error);
  CHECK_THROWS_AS(path_length(cherry, 1, 3), std::domain_error);
}

TEST_CASE("path_length agrees with a direct graph walk") {
  for (std::int64_t n = 1; n <= 7; ++n) {
    for (const TreeShape& t : enumerate_trees(n)) {
      const FlatTree flat(t);
      for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t b = a + 1; b <= n + 1; ++b)
          CHECK(path_length(t, a, b) == flat.bfs_path_internal_count(a, b));
    }
  }
}

TEST_CASE("sixteen-leaf fixture carries a separation-6 pair of length 6") {
  // left: a 5-vertex comb; right: a 9-vertex subtree whose 5th leaf sits
  // two bifurcations deep. Leaves 5 and 11 then span the root.
  const std::string fixture = "(((((())))))(((())))(())((())))";
  const TreeShape t = decode_parens(fixture);
  CHECK(t.internal_count() == 15);
  CHECK(t.leaf_count() == 16);
  const auto depths = leaf_depths(t);
  CHECK(depths[4] == 3);   // leaf 5
  CHECK(depths[10] == 4);  // leaf 11
  CHECK(11 - 5 == 6);
  CHECK(path_length(t, 5, 11) == 6);
  CHECK(encode_parens(t) == fixture);
}

TEST_CASE("oracle depth sums") {
  CHECK(oracle_depth_sum(1, 1) == 1);
  CHECK(oracle_depth_sum(2, 2) == 4);
  CHECK(oracle_depth_sum(1, 3) == 9);
  CHECK(oracle_depth_sum(1, 3) == catalan(4) - catalan(3));
  CHECK_THROWS_AS(oracle_depth_sum(0, 3), std::domain_error);
  CHECK_THROWS_AS(oracle_depth_sum(5, 3), std::domain_error);
}

TEST_CASE("depth sums are mirror symmetric") {
  for (std::int64_t n = 0; n <= 8; ++n) {
    const auto sums = oracle_depth_sums(n);
    for (std::int64_t m = 1; m <= n + 1; ++m)
      CHECK(sums[static_cast<std::size_t>(m - 1)] ==
            sums[static_cast<std::size_t>(n + 1 - m)]);
  }
}

namespace {
TreeShape mirrored(const TreeShape& t) {
  if (t.is_leaf()) return t;
  return TreeShape(mirrored(t.right()), mirrored(t.left()));
}
}  // namespace

TEST_CASE("total leaf depth is invariant under mirroring each tree") {
  for (std::int64_t n = 0; n <= 7; ++n)
    for (const TreeShape& t : enumerate_trees(n)) {
      const auto d = leaf_depths(t);
      auto dm = leaf_depths(mirrored(t));
      std::int64_t total = 0, total_m = 0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        total += d[i];
        total_m += dm[i];
      }
      CHECK(total == total_m);
      // mirroring reverses the depth profile exactly
      std::reverse(dm.begin(), dm.end());
      CHECK(d == dm);
    }
}

TEST_CASE("oracle path stats examples") {
  const PathStats s22 = oracle_path_stats(2, 2);
  CHECK(s22.sum == 4);
  CHECK(s22.count == 2);
  CHECK(s22.avg == Rat(2));

  const PathStats s31 = oracle_path_stats(3, 1);
  CHECK(s31.sum == 27);
  CHECK(s31.count == 15);
  CHECK(s31.avg == make_rat(9, 5));

  const PathStats s11 = oracle_path_stats(1, 1);
  CHECK(s11.sum == 1);
  CHECK(s11.count == 1);
  CHECK(s11.avg == Rat(1));

  const PathStats empty = oracle_path_stats(4, 5);
  CHECK(empty.sum == 0);
  CHECK(empty.count == 0);

  CHECK_THROWS_AS(oracle_path_stats(4, 6), std::domain_error);
  CHECK_THROWS_AS(oracle_path_stats(4, 0), std::domain_error);
  CHECK_THROWS_AS(oracle_path_stats(13, 1), bound_error);
}

TEST_CASE("aggregated stats match per-pair path_length calls") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    std::vector<Int> sums(static_cast<std::size_t>(n), Int(0));
    std::vector<Int> counts(static_cast<std::size_t>(n), Int(0));
    for (const TreeShape& t : enumerate_trees(n))
      for (std::int64_t a = 1; a <= n; ++a)
        for (std::int64_t b = a + 1; b <= n + 1; ++b) {
          sums[static_cast<std::size_t>(b - a - 1)] += path_length(t, a, b);
          counts[static_cast<std::size_t>(b - a - 1)] += 1;
        }
    const auto stats = oracle_path_stats_all(n);
    REQUIRE(stats.size() == static_cast<std::size_t>(n));
    for (std::int64_t r = 1; r <= n; ++r) {
      CHECK(stats[static_cast<std::size_t>(r - 1)].sum ==
            sums[static_cast<std::size_t>(r - 1)]);
      CHECK(stats[static_cast<std::size_t>(r - 1)].count ==
            counts[static_cast<std::size_t>(r - 1)]);
    }
  }
}

TEST_CASE("pair counts match (n+1-r) C_n up to 10") {
  for (std::int64_t n = 1; n <= 10; ++n)
    for (const PathStats& s : oracle_path_stats_all(n))
      CHECK(s.count == (n + 1 - s.r) * catalan(n));
}

TEST_CASE("codec round trip and rejection") {
  for (std::int64_t n = 0; n <= 6; ++n)
    for (const TreeShape& t : enumerate_trees(n)) {
      const std::string enc = encode_parens(t);
      CHECK(enc.size() == static_cast<std::size_t>(2 * n + 1));
      CHECK(decode_parens(enc) == t);
    }
  CHECK(encode_parens(TreeShape{}) == ")");
  CHECK_THROWS_AS(decode_parens(""), std::domain_error);
  CHECK_THROWS_AS(decode_parens("("), std::domain_error);
  CHECK_THROWS_AS(decode_parens("()"), std::domain_error);
  CHECK_THROWS_AS(decode_parens("))"), std::domain_error);
  CHECK_THROWS_AS(decode_parens("())x"), std::domain_error);
  CHECK_THROWS_AS(decode_parens("x"), std::domain_error);
}

TEST_CASE("random sampling degenerate cases and determinism") {
  CHECK(sample_random_tree(0, 7).is_leaf());
  CHECK(sample_random_tree(1, 99) == TreeShape(TreeShape{}, TreeShape{}));
  for (std::uint64_t seed : {0ull, 1ull, 123456789ull}) {
    const TreeShape a = sample_random_tree(9, seed);
    const TreeShape b = sample_random_tree(9, seed);
    CHECK(a == b);
    CHECK(a.internal_count() == 9);
  }
}

TEST_CASE("random sampling is uniform over the five 3-vertex shapes") {
  std::map<std::string, std::int64_t> freq;
  const std::int64_t trials = 100000;
  for (std::int64_t seed = 0; seed < trials; ++seed)
    freq[encode_parens(
        sample_random_tree(3, static_cast<std::uint64_t>(seed)))]++;
  REQUIRE(freq.size() == 5);
  // five-sigma window around trials/5 for a Bin(trials, 1/5) count
  const double sigma = std::sqrt(trials * 0.2 * 0.8);
  for (const auto& [shape, count] : freq) {
    CAPTURE(shape);
    CHECK(std::abs(static_cast<double>(count) - trials / 5.0) < 5 * sigma);
  }
}
