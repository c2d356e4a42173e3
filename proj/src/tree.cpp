#include "catpath/tree.hpp"

#include <cstdlib>
#include <random>
#include <limits>
#include <mutex>
#include <utility>

#include "catpath/catalan.hpp"

namespace catpath {

struct TreeShape::Node {
  TreeShape left_child;
  TreeShape right_child;
  std::int64_t internal = 1;
};

TreeShape::TreeShape(TreeShape left, TreeShape right) {
  auto node = std::make_shared<Node>();
  node->internal = left.internal_count() + right.internal_count() + 1;
  node->left_child = std::move(left);
  node->right_child = std::move(right);
  root_ = std::move(node);
}

const TreeShape& TreeShape::left() const {
  if (is_leaf()) throw std::domain_error("TreeShape: leaf has no children");
  return root_->left_child;
}

const TreeShape& TreeShape::right() const {
  if (is_leaf()) throw std::domain_error("TreeShape: leaf has no children");
  return root_->right_child;
}

std::int64_t TreeShape::internal_count() const {
  return root_ ? root_->internal : 0;
}

bool TreeShape::operator==(const TreeShape& other) const {
  std::vector<std::pair<const TreeShape*, const TreeShape*>> stack;
  stack.push_back({this, &other});
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x->root_ == y->root_) continue;  // shared structure or both leaves
    if (x->is_leaf() || y->is_leaf()) return false;
    if (x->internal_count() != y->internal_count()) return false;
    stack.push_back({&x->left(), &y->left()});
    stack.push_back({&x->right(), &y->right()});
  }
  return true;
}

std::string encode_parens(const TreeShape& t) {
  std::string out;
  out.reserve(static_cast<std::size_t>(2 * t.internal_count() + 1));
  std::vector<const TreeShape*> stack{&t};
  while (!stack.empty()) {
    const TreeShape* cur = stack.back();
    stack.pop_back();
    if (cur->is_leaf()) {
      out += ')';
    } else {
      out += '(';
      stack.push_back(&cur->right());
      stack.push_back(&cur->left());
    }
  }
  return out;
}

TreeShape decode_parens(std::string_view s) {
  std::size_t pos = 0;
  std::vector<int> work{0};  // 0 = parse one tree, 1 = join the last two
  std::vector<TreeShape> out;
  while (!work.empty()) {
    const int phase = work.back();
    work.pop_back();
    if (phase == 1) {
      TreeShape right = std::move(out.back());
      out.pop_back();
      TreeShape left = std::move(out.back());
      out.pop_back();
      out.emplace_back(std::move(left), std::move(right));
      continue;
    }
    if (pos >= s.size())
      throw std::domain_error("decode_parens: truncated input");
    const char c = s[pos++];
    if (c == ')') {
      out.emplace_back();
    } else if (c == '(') {
      work.push_back(1);
      work.push_back(0);
      work.push_back(0);
    } else {
      throw std::domain_error(std::string("decode_parens: unexpected '") + c +
                              "' at position " + std::to_string(pos - 1));
    }
  }
  if (pos != s.size())
    throw std::domain_error("decode_parens: trailing input after tree");
  return out.back();
}

namespace {

std::int64_t env_enumeration_bound() {
  if (const char* v = std::getenv("CATALAN_PATHS_ENUM_BOUND")) {
    char* end = nullptr;
    const long long parsed = std::strtoll(v, &end, 10);
    if (end && *end == '\0' && parsed >= 0) return parsed;
  }
  return 16;
}

// Whole levels are cached only up to this size; larger trees are streamed by
// composing cached sub-levels (same Segner decomposition, same order).
constexpr std::int64_t kLevelCacheMax = 12;

std::mutex& level_mutex() {
  static std::mutex m;
  return m;
}

const std::vector<TreeShape>& cached_level(std::int64_t n) {
  static std::vector<std::vector<TreeShape>>* cache = [] {
    auto* c = new std::vector<std::vector<TreeShape>>;
    c->reserve(static_cast<std::size_t>(kLevelCacheMax) + 1);
    return c;
  }();
  std::lock_guard<std::mutex> lock(level_mutex());
  while (static_cast<std::int64_t>(cache->size()) <= n) {
    const std::int64_t k = static_cast<std::int64_t>(cache->size());
    std::vector<TreeShape> level;
    if (k == 0) {
      level.emplace_back();
    } else {
      for (std::int64_t a = 0; a < k; ++a)
        for (const TreeShape& l : (*cache)[static_cast<std::size_t>(a)])
          for (const TreeShape& r :
               (*cache)[static_cast<std::size_t>(k - 1 - a)])
            level.emplace_back(l, r);
    }
    cache->push_back(std::move(level));
  }
  return (*cache)[static_cast<std::size_t>(n)];
}

void emit_trees(std::int64_t n,
                const std::function<void(const TreeShape&)>& fn) {
  if (n <= kLevelCacheMax) {
    for (const TreeShape& t : cached_level(n)) fn(t);
    return;
  }
  for (std::int64_t a = 0; a < n; ++a) {
    emit_trees(a, [&](const TreeShape& l) {
      emit_trees(n - 1 - a,
                 [&](const TreeShape& r) { fn(TreeShape(l, r)); });
    });
  }
}

void check_enumeration_request(std::int64_t n, std::int64_t bound,
                               const char* what) {
  if (n < 0)
    throw std::domain_error(std::string(what) + ": negative n " +
                            std::to_string(n));
  if (n > bound)
    throw bound_error(std::string(what) + ": n=" + std::to_string(n) +
                      " exceeds the enumeration bound " +
                      std::to_string(bound));
}

// One pass collecting leaf depths (left to right) and the depths of internal
// vertices in in-order. The k-th in-order internal vertex (0-based) is the
// highest common ancestor of leaves k and k+1, which makes window minima over
// `internal_d` yield leaf-pair path lengths.
void scan_tree(const TreeShape& t, std::vector<std::int64_t>& leaf_d,
               std::vector<std::int64_t>& internal_d) {
  leaf_d.clear();
  internal_d.clear();
  struct Item {
    const TreeShape* node;
    std::int64_t depth;  // internal vertices strictly above
    bool emit;           // true: record this internal vertex, already visited
  };
  std::vector<Item> stack;
  stack.push_back({&t, 0, false});
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    if (it.emit) {
      internal_d.push_back(it.depth);
      continue;
    }
    if (it.node->is_leaf()) {
      leaf_d.push_back(it.depth);
      continue;
    }
    stack.push_back({&it.node->right(), it.depth + 1, false});
    stack.push_back({it.node, it.depth + 1, true});
    stack.push_back({&it.node->left(), it.depth + 1, false});
  }
}

std::int64_t descend_depth(const TreeShape& subtree, std::int64_t leaf_index) {
  const TreeShape* cur = &subtree;
  std::int64_t d = 0;
  while (!cur->is_leaf()) {
    ++d;
    const std::int64_t lf = cur->left().leaf_count();
    if (leaf_index <= lf) {
      cur = &cur->left();
    } else {
      leaf_index -= lf;
      cur = &cur->right();
    }
  }
  return d;
}

}  // namespace

std::int64_t default_enumeration_bound() {
  static const std::int64_t bound = env_enumeration_bound();
  return bound;
}

std::int64_t default_pair_bound() { return 12; }

void for_each_tree(std::int64_t n,
                   const std::function<void(const TreeShape&)>& fn,
                   std::int64_t bound) {
  check_enumeration_request(n, bound, "for_each_tree");
  emit_trees(n, fn);
}

std::vector<TreeShape> enumerate_trees(std::int64_t n, std::int64_t bound) {
  check_enumeration_request(n, bound, "enumerate_trees");
  std::vector<TreeShape> out;
  emit_trees(n, [&](const TreeShape& t) { out.push_back(t); });
  return out;
}

std::vector<std::int64_t> leaf_depths(const TreeShape& t) {
  std::vector<std::int64_t> leaf_d, internal_d;
  scan_tree(t, leaf_d, internal_d);
  return leaf_d;
}

std::int64_t path_length(const TreeShape& t, std::int64_t a, std::int64_t b) {
  const std::int64_t leaves = t.leaf_count();
  if (a < 1 || a >= b || b > leaves)
    throw std::domain_error("path_length: need 1 <= a < b <= " +
                            std::to_string(leaves) + ", got a=" +
                            std::to_string(a) + " b=" + std::to_string(b));
  const TreeShape* cur = &t;
  std::int64_t aa = a, bb = b, lca_depth = 0;
  while (true) {
    ++lca_depth;  // cur is internal and lies on both root paths
    const std::int64_t lf = cur->left().leaf_count();
    if (bb <= lf) {
      cur = &cur->left();
    } else if (aa > lf) {
      aa -= lf;
      bb -= lf;
      cur = &cur->right();
    } else {
      break;  // a in the left subtree, b in the right: cur is the LCA
    }
  }
  const std::int64_t depth_a = lca_depth + descend_depth(cur->left(), aa);
  const std::int64_t depth_b =
      lca_depth + descend_depth(cur->right(), bb - cur->left().leaf_count());
  return depth_a + depth_b - 2 * lca_depth + 1;
}

std::vector<Int> oracle_depth_sums(std::int64_t n, std::int64_t bound) {
  check_enumeration_request(n, bound, "oracle_depth_sums");
  std::vector<std::int64_t> sums(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::int64_t> leaf_d, internal_d;
  for_each_tree(
      n,
      [&](const TreeShape& t) {
        scan_tree(t, leaf_d, internal_d);
        for (std::size_t i = 0; i < sums.size(); ++i) sums[i] += leaf_d[i];
      },
      bound);
  return std::vector<Int>(sums.begin(), sums.end());
}

Int oracle_depth_sum(std::int64_t m, std::int64_t n, std::int64_t bound) {
  if (m < 1 || m > n + 1)
    throw std::domain_error("oracle_depth_sum: leaf index m=" +
                            std::to_string(m) + " not in [1, " +
                            std::to_string(n + 1) + "]");
  return oracle_depth_sums(n, bound)[static_cast<std::size_t>(m - 1)];
}

std::vector<PathStats> oracle_path_stats_all(std::int64_t n,
                                             std::int64_t bound) {
  check_enumeration_request(n, bound, "oracle_path_stats");
  const std::size_t nr = static_cast<std::size_t>(n);
  std::vector<std::int64_t> sums(nr, 0), counts(nr, 0);
  std::vector<std::int64_t> leaf_d, internal_d;
  for_each_tree(
      n,
      [&](const TreeShape& t) {
        scan_tree(t, leaf_d, internal_d);
        for (std::int64_t i = 0; i <= n; ++i) {
          std::int64_t lca = std::numeric_limits<std::int64_t>::max();
          for (std::int64_t j = i + 1; j <= n; ++j) {
            lca = std::min(lca, internal_d[static_cast<std::size_t>(j - 1)]);
            const std::size_t r = static_cast<std::size_t>(j - i);
            sums[r - 1] += leaf_d[static_cast<std::size_t>(i)] +
                           leaf_d[static_cast<std::size_t>(j)] - 2 * lca + 1;
            counts[r - 1] += 1;
          }
        }
      },
      bound);
  std::vector<PathStats> out(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    out[i].n = n;
    out[i].r = static_cast<std::int64_t>(i) + 1;
    out[i].sum = sums[i];
    out[i].count = counts[i];
    out[i].avg = counts[i] > 0 ? make_rat(out[i].sum, out[i].count) : Rat(0);
  }
  return out;
}

PathStats oracle_path_stats(std::int64_t n, std::int64_t r,
                            std::int64_t bound) {
  if (n < 0)
    throw std::domain_error("oracle_path_stats: negative n");
  if (r < 1 || r > n + 1)
    throw std::domain_error("oracle_path_stats: separation r=" +
                            std::to_string(r) + " not in [1, " +
                            std::to_string(n + 1) + "]");
  if (r == n + 1) {
    // no leaf pair has separation n+1; zero-sum stats, not an error
    return PathStats{n, r, Int(0), Int(0), Rat(0)};
  }
  check_enumeration_request(n, bound, "oracle_path_stats");
  std::int64_t sum = 0, count = 0;
  std::vector<std::int64_t> leaf_d, internal_d;
  for_each_tree(
      n,
      [&](const TreeShape& t) {
        scan_tree(t, leaf_d, internal_d);
        for (std::int64_t i = 0; i + r <= n; ++i) {
          std::int64_t lca = std::numeric_limits<std::int64_t>::max();
          for (std::int64_t k = i; k < i + r; ++k)
            lca = std::min(lca, internal_d[static_cast<std::size_t>(k)]);
          sum += leaf_d[static_cast<std::size_t>(i)] +
                 leaf_d[static_cast<std::size_t>(i + r)] - 2 * lca + 1;
          count += 1;
        }
      },
      bound);
  PathStats out;
  out.n = n;
  out.r = r;
  out.sum = sum;
  out.count = count;
  out.avg = count > 0 ? make_rat(out.sum, out.count) : Rat(0);
  return out;
}

namespace {

// Uniform big integers below a bound by mask-and-reject over mt19937_64
// words. The standard pins down mt19937_64 exactly, so a seed reproduces the
// same tree everywhere.
struct UniformBits {
  std::mt19937_64 rng;
  std::vector<std::uint64_t> buf;
  explicit UniformBits(std::uint64_t seed) : rng(seed) {}

  Int below(const Int& bound) {
    const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    const std::size_t words = (bits + 63) / 64;
    const unsigned top = bits % 64;
    buf.resize(words);
    Int draw;
    do {
      for (std::uint64_t& w : buf) w = rng();
      if (top != 0) buf.back() &= (std::uint64_t{1} << top) - 1;
      mpz_import(draw.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0,
                 buf.data());
    } while (draw >= bound);  // acceptance chance is at least one half
    return draw;
  }
};

}  // namespace

TreeShape sample_random_tree(std::int64_t n, std::uint64_t seed) {
  if (n < 0) throw std::domain_error("sample_random_tree: negative n");
  CatalanTable table(n);
  UniformBits rng(seed);

  std::vector<std::pair<std::int64_t, int>> work;  // (size, 0=expand 1=join)
  std::vector<TreeShape> out;
  work.push_back({n, 0});
  Int acc;
  while (!work.empty()) {
    const auto [k, phase] = work.back();
    work.pop_back();
    if (phase == 1) {
      TreeShape right = std::move(out.back());
      out.pop_back();
      TreeShape left = std::move(out.back());
      out.pop_back();
      out.emplace_back(std::move(left), std::move(right));
      continue;
    }
    if (k == 0) {
      out.emplace_back();
      continue;
    }
    // left size a with weight C_a C_{k-1-a}; prefix walk over a uniform draw
    const Int draw = rng.below(table.at(k));
    std::int64_t a = 0;
    acc = 0;
    for (;; ++a) {
      acc += table.at(a) * table.at(k - 1 - a);
      if (acc > draw) break;
    }
    work.push_back({k, 1});
    work.push_back({k - 1 - a, 0});
    work.push_back({a, 0});
  }
  return out.back();
}

}  // namespace catpath
