#include "alphatree/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace alphatree {

BigInt catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan: negative index");
  BigInt c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

int env_override(int fallback) {
  if (const char* s = std::getenv("ALPHATREE_ORACLE_MAX_N")) {
    const int v = std::atoi(s);
    if (v > 0) return std::max(v, fallback);
  }
  return fallback;
}

}  // namespace

int oracle_enum_max_n() { return env_override(16); }
int oracle_opt_max_n() { return env_override(12); }
int oracle_exists_max_n() { return env_override(10); }

namespace {

// Continuation-passing enumeration over split points; nodes live in a local
// arena with stack discipline and each complete shape is materialised once.
class TreeGen {
 public:
  explicit TreeGen(const std::function<void(const CodeTree&)>& visit) : visit_(visit) {}

  void run(int n) {
    next_symbol_ = 1;
    gen(n, [&](int root) { emit(root); });
  }

 private:
  struct Raw {
    int left, right, symbol;
  };

  void gen(int leaves, const std::function<void(int)>& cont) {
    if (leaves == 1) {
      arena_.push_back({-1, -1, next_symbol_++});
      cont(static_cast<int>(arena_.size()) - 1);
      --next_symbol_;
      arena_.pop_back();
      return;
    }
    for (int left_leaves = 1; left_leaves < leaves; ++left_leaves) {
      gen(left_leaves, [&](int l) {
        gen(leaves - left_leaves, [&](int r) {
          arena_.push_back({l, r, 0});
          cont(static_cast<int>(arena_.size()) - 1);
          arena_.pop_back();
        });
      });
    }
  }

  void emit(int root) {
    CodeTree t;
    for (const Raw& raw : arena_)
      if (raw.left < 0)
        t.add_leaf(raw.symbol);
      else
        t.add_internal(raw.left, raw.right);
    t.set_root(root);
    visit_(t);
  }

  std::vector<Raw> arena_;
  int next_symbol_ = 1;
  const std::function<void(const CodeTree&)>& visit_;
};

}  // namespace

void enum_trees(int n, const std::function<void(const CodeTree&)>& visit) {
  if (n < 1 || n > oracle_enum_max_n())
    throw std::invalid_argument("enum_trees: n out of range (raise ALPHATREE_ORACLE_MAX_N?)");
  TreeGen gen(visit);
  gen.run(n);
}

std::string shape_string(const CodeTree& t) {
  std::ostringstream os;
  std::function<void(int)> rec = [&](int id) {
    const auto& nd = t.node(id);
    if (nd.is_leaf()) {
      os << '.';
      return;
    }
    os << '(';
    rec(nd.left);
    rec(nd.right);
    os << ')';
  };
  rec(t.root());
  return os.str();
}

bool brute_exists(const LengthProfile& lengths) {
  const int n = static_cast<int>(lengths.size());
  if (n < 1 || n > oracle_exists_max_n())
    throw std::invalid_argument("brute_exists: n out of range (raise ALPHATREE_ORACLE_MAX_N?)");
  int lmax = 0;
  for (int l : lengths) {
    if (l < 1) throw std::invalid_argument("brute_exists: lengths must be >= 1");
    lmax = std::max(lmax, l);
  }
  if (lmax > std::max(10, oracle_exists_max_n()))
    throw std::invalid_argument("brute_exists: max length out of range");
  // hang[i][j] = deepest level at which symbols i..j can be rooted as a
  // trie; a leaf alone can hang anywhere down to its own depth, an internal
  // split needs both halves one level deeper. Feasible iff the whole
  // sequence can hang at the root (level 0).
  std::vector<std::vector<int>> hang(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) hang[i][i] = lengths[i];
  for (int span = 2; span <= n; ++span)
    for (int i = 0; i + span - 1 < n; ++i) {
      const int j = i + span - 1;
      int best = -1;
      for (int k = i; k < j; ++k)
        best = std::max(best, std::min(hang[i][k], hang[k + 1][j]));
      hang[i][j] = best - 1;
    }
  return hang[0][n - 1] >= 0;
}

namespace {

LengthProfile depths_of(const CodeTree& t) {
  // local, validation-free depth walk for the hot oracle loops
  LengthProfile depths(t.leaf_count());
  std::vector<std::pair<int, int>> stack{{t.root(), 0}};
  while (!stack.empty()) {
    auto [id, d] = stack.back();
    stack.pop_back();
    const auto& nd = t.node(id);
    if (nd.is_leaf()) {
      depths[nd.symbol - 1] = d;
      continue;
    }
    stack.push_back({nd.right, d + 1});
    stack.push_back({nd.left, d + 1});
  }
  return depths;
}

}  // namespace

Rational tree_average_cost(const CodeTree& t, const WeightList& w) {
  const auto depths = depths_of(t);
  if (static_cast<int>(depths.size()) != w.size())
    throw std::invalid_argument("tree_average_cost: weight count mismatch");
  BigInt acc = 0;
  for (int i = 0; i < w.size(); ++i) acc += w.numerator(i) * depths[i];
  return Rational(acc, w.denominator());
}

Rational tree_minimax_cost(const CodeTree& t, const WeightList& w) {
  const auto depths = depths_of(t);
  if (static_cast<int>(depths.size()) != w.size())
    throw std::invalid_argument("tree_minimax_cost: weight count mismatch");
  BigInt best = 0;
  for (int i = 0; i < w.size(); ++i)
    best = std::max(best, BigInt(w.numerator(i) << depths[i]));
  return Rational(best, w.denominator());
}

Rational tree_maxsum_cost(const CodeTree& t, const WeightList& w) {
  if (t.leaf_count() != w.size())
    throw std::invalid_argument("tree_maxsum_cost: weight count mismatch");
  BigInt total = 0;
  std::function<BigInt(int)> rec = [&](int id) -> BigInt {
    const auto& nd = t.node(id);
    if (nd.is_leaf()) return w.numerator(nd.symbol - 1);
    const BigInt m = std::max(rec(nd.left), rec(nd.right));
    total += m;
    return m;
  };
  rec(t.root());
  return Rational(total, w.denominator());
}

namespace {

std::pair<Rational, CodeTree> brute_with(
    const WeightList& w, Rational (*fn)(const CodeTree&, const WeightList&)) {
  if (w.size() > oracle_opt_max_n())
    throw std::invalid_argument("brute_opt: n out of range (raise ALPHATREE_ORACLE_MAX_N?)");
  return brute_opt<Rational>(w.size(), [&](const CodeTree& t) { return fn(t, w); });
}

}  // namespace

std::pair<Rational, CodeTree> brute_opt_average(const WeightList& w) {
  return brute_with(w, &tree_average_cost);
}
std::pair<Rational, CodeTree> brute_opt_minimax(const WeightList& w) {
  return brute_with(w, &tree_minimax_cost);
}
std::pair<Rational, CodeTree> brute_opt_maxsum(const WeightList& w) {
  if (w.size() < 2) throw std::invalid_argument("brute_opt_maxsum: needs n >= 2");
  return brute_with(w, &tree_maxsum_cost);
}

HuffmanResult huffman(const WeightList& w) {
  if (w.size() < 2) throw std::invalid_argument("huffman: needs n >= 2");
  struct Item {
    BigInt weight;
    long id;
    int node;
  };
  auto cmp = [](const Item& a, const Item& b) {
    return a.weight > b.weight || (a.weight == b.weight && a.id > b.id);
  };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> heap(cmp);
  std::vector<std::pair<int, int>> children;  // merge tree, leaves < n
  long next_id = 0;
  for (int i = 0; i < w.size(); ++i) heap.push({w.numerator(i), next_id++, i});
  BigInt cost_num = 0;
  int root = -1;
  while (heap.size() > 1) {
    Item a = heap.top();
    heap.pop();
    Item b = heap.top();
    heap.pop();
    const BigInt merged = a.weight + b.weight;
    cost_num += merged;
    children.push_back({a.node, b.node});
    root = w.size() + static_cast<int>(children.size()) - 1;
    heap.push({merged, next_id++, root});
  }
  std::vector<int> lengths(w.size(), 0);
  std::function<void(int, int)> assign = [&](int node, int depth) {
    if (node < w.size()) {
      lengths[node] = depth;
      return;
    }
    const auto& [l, r] = children[node - w.size()];
    assign(l, depth + 1);
    assign(r, depth + 1);
  };
  assign(root, 0);
  std::sort(lengths.begin(), lengths.end());
  return {Rational(cost_num, w.denominator()), lengths};
}

bool is_valley(const WeightList& w) {
  // longest strictly decreasing prefix, then require a non-decreasing tail
  int m = 0;
  while (m + 1 < w.size() && w.numerator(m) > w.numerator(m + 1)) ++m;
  for (int i = m; i + 1 < w.size(); ++i)
    if (w.numerator(i) > w.numerator(i + 1)) return false;
  return true;
}

}  // namespace alphatree
