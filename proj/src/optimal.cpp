#include "alphatree/optimal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "alphatree/existence.hpp"

namespace alphatree {

std::pair<int, int> DPTables::search_interval(int i, int j) const {
  if (i < 1 || j > n || i >= j) throw std::invalid_argument("search_interval: bad cell");
  if (j == i + 1) return {i, i};
  return {root[i][j - 1], root[i + 1][j]};
}

namespace {

std::vector<BigInt> prefix_sums(const WeightList& w) {
  std::vector<BigInt> pre(w.size() + 1, 0);
  for (int i = 1; i <= w.size(); ++i) pre[i] = pre[i - 1] + w.numerator(i - 1);
  return pre;
}

DPTables init_tables(const WeightList& w) {
  const int n = w.size();
  DPTables t;
  t.n = n;
  t.den = w.denominator();
  t.cost_num.assign(n + 1, std::vector<BigInt>(n + 1, 0));
  t.root.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i < n; ++i) {
    t.cost_num[i][i + 1] = w.numerator(i - 1) + w.numerator(i);
    t.root[i][i + 1] = i;
  }
  return t;
}

// Shared diagonal sweep; the per-cell split range is what differs between
// the full and the restricted search.
template <class RangeFn>
DPTables run_dp(const WeightList& w, Exec exec, const RangeFn& range) {
  const int n = w.size();
  if (n < 2) throw std::invalid_argument("optimal constructors need n >= 2");
  const auto pre = prefix_sums(w);
  DPTables t = init_tables(w);
  std::vector<long long> iters(n + 1, 0);
  for (int span = 2; span < n; ++span) {
    // cells on one diagonal only read the two previous diagonals
    const int cells = n - span;
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel && cells >= 16)
    for (int i = 1; i <= cells; ++i) {
      const int j = i + span;
      const auto [klo, khi] = range(t, i, j);
      BigInt best;
      int best_k = -1;
      for (int k = klo; k <= khi; ++k) {
        BigInt c = t.cost_num[i][k] + t.cost_num[k + 1][j];
        ++iters[i];
        if (best_k < 0 || c < best) {
          best = std::move(c);
          best_k = k;
        }
      }
      t.cost_num[i][j] = pre[j] - pre[i - 1] + best;
      t.root[i][j] = best_k;
    }
  }
  for (long long v : iters) t.split_candidates += v;
  t.split_candidates += n - 1;  // the j = i+1 base cells
  return t;
}

}  // namespace

CodeTree reconstruct_from_roots(const DPTables& t) {
  if (t.n < 2) throw std::invalid_argument("reconstruct_from_roots: need n >= 2");
  CodeTree tree;
  std::function<int(int, int)> build = [&](int i, int j) -> int {
    if (i == j) return tree.add_leaf(i);
    if (i > j || i < 1 || j > t.n)
      throw std::invalid_argument("reconstruct_from_roots: malformed tables");
    const int k = t.root[i][j];
    if (k < i || k >= j)
      throw std::invalid_argument("reconstruct_from_roots: root index out of range");
    const int l = build(i, k);
    const int r = build(k + 1, j);
    return tree.add_internal(l, r);
  };
  tree.set_root(build(1, t.n));
  tree.validate();
  return tree;
}

DPResult gilbert_moore_dp(const WeightList& w, Exec exec) {
  DPTables t = run_dp(w, exec, [](const DPTables&, int i, int j) {
    return std::pair<int, int>{i, j - 1};
  });
  CodeTree tree = reconstruct_from_roots(t);
  Rational cost = t.cost(1, t.n);
  return {std::move(t), std::move(tree), std::move(cost)};
}

DPResult knuth_dp(const WeightList& w, Exec exec) {
  DPTables t = run_dp(w, exec, [](const DPTables& tt, int i, int j) {
    return tt.search_interval(i, j);
  });
  CodeTree tree = reconstruct_from_roots(t);
  Rational cost = t.cost(1, t.n);
  return {std::move(t), std::move(tree), std::move(cost)};
}

// ---------------------------------------------------------------------------
// Phase-1 working list shared by the two merge algorithms.

namespace {

struct WorkItem {
  BigInt weight;
  bool is_leaf;
  int node;  // index into the parent-link forest below
};

struct Forest {
  // intermediate (possibly unordered) tree; only its depths are consumed
  std::vector<int> parent;
  std::vector<int> symbol_of;  // leaf nodes only

  int add_leaf(int symbol) {
    parent.push_back(-1);
    symbol_of.push_back(symbol);
    return static_cast<int>(parent.size()) - 1;
  }
  int add_join(int a, int b) {
    parent.push_back(-1);
    symbol_of.push_back(0);
    const int id = static_cast<int>(parent.size()) - 1;
    parent[a] = id;
    parent[b] = id;
    return id;
  }
  LengthProfile symbol_depths(int n) const {
    LengthProfile depths(n, 0);
    for (size_t v = 0; v < parent.size(); ++v) {
      if (symbol_of[v] == 0) continue;
      int d = 0;
      for (int u = static_cast<int>(v); parent[u] >= 0; u = parent[u]) ++d;
      depths[symbol_of[v] - 1] = d;
    }
    return depths;
  }
};

BigInt list_total(const std::vector<WorkItem>& list) {
  BigInt s = 0;
  for (const auto& it : list) s += it.weight;
  return s;
}

LevelResult finish_from_levels(const WeightList& w, LengthProfile levels,
                               std::vector<MergeStep> steps) {
  auto cb = leftmost_fit(levels);
  if (!cb)
    throw std::logic_error("phase 2: intermediate-tree levels are infeasible");
  LevelResult res;
  res.levels = std::move(levels);
  res.tree = codebook_to_tree(*cb);
  res.cost = average_length(res.levels, w);
  res.steps = std::move(steps);
  return res;
}

}  // namespace

LevelResult hu_tucker(const WeightList& w) {
  const int n = w.size();
  if (n < 2) throw std::invalid_argument("hu_tucker: needs n >= 2");
  Forest forest;
  std::vector<WorkItem> list;
  for (int i = 0; i < n; ++i)
    list.push_back({w.numerator(i), true, forest.add_leaf(i + 1)});
  std::vector<MergeStep> steps;

  while (list.size() > 1) {
    const int m = static_cast<int>(list.size());
    // A pair is joinable iff no *leaf* lies strictly between its members, so
    // candidates live inside maximal windows bounded by consecutive leaves.
    // Within a window the minimal-sum pair is the two smallest entries with
    // the leftmost-position bias.
    int best_a = -1, best_b = -1;
    BigInt best_sum;
    auto consider_window = [&](int lo, int hi) {
      if (hi - lo < 1) return;
      int a = lo;
      for (int p = lo + 1; p <= hi; ++p)
        if (list[p].weight < list[a].weight) a = p;
      int b = -1;
      for (int p = lo; p <= hi; ++p) {
        if (p == a) continue;
        if (b < 0 || list[p].weight < list[b].weight) b = p;
      }
      const int x = std::min(a, b), y = std::max(a, b);
      BigInt sum = list[x].weight + list[y].weight;
      if (best_a < 0 || sum < best_sum ||
          (sum == best_sum && (x < best_a || (x == best_a && y < best_b)))) {
        best_sum = std::move(sum);
        best_a = x;
        best_b = y;
      }
    };
    int window_start = 0;
    for (int p = 0; p < m; ++p) {
      if (!list[p].is_leaf) continue;
      consider_window(window_start, p);
      window_start = p;
    }
    consider_window(window_start, m - 1);

    steps.push_back({best_a + 1, best_b + 1, Rational(list[best_a].weight, w.denominator()),
                     Rational(list[best_b].weight, w.denominator()), best_a + 1, false,
                     Rational(0)});
    const int joined = forest.add_join(list[best_a].node, list[best_b].node);
    list[best_a] = {list[best_a].weight + list[best_b].weight, false, joined};
    list.erase(list.begin() + best_b);
    steps.back().list_total = Rational(list_total(list), w.denominator());
  }
  return finish_from_levels(w, forest.symbol_depths(n), std::move(steps));
}

LevelResult garsia_wachs(const WeightList& w) {
  const int n = w.size();
  if (n < 2) throw std::invalid_argument("garsia_wachs: needs n >= 2");
  Forest forest;
  std::vector<WorkItem> list;
  for (int i = 0; i < n; ++i)
    list.push_back({w.numerator(i), true, forest.add_leaf(i + 1)});
  std::vector<MergeStep> steps;

  while (list.size() > 1) {
    const int m = static_cast<int>(list.size());
    // rightmost consecutive pair with the smallest sum
    int at = 0;
    BigInt best = list[0].weight + list[1].weight;
    for (int p = 1; p + 1 < m; ++p) {
      BigInt sum = list[p].weight + list[p + 1].weight;
      if (sum <= best) {
        best = std::move(sum);
        at = p;
      }
    }
    MergeStep step;
    step.left_pos = at + 1;
    step.right_pos = at + 2;
    step.left_weight = Rational(list[at].weight, w.denominator());
    step.right_weight = Rational(list[at + 1].weight, w.denominator());
    const int joined = forest.add_join(list[at].node, list[at + 1].node);
    WorkItem merged{best, false, joined};
    list.erase(list.begin() + at, list.begin() + at + 2);
    // first later weight >= the merged sum decides the landing position
    int dest = static_cast<int>(list.size());
    for (int p = at; p < static_cast<int>(list.size()); ++p)
      if (list[p].weight >= merged.weight) {
        dest = p;
        break;
      }
    step.moved_to_end = dest == static_cast<int>(list.size());
    list.insert(list.begin() + dest, std::move(merged));
    step.new_pos = dest + 1;
    step.list_total = Rational(list_total(list), w.denominator());
    steps.push_back(std::move(step));
  }
  return finish_from_levels(w, forest.symbol_depths(n), std::move(steps));
}

}  // namespace alphatree
