#include "alphatree/variants.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace alphatree {

namespace {

int ceil_log2(int n) {
  int d = 0;
  while ((1LL << d) < n) ++d;
  return d;
}

}  // namespace

void LeafCostTable::validate() const {
  if (cost.empty()) throw std::invalid_argument("LeafCostTable: empty");
  if (max_depth < ceil_log2(size()))
    throw std::invalid_argument("LeafCostTable: max_depth below ceil(log2 n)");
  for (const auto& row : cost)
    if (static_cast<int>(row.size()) != max_depth + 1)
      throw std::invalid_argument("LeafCostTable: ragged rows");
}

VariantResult height_limited_opt(const WeightList& w, int max_len, Exec exec) {
  const int n = w.size();
  if (max_len < ceil_log2(n))
    throw std::invalid_argument("height_limited_opt: no tree of height " +
                                std::to_string(max_len) + " holds " + std::to_string(n) +
                                " leaves");
  max_len = std::min(max_len, std::max(1, n - 1));  // no tree is deeper than n-1
  if (n == 1) {
    CodeTree t;
    t.set_root(t.add_leaf(1));
    return {Rational(0), std::move(t)};
  }
  std::vector<BigInt> pre(n + 1, 0);
  for (int i = 1; i <= n; ++i) pre[i] = pre[i - 1] + w.numerator(i - 1);

  // best[d][i][j]: cheapest subtree for symbols i..j of height <= d, as a
  // numerator over the shared denominator; absent = infeasible.
  const int D = max_len;
  auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  std::vector<std::vector<std::optional<BigInt>>> best(
      D + 1, std::vector<std::optional<BigInt>>(n * n));
  std::vector<std::vector<int>> split(D + 1, std::vector<int>(n * n, -1));
  for (int d = 0; d <= D; ++d)
    for (int i = 1; i <= n; ++i) best[d][idx(i, i)] = BigInt(0);
  for (int d = 1; d <= D; ++d) {
    for (int span = 2; span <= n; ++span) {
      const int cells = n - span + 1;
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel && cells >= 16)
      for (int i = 1; i <= cells; ++i) {
        const int j = i + span - 1;
        if (span > (1LL << d)) continue;
        std::optional<BigInt> cell;
        int cell_k = -1;
        for (int k = i; k < j; ++k) {
          const auto& l = best[d - 1][idx(i, k)];
          const auto& r = best[d - 1][idx(k + 1, j)];
          if (!l || !r) continue;
          BigInt c = *l + *r;
          if (!cell || c < *cell) {
            cell = std::move(c);
            cell_k = k;
          }
        }
        if (cell) {
          best[d][idx(i, j)] = *cell + (pre[j] - pre[i - 1]);
          split[d][idx(i, j)] = cell_k;
        }
      }
    }
  }
  const auto& top = best[D][idx(1, n)];
  if (!top) throw std::logic_error("height_limited_opt: missing feasible root cell");

  CodeTree tree;
  std::function<int(int, int, int)> build = [&](int i, int j, int d) -> int {
    if (i == j) return tree.add_leaf(i);
    const int k = split[d][idx(i, j)];
    const int l = build(i, k, d - 1);
    const int r = build(k + 1, j, d - 1);
    return tree.add_internal(l, r);
  };
  tree.set_root(build(1, n, D));
  tree.validate();
  return {Rational(*top, w.denominator()), std::move(tree)};
}

VariantResult minimax_opt(const WeightList& w) {
  const int n = w.size();
  if (n == 1) {
    CodeTree t;
    t.set_root(t.add_leaf(1));
    return {w.weight(0), std::move(t)};
  }
  // M(i,j) = 2 * min_k max(M(i,k), M(k+1,j)), exact over the denominator
  std::vector<std::vector<BigInt>> m(n + 1, std::vector<BigInt>(n + 1, 0));
  std::vector<std::vector<int>> root(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) m[i][i] = w.numerator(i - 1);
  for (int span = 1; span < n; ++span)
    for (int i = 1; i + span <= n; ++i) {
      const int j = i + span;
      BigInt best;
      int best_k = -1;
      for (int k = i; k < j; ++k) {
        BigInt c = std::max(m[i][k], m[k + 1][j]);
        if (best_k < 0 || c < best) {
          best = std::move(c);
          best_k = k;
        }
      }
      m[i][j] = 2 * best;
      root[i][j] = best_k;
    }
  CodeTree tree;
  std::function<int(int, int)> build = [&](int i, int j) -> int {
    if (i == j) return tree.add_leaf(i);
    const int k = root[i][j];
    const int l = build(i, k);
    const int r = build(k + 1, j);
    return tree.add_internal(l, r);
  };
  tree.set_root(build(1, n));
  tree.validate();
  return {Rational(m[1][n], w.denominator()), std::move(tree)};
}

VariantResult maxsum_opt(const WeightList& w) {
  const int n = w.size();
  if (n < 2) throw std::invalid_argument("maxsum_opt: needs n >= 2");
  // range maxima first, then the interval DP over split points
  std::vector<std::vector<BigInt>> rmax(n + 1, std::vector<BigInt>(n + 1, 0));
  for (int i = 1; i <= n; ++i) {
    rmax[i][i] = w.numerator(i - 1);
    for (int j = i + 1; j <= n; ++j) rmax[i][j] = std::max(rmax[i][j - 1], w.numerator(j - 1));
  }
  std::vector<std::vector<BigInt>> c(n + 1, std::vector<BigInt>(n + 1, 0));
  std::vector<std::vector<int>> root(n + 1, std::vector<int>(n + 1, 0));
  for (int span = 1; span < n; ++span)
    for (int i = 1; i + span <= n; ++i) {
      const int j = i + span;
      BigInt best;
      int best_k = -1;
      for (int k = i; k < j; ++k) {
        BigInt v = c[i][k] + c[k + 1][j];
        if (best_k < 0 || v < best) {
          best = std::move(v);
          best_k = k;
        }
      }
      c[i][j] = best + rmax[i][j];
      root[i][j] = best_k;
    }
  CodeTree tree;
  std::function<int(int, int)> build = [&](int i, int j) -> int {
    if (i == j) return tree.add_leaf(i);
    const int k = root[i][j];
    const int l = build(i, k);
    const int r = build(k + 1, j);
    return tree.add_internal(l, r);
  };
  tree.set_root(build(1, n));
  tree.validate();
  return {Rational(c[1][n], w.denominator()), std::move(tree)};
}

VariantResult general_cost_opt(const LeafCostTable& costs, Exec exec) {
  costs.validate();
  const int n = costs.size();
  const int D = costs.max_depth;
  if (n == 1) {
    if (!costs.cost[0][0])
      throw std::invalid_argument("general_cost_opt: no feasible tree within max_depth");
    CodeTree t;
    t.set_root(t.add_leaf(1));
    return {*costs.cost[0][0], std::move(t)};
  }
  // G(i,j,d): cheapest placement of symbols i..j under a node at depth d.
  auto idx = [n](int i, int j) { return (i - 1) * n + (j - 1); };
  std::vector<std::vector<std::optional<Rational>>> g(
      D + 1, std::vector<std::optional<Rational>>(n * n));
  std::vector<std::vector<int>> split(D + 1, std::vector<int>(n * n, -1));
  for (int d = D; d >= 0; --d) {
    for (int i = 1; i <= n; ++i) g[d][idx(i, i)] = costs.cost[i - 1][d];
    if (d == D) continue;
    for (int span = 2; span <= n; ++span) {
      const int cells = n - span + 1;
#pragma omp parallel for schedule(static) if (exec == Exec::Parallel && cells >= 16)
      for (int i = 1; i <= cells; ++i) {
        const int j = i + span - 1;
        std::optional<Rational> cell;
        int cell_k = -1;
        for (int k = i; k < j; ++k) {
          const auto& l = g[d + 1][idx(i, k)];
          const auto& r = g[d + 1][idx(k + 1, j)];
          if (!l || !r) continue;
          Rational c = *l + *r;
          if (!cell || c < *cell) {
            cell = std::move(c);
            cell_k = k;
          }
        }
        if (cell) {
          g[d][idx(i, j)] = std::move(cell);
          split[d][idx(i, j)] = cell_k;
        }
      }
    }
  }
  const auto& top = g[0][idx(1, n)];
  if (!top) throw std::invalid_argument("general_cost_opt: no feasible tree within max_depth");
  CodeTree tree;
  std::function<int(int, int, int)> build = [&](int i, int j, int d) -> int {
    if (i == j) return tree.add_leaf(i);
    const int k = split[d][idx(i, j)];
    const int l = build(i, k, d + 1);
    const int r = build(k + 1, j, d + 1);
    return tree.add_internal(l, r);
  };
  tree.set_root(build(1, n, 0));
  tree.validate();
  return {*top, std::move(tree)};
}

LeafCostTable linear_cost_table(const WeightList& w, int max_depth) {
  LeafCostTable t;
  t.max_depth = max_depth;
  t.cost.assign(w.size(), std::vector<std::optional<Rational>>(max_depth + 1));
  for (int i = 0; i < w.size(); ++i)
    for (int d = 0; d <= max_depth; ++d) t.cost[i][d] = w.weight(i) * d;
  return t;
}

LeafCostTable exponential_cost_table(const WeightList& w, const Rational& a, int max_depth) {
  if (a <= 0 || a >= 1)
    throw std::invalid_argument("exponential_cost_table: base must lie in (0,1)");
  LeafCostTable t;
  t.max_depth = max_depth;
  t.cost.assign(w.size(), std::vector<std::optional<Rational>>(max_depth + 1));
  for (int i = 0; i < w.size(); ++i) {
    Rational pw = 1;
    for (int d = 0; d <= max_depth; ++d) {
      t.cost[i][d] = w.weight(i) * pw;
      pw *= a;
    }
  }
  return t;
}

VariantResult exponential_cost_opt(const WeightList& w, const Rational& a, int max_depth) {
  if (a <= 0 || a >= 1)
    throw std::invalid_argument("exponential_cost_opt: base must lie in (0,1)");
  if (max_depth < 0) max_depth = std::max(1, w.size() - 1);
  LeafCostTable t;
  t.max_depth = max_depth;
  t.cost.assign(w.size(), std::vector<std::optional<Rational>>(max_depth + 1));
  for (int i = 0; i < w.size(); ++i) {
    Rational pw = 1;
    for (int d = 0; d <= max_depth; ++d) {
      t.cost[i][d] = w.weight(i) * (1 - pw);
      pw *= a;
    }
  }
  VariantResult res = general_cost_opt(t);
  res.cost = w.total() - res.cost;  // back to sum w_i a^(l_i)
  return res;
}

std::vector<int> costliest_permutation(const WeightList& ascending) {
  const int n = ascending.size();
  for (int i = 0; i + 1 < n; ++i)
    if (ascending.numerator(i) > ascending.numerator(i + 1))
      throw std::invalid_argument("costliest_permutation: input must be sorted ascending");
  std::vector<int> perm;
  perm.reserve(n);
  int lo = 1, hi = n;
  while (lo <= hi) {
    perm.push_back(lo++);
    if (lo <= hi) perm.push_back(hi--);
  }
  return perm;
}

WeightList apply_permutation(const WeightList& w, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != w.size())
    throw std::invalid_argument("apply_permutation: size mismatch");
  std::vector<BigInt> nums;
  nums.reserve(perm.size());
  for (int p : perm) nums.push_back(w.numerator(p - 1));
  return WeightList(std::move(nums), w.denominator());
}

}  // namespace alphatree
