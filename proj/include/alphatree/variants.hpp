// Optimal alphabetic trees under alternative objectives: height limits,
// minimax, max-sum over internal nodes, arbitrary per-leaf depth costs (which
// subsumes the exponential objective), and the costliest symbol ordering.
#pragma once

#include <optional>
#include <vector>

#include "alphatree/core.hpp"
#include "alphatree/parallel.hpp"

namespace alphatree {

/// Per-symbol cost sampled at depths 0..max_depth; an unset entry means the
/// depth is forbidden for that leaf.
struct LeafCostTable {
  int max_depth = 0;
  std::vector<std::vector<std::optional<Rational>>> cost;  // [symbol][depth]

  int size() const { return static_cast<int>(cost.size()); }
  void validate() const;
};

struct VariantResult {
  Rational cost;
  CodeTree tree;
};

/// Minimum sum(w_i l_i) over trees of height <= max_len. Requires
/// max_len >= ceil(log2 n). DP over (i, j, remaining depth).
VariantResult height_limited_opt(const WeightList& w, int max_len, Exec exec = Exec::Serial);

/// Minimum of max_i w_i * 2^(l_i).
VariantResult minimax_opt(const WeightList& w);

/// Minimum over trees of the sum, across internal nodes, of the largest leaf
/// weight in the node's subtree.
VariantResult maxsum_opt(const WeightList& w);

/// Minimum sum f_i(l_i) for arbitrary sampled cost functions.
VariantResult general_cost_opt(const LeafCostTable& costs, Exec exec = Exec::Serial);

/// f_i(l) = w_i * l for l <= max_depth (the classical objective, capped).
LeafCostTable linear_cost_table(const WeightList& w, int max_depth);

/// f_i(l) = w_i * a^l for exact rational a in (0,1).
LeafCostTable exponential_cost_table(const WeightList& w, const Rational& a, int max_depth);

/// Exponential-cost optimum for a in (0,1): minimising log_a of the inner
/// sum, i.e. maximising sum w_i a^(l_i) since log_a decreases. Runs through
/// the general-cost minimiser on the complementary table w_i (1 - a^l) and
/// reports the inner sum, all in exact rational arithmetic.
VariantResult exponential_cost_opt(const WeightList& w, const Rational& a,
                                   int max_depth = -1);

/// For ascending weights, the interleaved order <1, n, 2, n-1, ...> whose
/// optimal alphabetic cost dominates every other permutation's.
std::vector<int> costliest_permutation(const WeightList& ascending);

WeightList apply_permutation(const WeightList& w, const std::vector<int>& perm);

}  // namespace alphatree
