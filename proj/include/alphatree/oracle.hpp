// Brute-force ground truth: exhaustive tree enumeration, generic cost
// minimisation over all shapes, profile feasibility by exhaustive split
// search, and the classical Huffman reference.
#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "alphatree/core.hpp"

namespace alphatree {

/// k-th Catalan number; counts full binary trees on k+1 leaves.
BigInt catalan(int k);

/// Default ceilings for the oracle operations; the environment variable
/// ALPHATREE_ORACLE_MAX_N raises all of them for long verification runs.
int oracle_enum_max_n();    // 16 by default
int oracle_opt_max_n();     // 12 by default
int oracle_exists_max_n();  // 10 by default

/// Visits every full binary tree on n ordered leaves exactly once.
void enum_trees(int n, const std::function<void(const CodeTree&)>& visit);

/// Canonical balanced-parenthesis encoding of a tree shape.
std::string shape_string(const CodeTree& t);

/// Exact minimum of an arbitrary tree functional over all shapes; ties go to
/// the first tree in enumeration order. Cost must be strictly comparable.
template <class Cost, class Fn>
std::pair<Cost, CodeTree> brute_opt(int n, Fn&& cost_of_tree) {
  std::pair<Cost, CodeTree> best;
  bool have = false;
  enum_trees(n, [&](const CodeTree& t) {
    Cost c = cost_of_tree(t);
    if (!have || c < best.first) {
      best = {std::move(c), t};
      have = true;
    }
  });
  return best;
}

/// True iff some code trie places the symbols left-to-right at exactly these
/// depths. Exhaustive interval search over split points; independent of the
/// accumulator conditions and of leftmost_fit.
bool brute_exists(const LengthProfile& lengths);

// Tree functionals used as oracle objectives (computed directly on the tree,
// not through any DP).
Rational tree_average_cost(const CodeTree& t, const WeightList& w);
Rational tree_minimax_cost(const CodeTree& t, const WeightList& w);
Rational tree_maxsum_cost(const CodeTree& t, const WeightList& w);

std::pair<Rational, CodeTree> brute_opt_average(const WeightList& w);
std::pair<Rational, CodeTree> brute_opt_minimax(const WeightList& w);
std::pair<Rational, CodeTree> brute_opt_maxsum(const WeightList& w);

struct HuffmanResult {
  Rational cost;
  std::vector<int> lengths;  // sorted ascending
};

/// Classical two-smallest merge with deterministic tie-breaking (smallest
/// weight, then earliest creation).
HuffmanResult huffman(const WeightList& w);

/// Weights strictly decreasing up to some point and non-decreasing after it;
/// sorted sequences count as degenerate valleys.
bool is_valley(const WeightList& w);

}  // namespace alphatree
