// Exact minimum-average-length constructors: the O(n^3) interval DP, its
// O(n^2) restricted-interval refinement, and the two merge-based O(n^2)
// list algorithms, all over exact rational weights. The DP cell loops are
// data-parallel per diagonal and carry an optional OpenMP policy.
#pragma once

#include <utility>
#include <vector>

#include "alphatree/core.hpp"
#include "alphatree/parallel.hpp"

namespace alphatree {

/// Upper-triangular cost/root tables, 1-based on both axes. Costs are exact
/// rationals stored as integer numerators over the weights' denominator.
struct DPTables {
  int n = 0;
  BigInt den = 1;
  std::vector<std::vector<BigInt>> cost_num;  // cost_num[i][j], i <= j
  std::vector<std::vector<int>> root;         // root[i][j], i < j
  long long split_candidates = 0;             // inner-loop iterations executed

  Rational cost(int i, int j) const { return Rational(cost_num[i][j], den); }
  /// The restricted split range [root(i,j-1), root(i+1,j)] ([i,i] on the
  /// first off-diagonal) that the refined search scans for cell (i,j).
  std::pair<int, int> search_interval(int i, int j) const;
};

struct DPResult {
  DPTables tables;
  CodeTree tree;
  Rational cost;
};

/// Full-range split search per cell; O(n^3) splits.
DPResult gilbert_moore_dp(const WeightList& w, Exec exec = Exec::Serial);

/// Split search restricted to [root(i,j-1), root(i+1,j)]; identical costs,
/// O(n^2) total splits.
DPResult knuth_dp(const WeightList& w, Exec exec = Exec::Serial);

/// Rebuilds the optimal tree by recursive splitting at the recorded roots.
CodeTree reconstruct_from_roots(const DPTables& tables);

/// One phase-1 merge: which working-list positions were joined (1-based,
/// pre-merge), their weights, where the merged node landed, and the working
/// list's total weight afterwards (conserved across merges).
struct MergeStep {
  int left_pos = 0;
  int right_pos = 0;
  Rational left_weight;
  Rational right_weight;
  int new_pos = 0;
  bool moved_to_end = false;
  Rational list_total;
};

struct LevelResult {
  LengthProfile levels;
  CodeTree tree;
  Rational cost;
  std::vector<MergeStep> steps;
};

/// Phase 1 repeatedly joins the minimal-sum joinable pair (no leaf strictly
/// between them; ties -> smallest left position, then smallest right), the
/// merged node taking the left position. Phase 2 rebuilds an ordered tree
/// from the intermediate tree's per-symbol depths by leftmost fit.
LevelResult hu_tucker(const WeightList& w);

/// Phase 1 joins the rightmost minimal-sum *consecutive* pair and relocates
/// the merged node just before the first later weight >= the merged sum (or
/// to the list end). Phase 2 as in hu_tucker.
LevelResult garsia_wachs(const WeightList& w);

}  // namespace alphatree
