// Linear-time constructors with provable entropy bounds, plus a report that
// evaluates every bound against the achieved cost.
#pragma once

#include <string>
#include <vector>

#include "alphatree/core.hpp"

namespace alphatree {

/// Codeword i = first ceil(-log p_i) + 1 bits of the binary expansion of
/// r_i = p_1 + ... + p_{i-1} + p_i / 2, extracted by exact rational
/// doubling. Average length < H(P) + 2.
CodeBook gm_expansion(const WeightList& w);

/// Recursive weight balancing: split where the two side sums differ least
/// (ties -> smallest split). Average length <= H(P) + sum max(p_i, p_{i+1})
/// - p_min.
CodeTree horibe(const WeightList& w);

/// The explicit profile ceil(-log p_i) at both ends and +1 inside, realised
/// by leftmost fit. Average length <= H(P) + 2 - p_1 - p_n.
LengthProfile yeung_profile(const WeightList& w);
CodeBook yeung_construct(const WeightList& w);

struct BddvDetails {
  /// Slot lengths on the zero-extended distribution after capping.
  LengthProfile extended_profile;
  /// The 2n-1 codewords before pruning (zero slots included).
  CodeBook extended_codebook;
  /// True when the literal endpoint lengths were infeasible (dyadic
  /// boundary) and got raised by one bit.
  bool endpoint_fallback = false;
  /// True when the boundary repair kept the explicit-profile code instead
  /// of the raised-endpoint extension (whichever costs less wins; this is
  /// what preserves the dyadic bound, where the explicit profile costs
  /// exactly H + 1 - p_1 - p_n).
  bool kept_explicit_profile = false;
};

/// Builds a code for the zero-extended distribution <p_1,0,p_2,...,0,p_n>,
/// then prunes the zero leaves and contracts unary nodes. Average length
/// <= H(P) + 2 - p_1 - p_n - sum min(p_i, p_{i+1}); <= H(P) + 1 - p_1 - p_n
/// on dyadic distributions.
CodeBook bddv(const WeightList& w, BddvDetails* details = nullptr);

struct BoundEntry {
  std::string algorithm;
  Rational cost;
  double bound = 0.0;
  double slack = 0.0;  // bound - cost, >= -1e-9 always
};

struct BoundReport {
  double entropy = 0.0;
  std::vector<BoundEntry> entries;
};

/// Runs the four linear constructors plus the exact optimum and evaluates
/// each one's closed-form bound.
BoundReport bounds_report(const WeightList& w);

// Closed-form bound values (doubles; used by the report and the tests).
double bound_gm(const WeightList& w);       // H + 2
double bound_horibe(const WeightList& w);   // H + sum max(p_i,p_{i+1}) - p_min
double bound_yeung(const WeightList& w);    // H + 2 - p_1 - p_n
double bound_bddv(const WeightList& w);     // H + 2 - p_1 - p_n - sum min(...)
double bound_bddv_dyadic(const WeightList& w);  // H + 1 - p_1 - p_n

bool is_dyadic(const WeightList& w);

}  // namespace alphatree
