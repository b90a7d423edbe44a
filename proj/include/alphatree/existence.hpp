// Feasibility of a length profile as an alphabetic code: the three exact
// dyadic accumulator conditions, the path-vector condition, and the
// constructive leftmost-fit assignment.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alphatree/core.hpp"
#include "alphatree/dyadic.hpp"

namespace alphatree {

struct ExistenceVerdict {
  bool feasible = false;
  /// One accumulator value per prefix length, n entries; feasibility is a
  /// pure function of the last one.
  std::vector<DyadicFraction> accumulator_trace;
  std::string condition_name;
};

/// Exact sum of 2^-l_i (order-independent necessary condition).
Rational kraft_sum(const LengthProfile& lengths);

/// Accumulator s(L,k) = roundup(s(L,k-1), 2^-l_k) + 2^-l_k; feasible iff
/// s(L,n) <= 1.
ExistenceVerdict yeung_check(const LengthProfile& lengths);

/// Accumulator sum(L,i) = trunc(a_i, sum(L,i-1)) + 2^-a_i with
/// a_i = min(l_{i-1}, l_i); feasible iff sum(L,n) < 1. n = 1 is feasible by
/// convention (the recursion starts at i = 2).
ExistenceVerdict nakatsu_check(const LengthProfile& lengths);

/// Accumulator phi(L,i) = roundup(phi(L,i-1), 2^-l_i) + 2^-l_i starting from
/// phi(L,1) = 2^-l_1; feasible iff phi(L,n) <= 1.
ExistenceVerdict sheinwald_check(const LengthProfile& lengths);

/// Assigns codeword i to the numerically smallest depth-l_i slot strictly to
/// the right of everything already assigned. Succeeds exactly on feasible
/// profiles; infeasibility is a normal return.
std::optional<CodeBook> leftmost_fit(const LengthProfile& lengths);

struct PathVectorResult {
  bool feasible = false;
  std::optional<CodeBook> codebook;
};

/// Existence of a tree realizing the given per-leaf (left-edge, right-edge)
/// counts. Greedy over the depth-N reference grid: codeword i is the
/// smallest bit string with l_i zeros and r_i ones whose projection lies
/// strictly right of the previous codeword's projection.
PathVectorResult path_vector_check(const PathVector& pv);

}  // namespace alphatree
