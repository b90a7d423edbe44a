// Exact arithmetic primitives shared by the whole library. Weights, tree
// costs and DP tables are kept as exact rationals; doubles appear only when
// comparing against entropy bounds.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace alphatree {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational as "num/den", reduced, denominator always present
/// (so 1 prints as "1/1"). This is the canonical textual form used by the
/// CLI and by golden tests.
std::string fraction_string(const Rational& r);

double to_double(const Rational& r);

/// log2 of a positive integer. Relative error stays well under 1e-12 even
/// for values far beyond the double range (top 64 bits + exponent).
double log2_bigint(const BigInt& v);

/// Smallest m >= 0 with p * 2^m >= 1, i.e. ceil(-log2 p), computed in exact
/// integer arithmetic. Requires 0 < p <= 1.
int ceil_log_recip(const BigInt& num, const BigInt& den);
int ceil_log_recip(const Rational& p);

}  // namespace alphatree
