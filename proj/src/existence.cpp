#include "alphatree/existence.hpp"

#include <algorithm>
#include <stdexcept>

namespace alphatree {

namespace {

void require_valid_profile(const LengthProfile& lengths) {
  if (lengths.empty()) throw std::invalid_argument("length profile is empty");
  for (int l : lengths)
    if (l < 1) throw std::invalid_argument("length profile entries must be >= 1");
}

}  // namespace

Rational kraft_sum(const LengthProfile& lengths) {
  require_valid_profile(lengths);
  const int lmax = *std::max_element(lengths.begin(), lengths.end());
  BigInt acc = 0;
  for (int l : lengths) acc += BigInt(1) << (lmax - l);
  return Rational(acc, BigInt(1) << lmax);
}

ExistenceVerdict yeung_check(const LengthProfile& lengths) {
  require_valid_profile(lengths);
  ExistenceVerdict v;
  v.condition_name = "yeung";
  DyadicFraction s;  // s(L,0) = 0
  for (int l : lengths) {
    s = s.ceil_to_grid(l).plus_pow2(l);
    v.accumulator_trace.push_back(s);
  }
  v.feasible = s.compare_one() <= 0;
  return v;
}

ExistenceVerdict nakatsu_check(const LengthProfile& lengths) {
  require_valid_profile(lengths);
  ExistenceVerdict v;
  v.condition_name = "nakatsu";
  DyadicFraction sum;  // sum(L,1) = 0
  v.accumulator_trace.push_back(sum);
  for (size_t i = 1; i < lengths.size(); ++i) {
    const int alpha = std::min(lengths[i - 1], lengths[i]);
    sum = sum.floor_to_grid(alpha).plus_pow2(alpha);
    v.accumulator_trace.push_back(sum);
  }
  v.feasible = sum.compare_one() < 0;
  return v;
}

ExistenceVerdict sheinwald_check(const LengthProfile& lengths) {
  require_valid_profile(lengths);
  ExistenceVerdict v;
  v.condition_name = "sheinwald";
  DyadicFraction phi = DyadicFraction::pow2(lengths[0]);
  v.accumulator_trace.push_back(phi);
  for (size_t i = 1; i < lengths.size(); ++i) {
    phi = phi.ceil_to_grid(lengths[i]).plus_pow2(lengths[i]);
    v.accumulator_trace.push_back(phi);
  }
  v.feasible = phi.compare_one() <= 0;
  return v;
}

std::optional<CodeBook> leftmost_fit(const LengthProfile& lengths) {
  require_valid_profile(lengths);
  CodeBook cb;
  cb.reserve(lengths.size());
  DyadicFraction end;  // right boundary of everything assigned so far
  for (int l : lengths) {
    const DyadicFraction start = end.ceil_to_grid(l);
    end = start.plus_pow2(l);
    if (end.compare_one() > 0) return std::nullopt;
    // start = m / 2^l with m < 2^l; the codeword is m in l binary digits.
    const BigInt& m = start.numerator();
    std::string word(l, '0');
    for (int b = 0; b < l; ++b)
      if (boost::multiprecision::bit_test(m, b)) word[l - 1 - b] = '1';
    cb.push_back(std::move(word));
  }
  return cb;
}

namespace {

// Successor of v among numbers with the same popcount (Gosper). v > 0.
BigInt next_same_popcount(const BigInt& v) {
  const BigInt low = v & (v ^ (v - 1));  // lowest set bit
  const BigInt carry = v + low;
  return carry | (((v ^ carry) / low) >> 2);
}

}  // namespace

PathVectorResult path_vector_check(const PathVector& pv) {
  if (pv.empty()) throw std::invalid_argument("path_vector_check: empty vector");
  int big_n = 0;
  for (const auto& [l, r] : pv) {
    if (l < 0 || r < 0 || l + r < 1)
      throw std::invalid_argument("path_vector_check: each pair needs l+r >= 1");
    big_n = std::max(big_n, l + r);
  }
  PathVectorResult res;
  CodeBook cb;
  // Projections onto the depth-N grid; boundary starts at -1 so the all-zero
  // first codeword is admissible.
  BigInt boundary = -1;
  for (const auto& [l, r] : pv) {
    const int len = l + r;
    const int shift = big_n - len;
    BigInt gamma = (BigInt(1) << r) - 1;  // smallest value with r ones
    const BigInt limit = BigInt(1) << len;
    bool found = false;
    while (gamma < limit) {
      if ((gamma << shift) > boundary) {
        found = true;
        break;
      }
      if (gamma == 0) break;  // l+r = l: only the all-zero string exists
      gamma = next_same_popcount(gamma);
    }
    if (!found) return res;  // feasible stays false
    boundary = ((gamma + 1) << shift) - 1;
    std::string word(len, '0');
    for (int b = 0; b < len; ++b)
      if (boost::multiprecision::bit_test(gamma, b)) word[len - 1 - b] = '1';
    cb.push_back(std::move(word));
  }
  res.feasible = true;
  res.codebook = std::move(cb);
  return res;
}

}  // namespace alphatree
