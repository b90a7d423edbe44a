// Exact dyadic fractions num / 2^exp. These carry the accumulators of the
// feasibility conditions, where the strict "< 1" vs "<= 1" distinctions make
// floating point unusable.
#pragma once

#include <stdexcept>
#include <string>

#include "alphatree/rational.hpp"

namespace alphatree {

class DyadicFraction {
 public:
  DyadicFraction() = default;
  DyadicFraction(BigInt num, int exp) : num_(std::move(num)), exp_(exp) {
    if (num_ < 0 || exp_ < 0)
      throw std::invalid_argument("DyadicFraction: negative numerator or exponent");
  }

  /// 2^-ell
  static DyadicFraction pow2(int ell) { return DyadicFraction(1, ell); }

  const BigInt& numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  /// Rounds up to the grid of multiples of 2^-ell; result has exponent ell.
  /// This is both c(x, 2^-ell) = ceil(x * 2^ell) * 2^-ell and t(ell, x).
  DyadicFraction ceil_to_grid(int ell) const {
    if (exp_ <= ell) return DyadicFraction(num_ << (ell - exp_), ell);
    const int shift = exp_ - ell;
    const BigInt up = (num_ + (BigInt(1) << shift) - 1) >> shift;
    return DyadicFraction(up, ell);
  }

  /// Truncates to the first ell binary digits: floor(x * 2^ell) * 2^-ell.
  DyadicFraction floor_to_grid(int ell) const {
    if (exp_ <= ell) return DyadicFraction(num_ << (ell - exp_), ell);
    return DyadicFraction(num_ >> (exp_ - ell), ell);
  }

  DyadicFraction plus_pow2(int ell) const {
    if (exp_ >= ell) return DyadicFraction(num_ + (BigInt(1) << (exp_ - ell)), exp_);
    return DyadicFraction((num_ << (ell - exp_)) + 1, ell);
  }

  DyadicFraction plus(const DyadicFraction& o) const {
    const int e = std::max(exp_, o.exp_);
    return DyadicFraction((num_ << (e - exp_)) + (o.num_ << (e - o.exp_)), e);
  }

  /// -1, 0, +1 against the constant 1.
  int compare_one() const {
    const BigInt one = BigInt(1) << exp_;
    return num_ < one ? -1 : (num_ == one ? 0 : 1);
  }

  int compare(const DyadicFraction& o) const {
    const int e = std::max(exp_, o.exp_);
    const BigInt a = num_ << (e - exp_);
    const BigInt b = o.num_ << (e - o.exp_);
    return a < b ? -1 : (a == b ? 0 : 1);
  }

  bool operator==(const DyadicFraction& o) const { return compare(o) == 0; }

  Rational to_rational() const { return Rational(num_, BigInt(1) << exp_); }
  std::string str() const { return fraction_string(to_rational()); }

 private:
  BigInt num_;   // >= 0
  int exp_ = 0;  // value = num_ / 2^exp_
};

}  // namespace alphatree
