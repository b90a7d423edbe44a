#include "alphatree/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace alphatree {

std::string fraction_string(const Rational& r) {
  // cpp_rational is always stored reduced with a positive denominator.
  return numerator(r).str() + "/" + denominator(r).str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

double log2_bigint(const BigInt& v) {
  if (v <= 0) throw std::invalid_argument("log2_bigint: value must be positive");
  const unsigned bits = boost::multiprecision::msb(v);  // floor(log2 v)
  if (bits < 63) return std::log2(v.convert_to<double>());
  const BigInt top = v >> (bits - 62);  // 63 significant bits
  return std::log2(top.convert_to<double>()) + static_cast<double>(bits - 62);
}

int ceil_log_recip(const BigInt& num, const BigInt& den) {
  if (num <= 0 || den <= 0 || num > den)
    throw std::invalid_argument("ceil_log_recip: argument must lie in (0, 1]");
  if (num == den) return 0;
  // num < den: start from the msb gap, then adjust by at most one.
  const int gap = static_cast<int>(boost::multiprecision::msb(den)) -
                  static_cast<int>(boost::multiprecision::msb(num));
  return ((num << gap) >= den) ? gap : gap + 1;
}

int ceil_log_recip(const Rational& p) {
  return ceil_log_recip(numerator(p), denominator(p));
}

}  // namespace alphatree
