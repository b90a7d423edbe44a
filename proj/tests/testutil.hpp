#pragma once

#include <string>
#include <vector>

#include "alphatree/core.hpp"
#include "alphatree/generators.hpp"

namespace testutil {

using namespace alphatree;

inline WeightList W(std::initializer_list<long long> ws) {
  return WeightList::from_integers(ws);
}

inline WeightList dist(std::initializer_list<long long> ws) {
  return WeightList::from_integers(ws).normalized();
}

// the running example distribution used throughout the worked tables
inline WeightList example_p() {
  return dist({24, 12, 9, 8, 4, 2, 3, 6, 14, 11, 7});
}

inline Rational rat(long long num, long long den) { return Rational(num, den); }

inline CodeBook book(std::initializer_list<const char*> words) {
  CodeBook cb;
  for (const char* w : words) cb.emplace_back(w);
  return cb;
}

inline LengthProfile prof(std::initializer_list<int> ls) { return LengthProfile(ls); }

}  // namespace testutil
