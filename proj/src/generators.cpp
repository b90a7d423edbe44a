#include "alphatree/generators.hpp"

#include <algorithm>
#include <set>

namespace alphatree {

WeightList random_integer_weights(RandomEngine& rng, int n, long long max_w) {
  std::uniform_int_distribution<long long> dist(1, max_w);
  std::vector<BigInt> nums(n);
  for (auto& v : nums) v = dist(rng);
  return WeightList(std::move(nums), 1);
}

WeightList random_distribution(RandomEngine& rng, int n, long long max_w) {
  return random_integer_weights(rng, n, max_w).normalized();
}

WeightList random_dyadic_distribution(RandomEngine& rng, int n) {
  // start from {1} and split a random part in two until n parts exist
  std::vector<int> exps{0};  // p = 2^-exp
  while (static_cast<int>(exps.size()) < n) {
    std::uniform_int_distribution<size_t> pick(0, exps.size() - 1);
    const size_t at = pick(rng);
    exps[at] += 1;
    exps.push_back(exps[at]);
  }
  std::shuffle(exps.begin(), exps.end(), rng);
  const int emax = *std::max_element(exps.begin(), exps.end());
  std::vector<BigInt> nums;
  nums.reserve(exps.size());
  for (int e : exps) nums.push_back(BigInt(1) << (emax - e));
  return WeightList(std::move(nums), BigInt(1) << emax);
}

WeightList random_monotone_distribution(RandomEngine& rng, int n, bool ascending) {
  auto w = random_distribution(rng, n);
  std::vector<BigInt> nums = w.numerators();
  std::sort(nums.begin(), nums.end());
  if (!ascending) std::reverse(nums.begin(), nums.end());
  return WeightList(std::move(nums), w.denominator());
}

WeightList random_valley_distribution(RandomEngine& rng, int n) {
  auto w = random_distribution(rng, n);
  std::vector<BigInt> nums = w.numerators();
  std::sort(nums.begin(), nums.end());
  std::uniform_int_distribution<int> pick(0, n - 1);
  const int turn = pick(rng);
  // strictly decreasing head needs distinct values; take them greedily from
  // the top of the sorted pool
  std::vector<BigInt> head, tail(nums.begin(), nums.end());
  for (int i = 0; i < turn && !tail.empty(); ++i) {
    auto it = std::prev(tail.end());
    if (!head.empty() && *it == head.back()) break;
    head.push_back(*it);
    tail.erase(it);
  }
  std::vector<BigInt> out = head;
  out.insert(out.end(), tail.begin(), tail.end());
  return WeightList(std::move(out), w.denominator());
}

LengthProfile random_length_profile(RandomEngine& rng, int n, int max_len) {
  std::uniform_int_distribution<int> dist(1, max_len);
  LengthProfile out(n);
  for (auto& l : out) l = dist(rng);
  return out;
}

}  // namespace alphatree
