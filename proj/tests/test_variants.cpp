#include <algorithm>

#include "doctest.h"
#include "testutil.hpp"

#include "alphatree/optimal.hpp"
#include "alphatree/oracle.hpp"
#include "alphatree/variants.hpp"

using namespace alphatree;
using namespace testutil;

namespace {

Rational brute_height_limited(const WeightList& w, int max_len) {
  bool found = false;
  Rational best;
  enum_trees(w.size(), [&](const CodeTree& t) {
    const auto depths = leaf_depths(t);
    if (*std::max_element(depths.begin(), depths.end()) > max_len) return;
    const Rational c = tree_average_cost(t, w);
    if (!found || c < best) {
      best = c;
      found = true;
    }
  });
  REQUIRE(found);
  return best;
}

Rational brute_general(const LeafCostTable& costs) {
  bool found = false;
  Rational best;
  enum_trees(costs.size(), [&](const CodeTree& t) {
    const auto depths = leaf_depths(t);
    Rational c = 0;
    for (int i = 0; i < costs.size(); ++i) {
      if (depths[i] > costs.max_depth || !costs.cost[i][depths[i]]) return;
      c += *costs.cost[i][depths[i]];
    }
    if (!found || c < best) {
      best = std::move(c);
      found = true;
    }
  });
  REQUIRE(found);
  return best;
}

}  // namespace

TEST_CASE("height_limited_opt basics") {
  const auto p = example_p();
  CHECK(height_limited_opt(p, 10).cost == rat(322, 100));
  CHECK(height_limited_opt(dist({1, 1, 1, 1}), 2).cost == Rational(2));
  CHECK_THROWS_AS(height_limited_opt(dist({1, 1, 1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("height_limited_opt equals the filtered oracle for every feasible cap") {
  RandomEngine rng(1201);
  for (int iter = 0; iter < 25; ++iter) {
    std::uniform_int_distribution<int> nn(2, 9);
    const int n = nn(rng);
    const auto w = random_integer_weights(rng, n, 50);
    int min_len = 0;
    while ((1 << min_len) < n) ++min_len;
    for (int cap = min_len; cap <= n - 1; ++cap) {
      const auto res = height_limited_opt(w, cap);
      const auto depths = leaf_depths(res.tree);
      CHECK(*std::max_element(depths.begin(), depths.end()) <= cap);
      CHECK(res.cost == brute_height_limited(w, cap));
      CHECK(tree_average_cost(res.tree, w) == res.cost);
    }
  }
}

TEST_CASE("height_limited_opt cost is non-increasing in the cap") {
  RandomEngine rng(1301);
  for (int iter = 0; iter < 20; ++iter) {
    std::uniform_int_distribution<int> nn(2, 12);
    const int n = nn(rng);
    const auto w = random_integer_weights(rng, n, 1000);
    int min_len = 0;
    while ((1 << min_len) < n) ++min_len;
    Rational prev;
    for (int cap = min_len; cap <= n - 1; ++cap) {
      const auto cost = height_limited_opt(w, cap).cost;
      if (cap > min_len) CHECK(cost <= prev);
      prev = cost;
    }
    CHECK(prev == knuth_dp(w).cost);
  }
}

TEST_CASE("minimax_opt examples") {
  CHECK(minimax_opt(dist({1, 1, 1, 1})).cost == Rational(1));
  const auto res = minimax_opt(dist({2, 1, 1}));
  CHECK(res.cost == Rational(1));
  CHECK(leaf_depths(res.tree) == prof({1, 2, 2}));
}

TEST_CASE("minimax_opt equals the oracle") {
  RandomEngine rng(1401);
  for (int iter = 0; iter < 40; ++iter) {
    std::uniform_int_distribution<int> nn(1, 9);
    const auto w = random_integer_weights(rng, nn(rng), 64);
    const auto res = minimax_opt(w);
    CHECK(tree_minimax_cost(res.tree, w) == res.cost);
    if (w.size() >= 2) CHECK(res.cost == brute_opt_minimax(w).first);
  }
}

TEST_CASE("maxsum_opt examples confirmed by the oracle") {
  CHECK(maxsum_opt(W({1, 1})).cost == Rational(1));
  // both 3-leaf shapes: split after symbol 2 costs 2+3, the other 3+3
  CHECK(brute_opt_maxsum(W({1, 2, 3})).first == Rational(5));
  CHECK(maxsum_opt(W({1, 2, 3})).cost == Rational(5));
  CHECK_THROWS_AS(maxsum_opt(W({7})), std::invalid_argument);
}

TEST_CASE("maxsum_opt equals the oracle") {
  RandomEngine rng(1501);
  for (int iter = 0; iter < 40; ++iter) {
    std::uniform_int_distribution<int> nn(2, 9);
    const auto w = random_integer_weights(rng, nn(rng), 64);
    const auto res = maxsum_opt(w);
    CHECK(tree_maxsum_cost(res.tree, w) == res.cost);
    CHECK(res.cost == brute_opt_maxsum(w).first);
  }
}

TEST_CASE("general_cost_opt with linear costs reproduces the classical DP") {
  RandomEngine rng(1601);
  for (int iter = 0; iter < 60; ++iter) {
    std::uniform_int_distribution<int> nn(2, 14);
    const auto w = random_integer_weights(rng, nn(rng), 1000);
    const auto table = linear_cost_table(w, w.size() - 1);
    CHECK(general_cost_opt(table).cost == knuth_dp(w).cost);
  }
}

TEST_CASE("general_cost_opt with unit costs matches the oracle") {
  for (int n = 2; n <= 10; ++n) {
    std::vector<BigInt> ones(n, 1);
    const auto w = WeightList::from_integers(std::move(ones));
    const auto table = linear_cost_table(w, n - 1);
    CHECK(general_cost_opt(table).cost == brute_general(table));
  }
}

TEST_CASE("exponential objective prefers shallow heavy leaves") {
  const auto w = dist({1, 1});
  const auto res = exponential_cost_opt(w, rat(1, 2));
  CHECK(res.cost == rat(1, 2));
  CHECK(leaf_depths(res.tree) == prof({1, 1}));
  CHECK_THROWS_AS(exponential_cost_opt(w, rat(3, 2)), std::invalid_argument);

  // heavy first symbol ends up on the short branch
  const auto skew = exponential_cost_opt(dist({6, 1, 1}), rat(1, 2));
  CHECK(leaf_depths(skew.tree) == prof({1, 2, 2}));
  // 6/8 * 1/2 + 1/8 * 1/4 + 1/8 * 1/4
  CHECK(skew.cost == rat(7, 16));
}

TEST_CASE("exponential optimum maximises the inner sum over all trees") {
  RandomEngine rng(1901);
  for (int iter = 0; iter < 25; ++iter) {
    std::uniform_int_distribution<int> nn(2, 8);
    const auto w = random_integer_weights(rng, nn(rng), 64);
    const Rational a = rat(1, 3);
    Rational best = -1;
    enum_trees(w.size(), [&](const CodeTree& t) {
      Rational sum = 0;
      const auto depths = leaf_depths(t);
      for (int i = 0; i < w.size(); ++i) {
        Rational pw = 1;
        for (int d = 0; d < depths[i]; ++d) pw *= a;
        sum += w.weight(i) * pw;
      }
      best = std::max(best, sum);
    });
    CHECK(exponential_cost_opt(w, a).cost == best);
  }
}

TEST_CASE("general_cost_opt with exponential costs matches the oracle") {
  RandomEngine rng(1701);
  for (int iter = 0; iter < 25; ++iter) {
    std::uniform_int_distribution<int> nn(2, 8);
    const auto w = random_integer_weights(rng, nn(rng), 64);
    const auto table = exponential_cost_table(w, rat(1, 3), w.size() - 1);
    CHECK(general_cost_opt(table).cost == brute_general(table));
  }
}

TEST_CASE("costliest_permutation interleaves ends inward") {
  const auto w = WeightList::from_strings({"0.1", "0.2", "0.3", "0.4"});
  CHECK(costliest_permutation(w) == std::vector<int>{1, 4, 2, 3});
  CHECK(costliest_permutation(W({3, 5})) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(costliest_permutation(W({2, 1})), std::invalid_argument);
}

TEST_CASE("interleaved order dominates every permutation on small inputs") {
  RandomEngine rng(1801);
  for (int iter = 0; iter < 12; ++iter) {
    std::uniform_int_distribution<int> nn(2, 6);
    const int n = nn(rng);
    auto w = random_integer_weights(rng, n, 30);
    std::vector<BigInt> sorted = w.numerators();
    std::sort(sorted.begin(), sorted.end());
    const auto asc = WeightList::from_integers(std::move(sorted));
    const auto worst = knuth_dp(apply_permutation(asc, costliest_permutation(asc))).cost;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    do {
      CHECK(knuth_dp(apply_permutation(asc, perm)).cost <= worst);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}
