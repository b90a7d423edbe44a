#include <set>

#include "doctest.h"
#include "testutil.hpp"

#include "alphatree/existence.hpp"
#include "alphatree/optimal.hpp"
#include "alphatree/oracle.hpp"

using namespace alphatree;
using namespace testutil;

TEST_CASE("enum_trees yields exactly the Catalan count of distinct shapes") {
  CHECK(catalan(2) == 2);
  CHECK(catalan(3) == 5);
  CHECK(catalan(10) == 16796);
  for (int n : {1, 2, 3, 4, 7, 11}) {
    std::set<std::string> shapes;
    long long count = 0;
    enum_trees(n, [&](const CodeTree& t) {
      ++count;
      t.validate();
      CHECK(t.leaf_count() == n);
      shapes.insert(shape_string(t));
    });
    CHECK(BigInt(count) == catalan(n - 1));
    CHECK(BigInt(shapes.size()) == catalan(n - 1));
  }
  CHECK_THROWS_AS(enum_trees(0, [](const CodeTree&) {}), std::invalid_argument);
  CHECK_THROWS_AS(enum_trees(40, [](const CodeTree&) {}), std::invalid_argument);
}

TEST_CASE("brute_opt_average reproduces the worked values") {
  CHECK(brute_opt_average(example_p()).first == rat(322, 100));
  CHECK(brute_opt_average(dist({1, 98, 1})).first == rat(199, 100));
  CHECK(brute_opt_minimax(dist({2, 1, 1})).first == Rational(1));
}

TEST_CASE("brute_exists on the worked profiles") {
  CHECK(brute_exists(prof({1, 2, 2})));
  CHECK(!brute_exists(prof({2, 1, 2})));
  CHECK(brute_exists(prof({3, 3, 3, 3, 3, 3, 3, 3})));
  // codes may be non-full: three words of length two exist
  CHECK(brute_exists(prof({2, 2, 2})));
  CHECK(brute_exists(prof({4})));
}

TEST_CASE("brute_exists agrees with the conditions exhaustively up to n = 6") {
  // profiles over lengths 1..6; the full n <= 8 sweep runs in acceptance
  for (int n = 1; n <= 6; ++n) {
    LengthProfile lengths(n, 1);
    while (true) {
      const bool oracle = brute_exists(lengths);
      CHECK(yeung_check(lengths).feasible == oracle);
      CHECK(nakatsu_check(lengths).feasible == oracle);
      CHECK(sheinwald_check(lengths).feasible == oracle);
      CHECK(leftmost_fit(lengths).has_value() == oracle);
      int at = n - 1;
      while (at >= 0 && lengths[at] == 6) lengths[at--] = 1;
      if (at < 0) break;
      ++lengths[at];
    }
  }
}

TEST_CASE("every enumerated tree's depth profile is feasible") {
  for (int n = 2; n <= 8; ++n)
    enum_trees(n, [&](const CodeTree& t) { CHECK(brute_exists(leaf_depths(t))); });
}

TEST_CASE("huffman reference") {
  CHECK(huffman(dist({2, 1, 1})).cost == rat(3, 2));
  CHECK(huffman(dist({1, 1, 1, 1})).cost == Rational(2));
  CHECK(huffman(dist({1, 1, 1, 1})).lengths == std::vector<int>{2, 2, 2, 2});
  CHECK_THROWS_AS(huffman(dist({1})), std::invalid_argument);

  // ascending rearrangement of the worked example costs the same as its
  // alphabetic optimum
  auto nums = example_p().numerators();
  std::sort(nums.begin(), nums.end());
  const auto sorted = WeightList(std::move(nums), example_p().denominator());
  CHECK(huffman(sorted).cost == knuth_dp(sorted).cost);
}

TEST_CASE("huffman never beats any tree and lower-bounds the alphabetic optimum") {
  RandomEngine rng(424242);
  for (int iter = 0; iter < 60; ++iter) {
    std::uniform_int_distribution<int> nn(2, 10);
    const auto w = random_integer_weights(rng, nn(rng), 100);
    CHECK(huffman(w).cost <= brute_opt_average(w).first);
  }
}

TEST_CASE("is_valley") {
  CHECK(is_valley(W({5, 3, 1, 2, 4})));
  CHECK(!is_valley(W({1, 3, 2})));
  CHECK(is_valley(W({1, 2, 3, 4})));
  CHECK(is_valley(W({4, 3, 2, 1})));
  CHECK(is_valley(W({7})));
  CHECK(is_valley(W({3, 3, 4})));
}

TEST_CASE("valley sequences cost exactly the Huffman optimum") {
  RandomEngine rng(515151);
  for (int iter = 0; iter < 60; ++iter) {
    std::uniform_int_distribution<int> nn(2, 12);
    const auto w = random_valley_distribution(rng, nn(rng));
    REQUIRE(is_valley(w));
    CHECK(knuth_dp(w).cost == huffman(w).cost);
  }
}
