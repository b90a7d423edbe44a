#include <stdexcept>

#include "doctest.h"
#include "testutil.hpp"

#include "alphatree/core.hpp"
#include "alphatree/oracle.hpp"

using namespace alphatree;
using namespace testutil;

namespace {

// the unary search tree: 1 at depth 1, then 2, ..., 7 and 8 share the bottom
CodeBook comb8() {
  return book({"0", "10", "110", "1110", "11110", "111110", "1111110", "1111111"});
}

CodeBook balanced8() {
  return book({"000", "001", "010", "011", "100", "101", "110", "111"});
}

}  // namespace

TEST_CASE("validate_codebook accepts the two worked search codes") {
  for (const auto& cb : {comb8(), balanced8()}) {
    const auto rep = validate_codebook(cb);
    CHECK(rep.prefix_ok);
    CHECK(rep.alphabetic_ok);
    CHECK(!rep.first_violation);
  }
}

TEST_CASE("validate_codebook flags order and prefix violations") {
  const auto rep = validate_codebook(book({"10", "0"}));
  CHECK(rep.prefix_ok);
  CHECK(!rep.alphabetic_ok);
  REQUIRE(rep.first_violation);
  CHECK(*rep.first_violation == std::pair<int, int>{1, 2});

  const auto pre = validate_codebook(book({"0", "01"}));
  CHECK(!pre.prefix_ok);

  CHECK_THROWS_AS(validate_codebook({}), std::invalid_argument);
  CHECK_THROWS_AS(validate_codebook(book({"0", "1x"})), std::invalid_argument);
}

TEST_CASE("tree_to_codebook on the worked trees") {
  CHECK(tree_to_codebook(codebook_to_tree(balanced8())) == balanced8());
  CHECK(tree_to_codebook(codebook_to_tree(comb8())) == comb8());

  CodeTree pair;
  const int l = pair.add_leaf(1);
  const int r = pair.add_leaf(2);
  pair.set_root(pair.add_internal(l, r));
  CHECK(tree_to_codebook(pair) == book({"0", "1"}));

  CodeTree single;
  single.set_root(single.add_leaf(1));
  CHECK_THROWS_AS(tree_to_codebook(single), std::invalid_argument);
}

TEST_CASE("codebook_to_tree examples and errors") {
  const auto t = codebook_to_tree(book({"0", "10", "11"}));
  CHECK(leaf_depths(t) == prof({1, 2, 2}));

  const auto balanced = codebook_to_tree(book({"00", "01", "10", "11"}));
  CHECK(leaf_depths(balanced) == prof({2, 2, 2, 2}));

  // node "1" would have a single child
  CHECK_THROWS_WITH_AS(codebook_to_tree(book({"0", "11"})),
                       doctest::Contains("unary trie node at \"1\""), std::invalid_argument);
}

TEST_CASE("codebook/tree round trip over every enumerated shape") {
  for (int n = 2; n <= 9; ++n) {
    enum_trees(n, [&](const CodeTree& t) {
      const auto cb = tree_to_codebook(t);
      const auto back = codebook_to_tree(cb);
      CHECK(shape_string(back) == shape_string(t));
      CHECK(tree_to_codebook(back) == cb);
    });
  }
}

TEST_CASE("average_length is exact") {
  const auto p = example_p();
  CHECK(average_length(prof({2, 3, 4, 4, 5, 6, 6, 4, 3, 3, 3}), p) == rat(322, 100));
  CHECK(average_length(prof({1, 1}), dist({1, 1})) == Rational(1));
  CHECK(average_length(prof({3, 3, 3, 3, 3, 3, 3, 3}), dist({1, 1, 1, 1, 1, 1, 1, 1})) ==
        Rational(3));
  CHECK_THROWS_AS(average_length(prof({1, 2}), dist({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("entropy on exact dyadic distributions") {
  CHECK(entropy(dist({1, 1})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entropy(dist({1, 1, 1, 1})) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(entropy(dist({2, 1, 1})) == doctest::Approx(1.5).epsilon(1e-12));
  CHECK_THROWS_AS(entropy(W({1, 2})), std::invalid_argument);
}

TEST_CASE("simulate_search replays the two worked examples") {
  CHECK(simulate_search(codebook_to_tree(comb8()), 3) == "110");
  CHECK(simulate_search(codebook_to_tree(balanced8()), 5) == "100");
}

TEST_CASE("simulate_search equals the codeword on every tree up to n = 12") {
  for (int n = 2; n <= 12; ++n) {
    long long trees = 0;
    enum_trees(n, [&](const CodeTree& t) {
      ++trees;
      const auto cb = tree_to_codebook(t);
      for (int target = 1; target <= n; ++target)
        REQUIRE(simulate_search(t, target) == cb[target - 1]);
    });
    CHECK(BigInt(trees) == catalan(n - 1));
  }
}

TEST_CASE("path_vector counts edges by direction") {
  const auto t = codebook_to_tree(book({"0", "10", "11"}));
  CHECK(path_vector(t) == PathVector{{1, 0}, {1, 1}, {0, 2}});

  const auto balanced = codebook_to_tree(book({"00", "01", "10", "11"}));
  CHECK(path_vector(balanced) == PathVector{{2, 0}, {1, 1}, {1, 1}, {0, 2}});

  CHECK(path_vector(codebook_to_tree(comb8()))[7] == std::pair<int, int>{0, 7});
}

TEST_CASE("ceil_log_recip") {
  CHECK(ceil_log_recip(rat(1, 2)) == 1);
  CHECK(ceil_log_recip(rat(1, 3)) == 2);
  CHECK(ceil_log_recip(rat(24, 100)) == 3);
  CHECK(ceil_log_recip(Rational(1)) == 0);
  CHECK_THROWS_AS(ceil_log_recip(rat(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(ceil_log_recip(Rational(0)), std::invalid_argument);

  // 2^-m <= p < 2^-m+1 over random rationals
  RandomEngine rng(20240811);
  for (int iter = 0; iter < 2000; ++iter) {
    std::uniform_int_distribution<long long> num(1, 1 << 20);
    const long long a = num(rng);
    const long long b = num(rng);
    const Rational p(std::min(a, b), std::max(a, b));
    const int m = ceil_log_recip(p);
    CHECK(p * (BigInt(1) << m) >= 1);
    if (m > 0) CHECK(p * (BigInt(1) << (m - 1)) < 1);
  }
}

TEST_CASE("weight ingestion rejects zero and malformed entries") {
  CHECK_THROWS_AS(W({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(WeightList::from_strings({"1", "x"}), std::invalid_argument);
  CHECK_THROWS_AS(WeightList::from_strings({"1", "0.0"}), std::invalid_argument);
  const auto w = WeightList::from_strings({"0.5", "0.25", "0.25"});
  CHECK(w.is_normalized());
  CHECK(w.weight(0) == rat(1, 2));
  // decimal strings with leading zeros parse as base 10
  CHECK(WeightList::from_strings({"0.09"}).weight(0) == rat(9, 100));
}
