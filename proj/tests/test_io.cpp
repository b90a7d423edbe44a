#include "doctest.h"
#include "testutil.hpp"

#include "alphatree/core.hpp"
#include "alphatree/io.hpp"
#include "alphatree/optimal.hpp"

using namespace alphatree;
using namespace testutil;

TEST_CASE("parse_weights_json on the worked distribution") {
  const auto w = parse_weights_json(R"({"weights":[24,12,9,8,4,2,3,6,14,11,7]})");
  CHECK(w.size() == 11);
  CHECK(w.denominator() == 1);
  CHECK(w.numerator(0) == 24);
  CHECK(w.normalized().is_normalized());

  CHECK_THROWS_WITH_AS(parse_weights_json(R"({"weights":[0,1]})"),
                       doctest::Contains("non-positive"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weights_json(R"({"w":[1]})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weights_json("{"), std::invalid_argument);
}

TEST_CASE("parse_weights_csv and auto-sniffing") {
  const auto w = parse_weights_csv("1\n1\n");
  CHECK(w.size() == 2);
  CHECK(w.numerator(0) == 1);

  const auto dec = parse_weights_csv("0.5\n0.25\n0.25\n");
  CHECK(dec.is_normalized());

  CHECK_THROWS_WITH_AS(parse_weights_csv("1\nbad\n"), doctest::Contains("line 2"),
                       std::invalid_argument);
  CHECK(parse_weights_auto(R"({"weights":[1,2]})").size() == 2);
  CHECK(parse_weights_auto("3\n4\n").size() == 2);
  CHECK(parse_weights_inline("24,12,9").size() == 3);
}

TEST_CASE("emit_codebook json records and summary") {
  const auto cb = book({"0", "10", "110", "1110", "11110", "111110", "1111110", "1111111"});
  const auto w = dist({1, 1, 1, 1, 1, 1, 1, 1});
  const auto text = emit_codebook(cb, w, OutputFormat::Json);
  CHECK(text.find("\"1111111\"") != std::string::npos);
  CHECK(text.find("\"index\": 8") != std::string::npos);

  // two symbols at unit weights: cost renders as a reduced fraction
  const auto two = emit_codebook(book({"0", "1"}), dist({1, 1}), OutputFormat::Json);
  CHECK(two.find("\"cost\": \"1/1\"") != std::string::npos);

  const auto p = example_p();
  const auto opt = knuth_dp(p);
  const auto rendered = emit_codebook(tree_to_codebook(opt.tree), p, OutputFormat::Json);
  CHECK(rendered.find("\"cost\": \"161/50\"") != std::string::npos);
}

TEST_CASE("emit_codebook output is byte-deterministic") {
  const auto p = example_p();
  const auto cb = tree_to_codebook(knuth_dp(p).tree);
  for (auto format : {OutputFormat::Json, OutputFormat::Table, OutputFormat::Dot})
    CHECK(emit_codebook(cb, p, format) == emit_codebook(cb, p, format));
}

TEST_CASE("dot output draws boxes for leaves and circles inside") {
  const auto w = dist({2, 1, 1});
  const auto dot = emit_codebook(book({"0", "10", "11"}), w, OutputFormat::Dot);
  CHECK(dot.find("shape=box") != std::string::npos);
  CHECK(dot.find("shape=circle") != std::string::npos);
  CHECK(dot.find("label=\"0\"") != std::string::npos);
  // non-full codes render as tries
  const auto trie = emit_codebook(book({"01", "11"}), dist({1, 1}), OutputFormat::Dot);
  CHECK(trie.find("shape=box") != std::string::npos);
}

TEST_CASE("fraction_string always prints a denominator") {
  CHECK(fraction_string(Rational(1)) == "1/1");
  CHECK(fraction_string(rat(322, 100)) == "161/50");
  CHECK(fraction_string(rat(3, 4)) == "3/4");
}
