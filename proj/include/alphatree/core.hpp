// Domain types for order-preserving prefix codes: weight lists (exact
// rationals over a shared denominator), codeword lengths, codebooks (bit
// strings), code trees, plus validation, conversions, cost metrics and the
// comparison-search replay.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alphatree/rational.hpp"

namespace alphatree {

/// Ordered codeword lengths <l_1, ..., l_n>, each >= 1.
using LengthProfile = std::vector<int>;

/// Ordered codewords as '0'/'1' strings. A valid alphabetic codebook is
/// prefix-free and strictly increasing in lexicographic order.
using CodeBook = std::vector<std::string>;

/// Ordered positive weights stored as integer numerators over one shared
/// positive denominator. Used both as raw weights and, when the numerators
/// sum to the denominator, as an exact probability distribution.
class WeightList {
 public:
  WeightList(std::vector<BigInt> numerators, BigInt denominator);

  static WeightList from_integers(std::initializer_list<long long> ws);
  static WeightList from_integers(const std::vector<long long>& ws);
  static WeightList from_integers(std::vector<BigInt> ws);
  /// Entries are non-negative integers or plain decimals ("0.24"); all get
  /// scaled onto a common power-of-ten denominator. Zero entries rejected.
  static WeightList from_strings(const std::vector<std::string>& entries);

  int size() const { return static_cast<int>(num_.size()); }
  const BigInt& numerator(int i) const { return num_[i]; }
  const std::vector<BigInt>& numerators() const { return num_; }
  const BigInt& denominator() const { return den_; }
  Rational weight(int i) const { return Rational(num_[i], den_); }
  BigInt total_numerator() const;
  Rational total() const { return Rational(total_numerator(), den_); }

  /// True iff the weights sum to exactly 1.
  bool is_normalized() const { return total_numerator() == den_; }
  /// Same weights rescaled so they sum to exactly 1.
  WeightList normalized() const { return WeightList(num_, total_numerator()); }

 private:
  std::vector<BigInt> num_;
  BigInt den_;
};

struct ValidationReport {
  bool prefix_ok = false;
  bool alphabetic_ok = false;
  /// 1-based indices of the first offending pair, if any check failed.
  std::optional<std::pair<int, int>> first_violation;
  bool ok() const { return prefix_ok && alphabetic_ok; }
};

ValidationReport validate_codebook(const CodeBook& cb);

/// Full binary tree whose left-to-right leaves carry symbols 1..n; leaf
/// depth equals the codeword length under the 0=left / 1=right encoding.
class CodeTree {
 public:
  struct Node {
    int left = -1;
    int right = -1;
    int symbol = 0;  // 1..n for leaves, 0 for internal nodes
    bool is_leaf() const { return left < 0; }
  };

  CodeTree() = default;

  int add_leaf(int symbol);
  int add_internal(int left, int right);
  void set_root(int id) { root_ = id; }

  int root() const { return root_; }
  const Node& node(int id) const { return nodes_[id]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int leaf_count() const;

  /// Checks the full-binary-tree shape and that the in-order leaf sequence
  /// is exactly 1..n. Throws on violation.
  void validate() const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// Root-to-leaf paths, left=0 right=1. Rejects the single-leaf tree (the
/// degenerate one-symbol code is the empty codeword, which is not a word).
CodeBook tree_to_codebook(const CodeTree& t);

/// Inverse of tree_to_codebook. The codebook must validate and its trie must
/// be full; a codeword set leaving a unary trie node is rejected with the
/// offending node named.
CodeTree codebook_to_tree(const CodeBook& cb);

/// Leaf depths in symbol order.
LengthProfile leaf_depths(const CodeTree& t);

std::vector<int> codeword_lengths(const CodeBook& cb);

/// Per-leaf (left-edge count, right-edge count) along the root-to-leaf path.
using PathVector = std::vector<std::pair<int, int>>;
PathVector path_vector(const CodeTree& t);

/// Replays the comparison search "is x <= m?" (m = largest leaf index in the
/// left subtree) for the given target; the Yes=0/No=1 answer string equals
/// the target's codeword.
std::string simulate_search(const CodeTree& t, int target);

/// Exact sum(w_i * l_i). Counts must match.
Rational average_length(const LengthProfile& lengths, const WeightList& w);

/// Shannon entropy -sum p_i log2 p_i in bits. Requires a normalized weight
/// list. Relative error is documented <= 1e-12.
double entropy(const WeightList& w);

/// Graphviz rendering: leaves as boxes, internal nodes as circles, edges
/// labelled 0/1. Weights, when given, label the leaves.
std::string to_dot(const CodeTree& t, const WeightList* w = nullptr);

/// Trie rendering of an arbitrary valid codebook (unary nodes drawn as-is),
/// so non-full codes from the approximate constructors can be exported too.
std::string to_dot(const CodeBook& cb, const WeightList* w = nullptr);

}  // namespace alphatree
