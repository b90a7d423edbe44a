#include "alphatree/core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace alphatree {

WeightList::WeightList(std::vector<BigInt> numerators, BigInt denominator)
    : num_(std::move(numerators)), den_(std::move(denominator)) {
  if (num_.empty()) throw std::invalid_argument("WeightList: needs at least one weight");
  if (den_ <= 0) throw std::invalid_argument("WeightList: denominator must be positive");
  for (const auto& v : num_)
    if (v <= 0) throw std::invalid_argument("WeightList: non-positive weight");
}

WeightList WeightList::from_integers(std::initializer_list<long long> ws) {
  return from_integers(std::vector<long long>(ws));
}

WeightList WeightList::from_integers(const std::vector<long long>& ws) {
  std::vector<BigInt> nums(ws.begin(), ws.end());
  return WeightList(std::move(nums), 1);
}

WeightList WeightList::from_integers(std::vector<BigInt> ws) {
  return WeightList(std::move(ws), 1);
}

WeightList WeightList::from_strings(const std::vector<std::string>& entries) {
  // Parse "123" or "1.25"; scale everything to a shared 10^k denominator.
  struct Parsed {
    BigInt digits;
    int frac_len;
  };
  std::vector<Parsed> parsed;
  int max_frac = 0;
  for (size_t idx = 0; idx < entries.size(); ++idx) {
    const std::string& e = entries[idx];
    const auto dot = e.find('.');
    const std::string ip = dot == std::string::npos ? e : e.substr(0, dot);
    const std::string fp = dot == std::string::npos ? "" : e.substr(dot + 1);
    auto all_digits = [](const std::string& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(),
                                       [](unsigned char c) { return std::isdigit(c); });
    };
    if (!all_digits(ip) || (dot != std::string::npos && !all_digits(fp)))
      throw std::invalid_argument("weight entry " + std::to_string(idx + 1) +
                                  ": malformed number '" + e + "'");
    // strip leading zeros: cpp_int would read "05" as octal
    std::string digits = ip + fp;
    const auto nz = digits.find_first_not_of('0');
    digits = nz == std::string::npos ? "0" : digits.substr(nz);
    parsed.push_back({BigInt(digits), static_cast<int>(fp.size())});
    max_frac = std::max(max_frac, parsed.back().frac_len);
  }
  std::vector<BigInt> nums;
  nums.reserve(parsed.size());
  BigInt den = 1;
  for (int i = 0; i < max_frac; ++i) den *= 10;
  for (auto& p : parsed) {
    BigInt v = p.digits;
    for (int i = p.frac_len; i < max_frac; ++i) v *= 10;
    nums.push_back(std::move(v));
  }
  return WeightList(std::move(nums), den);
}

BigInt WeightList::total_numerator() const {
  BigInt s = 0;
  for (const auto& v : num_) s += v;
  return s;
}

namespace {

bool is_bitstring(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_prefix(const std::string& a, const std::string& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

ValidationReport validate_codebook(const CodeBook& cb) {
  if (cb.empty()) throw std::invalid_argument("validate_codebook: empty codebook");
  for (size_t i = 0; i < cb.size(); ++i)
    if (!is_bitstring(cb[i]))
      throw std::invalid_argument("validate_codebook: codeword " + std::to_string(i + 1) +
                                  " is not a non-empty '0'/'1' string");
  ValidationReport rep;
  rep.prefix_ok = true;
  rep.alphabetic_ok = true;
  std::optional<std::pair<int, int>> prefix_bad, alpha_bad;
  for (size_t i = 0; i < cb.size() && !prefix_bad; ++i)
    for (size_t j = i + 1; j < cb.size(); ++j)
      if (is_prefix(cb[i], cb[j]) || is_prefix(cb[j], cb[i])) {
        prefix_bad = {static_cast<int>(i + 1), static_cast<int>(j + 1)};
        break;
      }
  for (size_t i = 0; i + 1 < cb.size(); ++i)
    if (cb[i] >= cb[i + 1]) {  // lexicographic order on '0' < '1'
      alpha_bad = {static_cast<int>(i + 1), static_cast<int>(i + 2)};
      break;
    }
  rep.prefix_ok = !prefix_bad;
  rep.alphabetic_ok = !alpha_bad;
  if (prefix_bad && alpha_bad)
    rep.first_violation = std::min(*prefix_bad, *alpha_bad);
  else if (prefix_bad)
    rep.first_violation = prefix_bad;
  else if (alpha_bad)
    rep.first_violation = alpha_bad;
  return rep;
}

int CodeTree::add_leaf(int symbol) {
  Node nd;
  nd.symbol = symbol;
  nodes_.push_back(nd);
  return static_cast<int>(nodes_.size()) - 1;
}

int CodeTree::add_internal(int left, int right) {
  Node nd;
  nd.left = left;
  nd.right = right;
  nodes_.push_back(nd);
  return static_cast<int>(nodes_.size()) - 1;
}

int CodeTree::leaf_count() const {
  int c = 0;
  for (const auto& nd : nodes_)
    if (nd.is_leaf()) ++c;
  return c;
}

void CodeTree::validate() const {
  if (root_ < 0 || root_ >= node_count()) throw std::invalid_argument("CodeTree: no root");
  int next_symbol = 1;
  // Iterative depth-first walk; checks 0/2 children and leaf order as it goes.
  std::vector<int> stack{root_};
  int visited = 0;
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (id < 0 || id >= node_count()) throw std::invalid_argument("CodeTree: bad child index");
    ++visited;
    if (visited > node_count())
      throw std::invalid_argument("CodeTree: disconnected or shared nodes");
    const Node& nd = nodes_[id];
    if ((nd.left < 0) != (nd.right < 0))
      throw std::invalid_argument("CodeTree: node with exactly one child");
    if (nd.is_leaf()) {
      if (nd.symbol != next_symbol++)
        throw std::invalid_argument("CodeTree: leaves are not 1..n in left-to-right order");
      continue;
    }
    stack.push_back(nd.right);
    stack.push_back(nd.left);
  }
  if (visited != node_count())
    throw std::invalid_argument("CodeTree: disconnected or shared nodes");
}

namespace {

template <class LeafFn>
void walk_paths(const CodeTree& t, const LeafFn& fn) {
  // depth-first with explicit path; leaves arrive in symbol order
  struct Item {
    int id;
    std::string path;
    int lefts, rights;
  };
  std::vector<Item> stack{{t.root(), "", 0, 0}};
  while (!stack.empty()) {
    Item it = std::move(stack.back());
    stack.pop_back();
    const auto& nd = t.node(it.id);
    if (nd.is_leaf()) {
      fn(nd.symbol, it.path, it.lefts, it.rights);
      continue;
    }
    stack.push_back({nd.right, it.path + '1', it.lefts, it.rights + 1});
    stack.push_back({nd.left, it.path + '0', it.lefts + 1, it.rights});
  }
}

}  // namespace

CodeBook tree_to_codebook(const CodeTree& t) {
  t.validate();
  if (t.leaf_count() == 1)
    throw std::invalid_argument(
        "tree_to_codebook: single-leaf tree has no codeword (degenerate one-symbol code)");
  CodeBook cb(t.leaf_count());
  walk_paths(t, [&](int symbol, const std::string& path, int, int) {
    cb[symbol - 1] = path;
  });
  return cb;
}

CodeTree codebook_to_tree(const CodeBook& cb) {
  const auto rep = validate_codebook(cb);
  if (!rep.ok())
    throw std::invalid_argument("codebook_to_tree: codebook is not prefix-free alphabetic");
  // Build the trie with a temporary child map, then require fullness.
  struct TrieNode {
    int zero = -1, one = -1, symbol = 0;
  };
  std::vector<TrieNode> trie(1);
  for (size_t i = 0; i < cb.size(); ++i) {
    int cur = 0;
    for (char c : cb[i]) {
      int next = (c == '0') ? trie[cur].zero : trie[cur].one;
      if (next < 0) {
        next = static_cast<int>(trie.size());
        trie.push_back({});
        (c == '0' ? trie[cur].zero : trie[cur].one) = next;
      }
      cur = next;
    }
    trie[cur].symbol = static_cast<int>(i + 1);
  }
  for (size_t id = 0; id < trie.size(); ++id) {
    const bool internal = trie[id].zero >= 0 || trie[id].one >= 0;
    if (internal && (trie[id].zero < 0 || trie[id].one < 0)) {
      // reconstruct the unary node's path for the diagnostic
      std::string path;
      std::function<bool(int, std::string&)> find = [&](int cur, std::string& acc) -> bool {
        if (cur == static_cast<int>(id)) return true;
        if (trie[cur].zero >= 0) {
          acc.push_back('0');
          if (find(trie[cur].zero, acc)) return true;
          acc.pop_back();
        }
        if (trie[cur].one >= 0) {
          acc.push_back('1');
          if (find(trie[cur].one, acc)) return true;
          acc.pop_back();
        }
        return false;
      };
      find(0, path);
      throw std::invalid_argument("codebook_to_tree: unary trie node at \"" + path + "\"");
    }
  }
  CodeTree t;
  std::function<int(int)> build = [&](int cur) -> int {
    if (trie[cur].zero < 0) return t.add_leaf(trie[cur].symbol);
    const int l = build(trie[cur].zero);
    const int r = build(trie[cur].one);
    return t.add_internal(l, r);
  };
  t.set_root(build(0));
  t.validate();
  return t;
}

LengthProfile leaf_depths(const CodeTree& t) {
  t.validate();
  LengthProfile depths(t.leaf_count());
  walk_paths(t, [&](int symbol, const std::string& path, int, int) {
    depths[symbol - 1] = static_cast<int>(path.size());
  });
  return depths;
}

std::vector<int> codeword_lengths(const CodeBook& cb) {
  std::vector<int> out(cb.size());
  for (size_t i = 0; i < cb.size(); ++i) out[i] = static_cast<int>(cb[i].size());
  return out;
}

PathVector path_vector(const CodeTree& t) {
  t.validate();
  if (t.leaf_count() == 1)
    throw std::invalid_argument("path_vector: single-leaf tree has an empty path");
  PathVector pv(t.leaf_count());
  walk_paths(t, [&](int symbol, const std::string&, int lefts, int rights) {
    pv[symbol - 1] = {lefts, rights};
  });
  return pv;
}

std::string simulate_search(const CodeTree& t, int target) {
  t.validate();
  const int n = t.leaf_count();
  if (target < 1 || target > n)
    throw std::invalid_argument("simulate_search: target out of range");
  // Precompute the largest leaf symbol below each node.
  std::vector<int> max_leaf(t.node_count(), 0);
  std::function<int(int)> fill = [&](int id) -> int {
    const auto& nd = t.node(id);
    if (nd.is_leaf()) return max_leaf[id] = nd.symbol;
    fill(nd.left);
    return max_leaf[id] = fill(nd.right);
  };
  fill(t.root());
  std::string answers;
  int cur = t.root();
  while (!t.node(cur).is_leaf()) {
    const int m = max_leaf[t.node(cur).left];  // query: is target <= m?
    if (target <= m) {
      answers.push_back('0');
      cur = t.node(cur).left;
    } else {
      answers.push_back('1');
      cur = t.node(cur).right;
    }
  }
  return answers;
}

Rational average_length(const LengthProfile& lengths, const WeightList& w) {
  if (static_cast<int>(lengths.size()) != w.size())
    throw std::invalid_argument("average_length: length/weight count mismatch");
  BigInt acc = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (lengths[i] < 0) throw std::invalid_argument("average_length: negative length");
    acc += w.numerator(i) * lengths[i];
  }
  return Rational(acc, w.denominator());
}

double entropy(const WeightList& w) {
  if (!w.is_normalized())
    throw std::invalid_argument("entropy: weights must sum to exactly 1");
  const double log_den = log2_bigint(w.denominator());
  double h = 0.0;
  for (int i = 0; i < w.size(); ++i) {
    const double p = to_double(w.weight(i));
    h += p * (log_den - log2_bigint(w.numerator(i)));
  }
  return h;
}

namespace {

std::string dot_escape_weight(const WeightList* w, int symbol) {
  if (!w) return "";
  return "\\n" + fraction_string(w->weight(symbol - 1));
}

}  // namespace

std::string to_dot(const CodeTree& t, const WeightList* w) {
  t.validate();
  if (w && w->size() != t.leaf_count())
    throw std::invalid_argument("to_dot: weight count mismatch");
  std::ostringstream os;
  os << "digraph code_tree {\n  node [fontname=\"Helvetica\"];\n";
  for (int id = 0; id < t.node_count(); ++id) {
    const auto& nd = t.node(id);
    if (nd.is_leaf())
      os << "  n" << id << " [shape=box, label=\"" << nd.symbol
         << dot_escape_weight(w, nd.symbol) << "\"];\n";
    else
      os << "  n" << id << " [shape=circle, label=\"\"];\n";
  }
  for (int id = 0; id < t.node_count(); ++id) {
    const auto& nd = t.node(id);
    if (nd.is_leaf()) continue;
    os << "  n" << id << " -> n" << nd.left << " [label=\"0\"];\n";
    os << "  n" << id << " -> n" << nd.right << " [label=\"1\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const CodeBook& cb, const WeightList* w) {
  const auto rep = validate_codebook(cb);
  if (!rep.ok()) throw std::invalid_argument("to_dot: invalid codebook");
  if (w && w->size() != static_cast<int>(cb.size()))
    throw std::invalid_argument("to_dot: weight count mismatch");
  // Trie over the codewords; prefixes name the nodes.
  std::map<std::string, int> symbol_at;
  for (size_t i = 0; i < cb.size(); ++i) symbol_at[cb[i]] = static_cast<int>(i + 1);
  std::map<std::string, bool> seen;
  std::ostringstream os;
  os << "digraph code_trie {\n  node [fontname=\"Helvetica\"];\n";
  std::function<void(const std::string&)> emit = [&](const std::string& prefix) {
    if (seen[prefix]) return;
    seen[prefix] = true;
    const auto it = symbol_at.find(prefix);
    const std::string id = prefix.empty() ? "root" : prefix;
    if (it != symbol_at.end())
      os << "  n" << id << " [shape=box, label=\"" << it->second
         << dot_escape_weight(w, it->second) << "\"];\n";
    else
      os << "  n" << id << " [shape=circle, label=\"\"];\n";
  };
  emit("");
  // Edges: every proper prefix of a codeword is a trie node.
  std::map<std::string, std::vector<std::pair<char, std::string>>> children;
  for (const auto& word : cb)
    for (size_t k = 0; k < word.size(); ++k) {
      const std::string parent = word.substr(0, k);
      const std::string child = word.substr(0, k + 1);
      auto& vec = children[parent];
      if (std::find(vec.begin(), vec.end(), std::make_pair(word[k], child)) == vec.end())
        vec.push_back({word[k], child});
    }
  for (auto& [parent, kids] : children) {
    std::sort(kids.begin(), kids.end());
    emit(parent);
    for (const auto& [bit, child] : kids) {
      emit(child);
      os << "  n" << (parent.empty() ? std::string("root") : parent) << " -> n" << child
         << " [label=\"" << bit << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace alphatree
