#include "alphatree/approx.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "alphatree/existence.hpp"
#include "alphatree/optimal.hpp"

namespace alphatree {

namespace {

void require_distribution(const WeightList& w, const char* who) {
  if (!w.is_normalized())
    throw std::invalid_argument(std::string(who) + ": weights must sum to exactly 1");
}

int ceil_neg_log(const WeightList& w, int i) {
  return ceil_log_recip(w.numerator(i), w.denominator());
}

}  // namespace

CodeBook gm_expansion(const WeightList& w) {
  require_distribution(w, "gm_expansion");
  if (w.size() < 2) throw std::invalid_argument("gm_expansion: needs n >= 2");
  const BigInt& den = w.denominator();
  CodeBook cb;
  cb.reserve(w.size());
  BigInt twice_prefix = 0;  // 2 * (p_1 + ... + p_{i-1}), over den
  for (int i = 0; i < w.size(); ++i) {
    const int bits = ceil_neg_log(w, i) + 1;
    // r_i = prefix + p_i/2 = (twice_prefix + p_i) / (2 den); always in (0,1)
    BigInt num = twice_prefix + w.numerator(i);
    const BigInt r_den = 2 * den;
    std::string word;
    word.reserve(bits);
    for (int b = 0; b < bits; ++b) {
      num <<= 1;
      if (num >= r_den) {
        word.push_back('1');
        num -= r_den;
      } else {
        word.push_back('0');
      }
    }
    cb.push_back(std::move(word));
    twice_prefix += 2 * w.numerator(i);
  }
  return cb;
}

CodeTree horibe(const WeightList& w) {
  require_distribution(w, "horibe");
  std::vector<BigInt> pre(w.size() + 1, 0);
  for (int i = 1; i <= w.size(); ++i) pre[i] = pre[i - 1] + w.numerator(i - 1);
  CodeTree t;
  // split where |left sum - right sum| is smallest, ties to the left
  std::function<int(int, int)> build = [&](int lo, int hi) -> int {
    if (lo == hi) return t.add_leaf(lo);
    const BigInt total = pre[hi] - pre[lo - 1];
    int best_k = lo;
    BigInt best_diff = boost::multiprecision::abs(2 * (pre[lo] - pre[lo - 1]) - total);
    for (int k = lo + 1; k < hi; ++k) {
      BigInt diff = boost::multiprecision::abs(2 * (pre[k] - pre[lo - 1]) - total);
      if (diff < best_diff) {
        best_diff = std::move(diff);
        best_k = k;
      }
    }
    const int l = build(lo, best_k);
    const int r = build(best_k + 1, hi);
    return t.add_internal(l, r);
  };
  t.set_root(build(1, w.size()));
  t.validate();
  return t;
}

LengthProfile yeung_profile(const WeightList& w) {
  require_distribution(w, "yeung_construct");
  if (w.size() < 2) throw std::invalid_argument("yeung_construct: needs n >= 2");
  LengthProfile lengths(w.size());
  for (int i = 0; i < w.size(); ++i) {
    const bool endpoint = i == 0 || i == w.size() - 1;
    lengths[i] = std::max(1, ceil_neg_log(w, i) + (endpoint ? 0 : 1));
  }
  return lengths;
}

CodeBook yeung_construct(const WeightList& w) {
  const auto lengths = yeung_profile(w);
  auto cb = leftmost_fit(lengths);
  if (!cb) throw std::logic_error("yeung_construct: profile unexpectedly infeasible");
  return *cb;
}

namespace {

// Trie pruning for bddv: drop the given leaves, then contract every unary
// node (a removed leaf's parent is replaced by the sibling; chains collapse).
CodeBook prune_and_contract(const CodeBook& extended, const std::vector<bool>& drop) {
  struct TrieNode {
    int zero = -1, one = -1;
    int slot = -1;
  };
  std::vector<TrieNode> trie(1);
  for (size_t i = 0; i < extended.size(); ++i) {
    int cur = 0;
    for (char c : extended[i]) {
      int next = (c == '0') ? trie[cur].zero : trie[cur].one;
      if (next < 0) {
        next = static_cast<int>(trie.size());
        trie.push_back({});
        (c == '0' ? trie[cur].zero : trie[cur].one) = next;
      }
      cur = next;
    }
    trie[cur].slot = static_cast<int>(i);
  }
  // Rebuild top-down, skipping dropped leaves and splicing unary nodes.
  CodeBook out;
  std::function<void(int, const std::string&)> walk = [&](int id, const std::string& path) {
    const TrieNode& nd = trie[id];
    const bool leaf = nd.zero < 0 && nd.one < 0;
    if (leaf) {
      if (nd.slot < 0 || drop[nd.slot]) return;
      out.push_back(path);
      return;
    }
    // prune first: a child subtree may vanish entirely
    auto alive = [&](int child) {
      if (child < 0) return false;
      std::function<bool(int)> any = [&](int c) {
        const TrieNode& t2 = trie[c];
        if (t2.zero < 0 && t2.one < 0) return t2.slot >= 0 && !drop[t2.slot];
        return (t2.zero >= 0 && any(t2.zero)) || (t2.one >= 0 && any(t2.one));
      };
      return any(child);
    };
    const bool l = alive(nd.zero), r = alive(nd.one);
    if (l && r) {
      walk(nd.zero, path + '0');
      walk(nd.one, path + '1');
    } else if (l) {
      walk(nd.zero, path);  // unary: child takes this node's position
    } else if (r) {
      walk(nd.one, path);
    }
  };
  walk(0, "");
  return out;
}

}  // namespace

CodeBook bddv(const WeightList& w, BddvDetails* details) {
  require_distribution(w, "bddv");
  const int n = w.size();
  if (n < 2) throw std::invalid_argument("bddv: needs n >= 2");
  const int m = 2 * n - 1;

  int k = 0;
  for (int i = 0; i < n; ++i) k = std::max(k, ceil_neg_log(w, i));
  k += 1;

  // Extended profile over <p_1, 0, p_2, 0, ..., 0, p_n>: real slots at even
  // positions, zero slots at odd ones.
  LengthProfile lengths(m);
  bool fallback = false;
  auto fill_lengths = [&](bool raised_endpoints) {
    for (int s = 0; s < m; ++s) {
      if (s % 2 == 1) {
        lengths[s] = k;
        continue;
      }
      const int i = s / 2;
      const bool endpoint = s == 0 || s == m - 1;
      const int base = ceil_neg_log(w, i);
      lengths[s] = std::max(1, base + (endpoint && !raised_endpoints ? 0 : 1));
    }
  };
  fill_lengths(false);
  if (!nakatsu_check(lengths).feasible) {
    // dyadic endpoints can land the accumulator exactly on 1; raise the
    // endpoint lengths by one bit to restore feasibility
    fallback = true;
    fill_lengths(true);
    if (!nakatsu_check(lengths).feasible)
      throw std::logic_error("bddv: extended profile infeasible even after fallback");
  }

  // Zero slots carry no weight: shorten each one, left to right, to the
  // smallest length that keeps the profile feasible (caps depth without
  // touching the bound).
  for (int s = 1; s < m; s += 2) {
    const int original = lengths[s];
    for (int d = 1; d < original; ++d) {
      lengths[s] = d;
      if (nakatsu_check(lengths).feasible) break;
      lengths[s] = original;
    }
  }

  auto extended = leftmost_fit(lengths);
  if (!extended) throw std::logic_error("bddv: leftmost fit failed on a feasible profile");

  std::vector<bool> drop(m, false);
  for (int s = 1; s < m; s += 2) drop[s] = true;
  CodeBook pruned = prune_and_contract(*extended, drop);
  if (static_cast<int>(pruned.size()) != n)
    throw std::logic_error("bddv: pruning lost a symbol");

  bool kept_explicit = false;
  if (fallback) {
    // Raising the endpoints costs p_1 + p_n up front and pruning does not
    // always win it back (a dyadic input can lose its H + 1 - p_1 - p_n
    // guarantee). The explicit endpoint/interior profile costs exactly that
    // much on dyadic inputs, so keep whichever code is cheaper.
    CodeBook explicit_code = yeung_construct(w);
    if (average_length(codeword_lengths(explicit_code), w) <
        average_length(codeword_lengths(pruned), w)) {
      pruned = std::move(explicit_code);
      kept_explicit = true;
    }
  }

  if (details) {
    details->extended_profile = lengths;
    details->extended_codebook = *extended;
    details->endpoint_fallback = fallback;
    details->kept_explicit_profile = kept_explicit;
  }
  return pruned;
}

namespace {

double sum_adjacent(const WeightList& w, bool take_max) {
  double acc = 0.0;
  for (int i = 0; i + 1 < w.size(); ++i) {
    const double a = to_double(w.weight(i));
    const double b = to_double(w.weight(i + 1));
    acc += take_max ? std::max(a, b) : std::min(a, b);
  }
  return acc;
}

}  // namespace

double bound_gm(const WeightList& w) { return entropy(w) + 2.0; }

double bound_horibe(const WeightList& w) {
  double pmin = to_double(w.weight(0));
  for (int i = 1; i < w.size(); ++i) pmin = std::min(pmin, to_double(w.weight(i)));
  return entropy(w) + sum_adjacent(w, true) - pmin;
}

double bound_yeung(const WeightList& w) {
  return entropy(w) + 2.0 - to_double(w.weight(0)) - to_double(w.weight(w.size() - 1));
}

double bound_bddv(const WeightList& w) {
  return bound_yeung(w) - sum_adjacent(w, false);
}

double bound_bddv_dyadic(const WeightList& w) {
  return entropy(w) + 1.0 - to_double(w.weight(0)) - to_double(w.weight(w.size() - 1));
}

bool is_dyadic(const WeightList& w) {
  for (int i = 0; i < w.size(); ++i) {
    const Rational p = w.weight(i);
    const BigInt den = denominator(p);
    if (numerator(p) != 1) return false;
    if (den == 0 || (den & (den - 1)) != 0) return false;
  }
  return true;
}

BoundReport bounds_report(const WeightList& w) {
  require_distribution(w, "bounds_report");
  if (w.size() < 2) throw std::invalid_argument("bounds_report: needs n >= 2");
  BoundReport rep;
  rep.entropy = entropy(w);

  auto add = [&](std::string name, Rational cost, double bound) {
    BoundEntry e;
    e.algorithm = std::move(name);
    e.slack = bound - to_double(cost);
    e.cost = std::move(cost);
    e.bound = bound;
    if (e.slack < -1e-9)
      throw std::logic_error("bounds_report: bound violated by " + e.algorithm);
    rep.entries.push_back(std::move(e));
  };

  add("gilbert-moore", average_length(codeword_lengths(gm_expansion(w)), w), bound_gm(w));
  add("horibe", average_length(leaf_depths(horibe(w)), w), bound_horibe(w));
  add("yeung", average_length(codeword_lengths(yeung_construct(w)), w), bound_yeung(w));
  add("bddv", average_length(codeword_lengths(bddv(w)), w), bound_bddv(w));
  add("optimal", knuth_dp(w).cost, bound_gm(w));
  return rep;
}

}  // namespace alphatree
