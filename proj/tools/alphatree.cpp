// Command-line front end: ingestion, algorithm dispatch, reporting, export.
// Exit codes: 0 success, 1 infeasible input or cost disagreement, 2 usage or
// input errors.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "alphatree/approx.hpp"
#include "alphatree/core.hpp"
#include "alphatree/existence.hpp"
#include "alphatree/generators.hpp"
#include "alphatree/io.hpp"
#include "alphatree/optimal.hpp"
#include "alphatree/oracle.hpp"
#include "alphatree/parallel.hpp"
#include "alphatree/variants.hpp"

using namespace alphatree;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::string path;
  std::string inline_weights;
  bool normalize = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* path = cmd->add_option("-i,--input", in.path, "weights file (JSON or CSV)");
  auto* inl = cmd->add_option("-w,--weights", in.inline_weights,
                              "inline comma-separated weights, e.g. 24,12,9");
  path->excludes(inl);
  cmd->add_flag("--normalize", in.normalize, "rescale weights to sum to exactly 1");
}

std::string slurp(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

WeightList load_weights(const InputOptions& in) {
  WeightList w = [&] {
    if (!in.inline_weights.empty()) return parse_weights_inline(in.inline_weights);
    if (!in.path.empty()) return parse_weights_auto(slurp(in.path));
    throw std::invalid_argument("no input: pass --input FILE or --weights LIST");
  }();
  return in.normalize ? w.normalized() : w;
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "table") return OutputFormat::Table;
  if (name == "dot") return OutputFormat::Dot;
  throw std::invalid_argument("unknown format: " + name);
}

LengthProfile parse_lengths(const std::string& csv) {
  LengthProfile out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad length entry: '" + tok + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("empty length list");
  return out;
}

Rational parse_rational(const std::string& text) {
  const auto parse_decimal = [&](const std::string& s) -> Rational {
    const auto dot = s.find('.');
    const std::string ip = dot == std::string::npos ? s : s.substr(0, dot);
    const std::string fp = dot == std::string::npos ? "" : s.substr(dot + 1);
    auto digits = [](const std::string& d) {
      return std::all_of(d.begin(), d.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    if (ip.empty() || !digits(ip) || !digits(fp))
      throw std::invalid_argument("bad number: '" + text + "'");
    std::string all = ip + fp;
    const auto nz = all.find_first_not_of('0');
    all = nz == std::string::npos ? "0" : all.substr(nz);
    BigInt den = 1;
    for (size_t i = 0; i < fp.size(); ++i) den *= 10;
    return Rational(BigInt(all), den);
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_decimal(text);
  const Rational den = parse_decimal(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("bad rational: " + text);
  return parse_decimal(text.substr(0, slash)) / den;
}

// cost file: one row per symbol, entries for depths 0..D separated by commas
// or spaces; "inf" marks a forbidden depth
LeafCostTable parse_cost_file(const std::string& text) {
  LeafCostTable table;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    for (char& c : line)
      if (c == ',' || c == '\t') c = ' ';
    std::istringstream row(line);
    std::vector<std::optional<Rational>> entries;
    std::string tok;
    while (row >> tok) {
      if (tok == "inf" || tok == "x")
        entries.push_back(std::nullopt);
      else
        entries.push_back(parse_rational(tok));
    }
    if (!entries.empty()) table.cost.push_back(std::move(entries));
  }
  if (table.cost.empty()) throw std::invalid_argument("cost file holds no rows");
  table.max_depth = static_cast<int>(table.cost[0].size()) - 1;
  table.validate();
  return table;
}

ordered_json tables_json(const DPTables& t, bool with_intervals) {
  ordered_json doc;
  ordered_json cost = ordered_json::array();
  ordered_json root = ordered_json::array();
  for (int i = 1; i <= t.n; ++i) {
    ordered_json crow = ordered_json::array();
    ordered_json rrow = ordered_json::array();
    for (int j = i; j <= t.n; ++j) {
      crow.push_back(fraction_string(t.cost(i, j)));
      if (j > i) rrow.push_back(t.root[i][j]);
    }
    cost.push_back(std::move(crow));
    root.push_back(std::move(rrow));
  }
  doc["cost"] = std::move(cost);
  doc["root"] = std::move(root);
  if (with_intervals) {
    ordered_json ivs = ordered_json::array();
    for (int i = 1; i < t.n; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = i + 1; j <= t.n; ++j) {
        const auto [lo, hi] = t.search_interval(i, j);
        row.push_back(std::to_string(lo) + "-" + std::to_string(hi));
      }
      ivs.push_back(std::move(row));
    }
    doc["search_intervals"] = std::move(ivs);
  }
  return doc;
}

ordered_json verdict_json(const ExistenceVerdict& v) {
  ordered_json doc;
  doc["condition"] = v.condition_name;
  doc["feasible"] = v.feasible;
  ordered_json trace = ordered_json::array();
  for (const auto& d : v.accumulator_trace) trace.push_back(d.str());
  doc["trace"] = std::move(trace);
  return doc;
}

void print(const std::string& text) { std::cout << text; }
void print(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---------------------------------------------------------------------------

int cmd_construct(const InputOptions& in, const std::string& algo, const std::string& format,
                  bool dump_tables, bool parallel) {
  const auto w = load_weights(in);
  const Exec exec = parallel ? Exec::Parallel : Exec::Serial;
  CodeTree tree;
  ordered_json extra;
  if (algo == "gm" || algo == "knuth") {
    const auto res = algo == "gm" ? gilbert_moore_dp(w, exec) : knuth_dp(w, exec);
    tree = res.tree;
    if (dump_tables) extra["tables"] = tables_json(res.tables, algo == "knuth");
  } else if (algo == "hu-tucker" || algo == "garsia-wachs") {
    const auto res = algo == "hu-tucker" ? hu_tucker(w) : garsia_wachs(w);
    tree = res.tree;
    if (dump_tables) {
      ordered_json levels = ordered_json::array();
      for (int l : res.levels) levels.push_back(l);
      extra["levels"] = std::move(levels);
    }
  } else {
    throw std::invalid_argument("unknown algorithm: " + algo);
  }
  const auto fmt = parse_format(format);
  if (fmt == OutputFormat::Dot) {
    print(to_dot(tree, &w));
    return kExitOk;
  }
  if (fmt == OutputFormat::Json) {
    ordered_json doc = codebook_json(tree_to_codebook(tree), w);
    for (auto& [key, value] : extra.items()) doc[key] = value;
    print(doc);
    return kExitOk;
  }
  print(emit_codebook(tree_to_codebook(tree), w, fmt));
  if (!extra.empty()) print(extra);
  return kExitOk;
}

int cmd_approx(const InputOptions& in, const std::string& algo, const std::string& format) {
  auto w = load_weights(in);
  CodeBook cb;
  bool fallback = false;
  if (algo == "gm") {
    cb = gm_expansion(w);
  } else if (algo == "horibe") {
    cb = tree_to_codebook(horibe(w));
  } else if (algo == "yeung") {
    cb = yeung_construct(w);
  } else if (algo == "bddv") {
    BddvDetails det;
    cb = bddv(w, &det);
    fallback = det.endpoint_fallback;
  } else {
    throw std::invalid_argument("unknown algorithm: " + algo);
  }
  print(emit_codebook(cb, w, parse_format(format)));
  if (fallback) std::cerr << "note: endpoint lengths raised to restore feasibility\n";
  return kExitOk;
}

int cmd_bounds(const InputOptions& in) {
  const auto rep = bounds_report(load_weights(in));
  ordered_json doc;
  doc["entropy"] = format_double(rep.entropy);
  ordered_json entries = ordered_json::array();
  for (const auto& e : rep.entries) {
    ordered_json row;
    row["algorithm"] = e.algorithm;
    row["cost"] = fraction_string(e.cost);
    row["cost_float"] = format_double(to_double(e.cost));
    row["bound"] = format_double(e.bound);
    row["slack"] = format_double(e.slack);
    entries.push_back(std::move(row));
  }
  doc["algorithms"] = std::move(entries);
  print(doc);
  return kExitOk;
}

int cmd_check(const std::string& lengths_csv) {
  const auto lengths = parse_lengths(lengths_csv);
  ordered_json doc;
  ordered_json profile = ordered_json::array();
  for (int l : lengths) profile.push_back(l);
  doc["lengths"] = std::move(profile);
  doc["kraft_sum"] = fraction_string(kraft_sum(lengths));
  ordered_json conds = ordered_json::array();
  bool feasible = true;
  for (const auto& v : {yeung_check(lengths), nakatsu_check(lengths), sheinwald_check(lengths)}) {
    feasible = feasible && v.feasible;
    conds.push_back(verdict_json(v));
  }
  doc["conditions"] = std::move(conds);
  const auto cb = leftmost_fit(lengths);
  doc["feasible"] = feasible;
  if (cb) {
    ordered_json words = ordered_json::array();
    for (const auto& word : *cb) words.push_back(word);
    doc["codebook"] = std::move(words);
  } else {
    doc["codebook"] = nullptr;
  }
  print(doc);
  return feasible ? kExitOk : kExitInfeasible;
}

int cmd_variant(const InputOptions& in, const std::string& objective, const std::string& format) {
  const auto w = load_weights(in);
  VariantResult res;
  if (objective.rfind("height:", 0) == 0) {
    res = height_limited_opt(w, std::stoi(objective.substr(7)));
  } else if (objective == "minimax") {
    res = minimax_opt(w);
  } else if (objective == "maxsum") {
    res = maxsum_opt(w);
  } else if (objective.rfind("expcost:", 0) == 0) {
    res = exponential_cost_opt(w, parse_rational(objective.substr(8)));
  } else if (objective.rfind("general:", 0) == 0) {
    const auto table = parse_cost_file(slurp(objective.substr(8)));
    if (table.size() != w.size())
      throw std::invalid_argument("cost file rows do not match the weight count");
    res = general_cost_opt(table);
  } else {
    throw std::invalid_argument("unknown objective: " + objective);
  }
  const auto fmt = parse_format(format);
  if (fmt == OutputFormat::Dot) {
    print(to_dot(res.tree, &w));
    return kExitOk;
  }
  ordered_json doc;
  doc["objective"] = objective;
  doc["cost"] = fraction_string(res.cost);
  doc["cost_float"] = format_double(to_double(res.cost));
  ordered_json depths = ordered_json::array();
  for (int d : leaf_depths(res.tree)) depths.push_back(d);
  doc["levels"] = std::move(depths);
  if (res.tree.leaf_count() >= 2) {
    ordered_json words = ordered_json::array();
    for (const auto& word : tree_to_codebook(res.tree)) words.push_back(word);
    doc["codebook"] = std::move(words);
  }
  print(doc);
  return kExitOk;
}

int cmd_compare(const InputOptions& in, int count, unsigned long long seed, int max_n,
                bool with_oracle) {
  const auto run_one = [&](const WeightList& w, ordered_json& row) -> bool {
    const auto gm = gilbert_moore_dp(w).cost;
    const auto kn = knuth_dp(w).cost;
    const auto ht = hu_tucker(w).cost;
    const auto gw = garsia_wachs(w).cost;
    row["gm"] = fraction_string(gm);
    row["knuth"] = fraction_string(kn);
    row["hu_tucker"] = fraction_string(ht);
    row["garsia_wachs"] = fraction_string(gw);
    bool agree = gm == kn && kn == ht && ht == gw;
    if (with_oracle && w.size() <= oracle_opt_max_n()) {
      const auto oracle = brute_opt_average(w).first;
      row["oracle"] = fraction_string(oracle);
      agree = agree && oracle == gm;
    }
    row["agree"] = agree;
    return agree;
  };

  ordered_json doc;
  bool all_agree = true;
  if (count <= 0) {
    ordered_json row;
    all_agree = run_one(load_weights(in), row);
    doc = std::move(row);
  } else {
    RandomEngine rng(seed);
    ordered_json runs = ordered_json::array();
    int disagreements = 0;
    for (int iter = 0; iter < count; ++iter) {
      std::uniform_int_distribution<int> nn(2, max_n);
      const auto w = random_integer_weights(rng, nn(rng));
      ordered_json row;
      row["n"] = w.size();
      if (!run_one(w, row)) {
        ++disagreements;
        runs.push_back(std::move(row));  // record offenders only
      }
    }
    doc["count"] = count;
    doc["seed"] = seed;
    doc["max_n"] = max_n;
    doc["disagreements"] = disagreements;
    doc["offenders"] = std::move(runs);
    all_agree = disagreements == 0;
  }
  print(doc);
  return all_agree ? kExitOk : kExitInfeasible;
}

int cmd_search(const InputOptions& in, int target, const std::string& algo) {
  const auto w = load_weights(in);
  CodeTree tree;
  if (algo == "knuth")
    tree = knuth_dp(w).tree;
  else if (algo == "gm")
    tree = gilbert_moore_dp(w).tree;
  else if (algo == "hu-tucker")
    tree = hu_tucker(w).tree;
  else if (algo == "garsia-wachs")
    tree = garsia_wachs(w).tree;
  else if (algo == "horibe")
    tree = horibe(w);
  else
    throw std::invalid_argument("unknown algorithm: " + algo);
  const std::string answers = simulate_search(tree, target);
  ordered_json doc;
  doc["target"] = target;
  doc["answers"] = answers;
  doc["codeword"] = tree_to_codebook(tree)[target - 1];
  print(doc);
  return kExitOk;
}

int cmd_export(const InputOptions& in, const std::string& algo, const std::string& out_path) {
  const auto w = load_weights(in);
  CodeTree tree;
  if (algo == "gm")
    tree = gilbert_moore_dp(w).tree;
  else if (algo == "knuth")
    tree = knuth_dp(w).tree;
  else if (algo == "hu-tucker")
    tree = hu_tucker(w).tree;
  else if (algo == "garsia-wachs")
    tree = garsia_wachs(w).tree;
  else if (algo == "horibe")
    tree = horibe(w);
  else
    throw std::invalid_argument("unknown algorithm: " + algo);
  const std::string dot = to_dot(tree, &w);
  if (out_path.empty()) {
    print(dot);
  } else {
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot write: " + out_path);
    os << dot;
  }
  return kExitOk;
}

int cmd_oracle_exists(const std::string& lengths_csv) {
  const auto lengths = parse_lengths(lengths_csv);
  const bool ok = brute_exists(lengths);
  ordered_json doc;
  doc["exists"] = ok;
  print(doc);
  return ok ? kExitOk : kExitInfeasible;
}

int cmd_oracle_opt(const InputOptions& in, const std::string& objective) {
  const auto w = load_weights(in);
  std::pair<Rational, CodeTree> res;
  if (objective == "avg")
    res = brute_opt_average(w);
  else if (objective == "minimax")
    res = brute_opt_minimax(w);
  else if (objective == "maxsum")
    res = brute_opt_maxsum(w);
  else
    throw std::invalid_argument("unknown objective: " + objective);
  ordered_json doc;
  doc["objective"] = objective;
  doc["cost"] = fraction_string(res.first);
  ordered_json depths = ordered_json::array();
  for (int d : leaf_depths(res.second)) depths.push_back(d);
  doc["levels"] = std::move(depths);
  print(doc);
  return kExitOk;
}

int cmd_oracle_count(int n) {
  long long count = 0;
  enum_trees(n, [&](const CodeTree&) { ++count; });
  ordered_json doc;
  doc["n"] = n;
  doc["trees"] = count;
  doc["catalan"] = catalan(n - 1).str();
  print(doc);
  return kExitOk;
}

int cmd_oracle_huffman(const InputOptions& in) {
  const auto res = huffman(load_weights(in));
  ordered_json doc;
  doc["cost"] = fraction_string(res.cost);
  ordered_json ls = ordered_json::array();
  for (int l : res.lengths) ls.push_back(l);
  doc["lengths"] = std::move(ls);
  print(doc);
  return kExitOk;
}

int cmd_bench(int max_n, unsigned long long seed) {
  using clock = std::chrono::steady_clock;
  const auto ms = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double, std::milli>(b - a).count();
  };
  std::cout << "threads available: " << omp_get_max_threads() << "\n";
  RandomEngine rng(seed);
  std::cout << "serial vs OpenMP kernels (times in ms)\n";
  for (int n = 100; n <= max_n; n *= 2) {
    const auto w = random_integer_weights(rng, n, 1000000);
    const auto t0 = clock::now();
    const auto gs = gilbert_moore_dp(w, Exec::Serial);
    const auto t1 = clock::now();
    const auto gp = gilbert_moore_dp(w, Exec::Parallel);
    const auto t2 = clock::now();
    const auto ks = knuth_dp(w, Exec::Serial);
    const auto t3 = clock::now();
    const auto kp = knuth_dp(w, Exec::Parallel);
    const auto t4 = clock::now();
    const auto ht = hu_tucker(w);
    const auto t5 = clock::now();
    const auto gw = garsia_wachs(w);
    const auto t6 = clock::now();
    if (gs.cost != gp.cost || ks.cost != kp.cost || ht.cost != gw.cost || gs.cost != ht.cost) {
      std::cerr << "cost mismatch at n = " << n << "\n";
      return kExitInfeasible;
    }
    std::printf("n=%5d  gm %9.2f | gm-omp %9.2f | knuth %8.2f | knuth-omp %8.2f"
                " | hu-tucker %8.2f | garsia-wachs %8.2f\n",
                n, ms(t0, t1), ms(t1, t2), ms(t2, t3), ms(t3, t4), ms(t4, t5), ms(t5, t6));
  }
  {
    std::cout << "height-limited DP (cap = 2 ceil(log2 n))\n";
    for (int n = 50; n <= std::min(max_n, 400); n *= 2) {
      const auto w = random_integer_weights(rng, n, 1000000);
      int cap = 0;
      while ((1 << cap) < n) ++cap;
      cap *= 2;
      const auto t0 = clock::now();
      const auto hs = height_limited_opt(w, cap, Exec::Serial);
      const auto t1 = clock::now();
      const auto hp = height_limited_opt(w, cap, Exec::Parallel);
      const auto t2 = clock::now();
      if (hs.cost != hp.cost) {
        std::cerr << "cost mismatch at n = " << n << "\n";
        return kExitInfeasible;
      }
      std::printf("n=%5d  serial %9.2f | omp %9.2f\n", n, ms(t0, t1), ms(t1, t2));
    }
  }
  {
    const auto t0 = clock::now();
    long long trees = 0;
    enum_trees(14, [&](const CodeTree&) { ++trees; });
    const auto t1 = clock::now();
    std::printf("oracle enumeration: %lld trees on 14 leaves in %.2f ms\n", trees, ms(t0, t1));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alphabetic (order-preserving prefix) code toolkit"};
  app.require_subcommand(1);

  InputOptions in;
  std::string algo = "knuth";
  std::string format = "json";
  std::string lengths_csv;
  std::string objective;
  std::string out_path;
  bool dump_tables = false;
  bool parallel = false;
  bool with_oracle = false;
  int target = 1;
  int count = 0;
  int max_n = 50;
  int enum_n = 4;
  unsigned long long seed = 1;

  auto* construct = app.add_subcommand("construct", "build a minimum average length code");
  add_input_options(construct, in);
  construct->add_option("--algo", algo, "gm | knuth | hu-tucker | garsia-wachs")
      ->default_val("knuth");
  construct->add_option("--format", format, "json | table | dot")->default_val("json");
  construct->add_flag("--dump-tables", dump_tables, "emit DP tables / level profile");
  construct->add_flag("--parallel", parallel, "use the OpenMP kernels");

  auto* approx = app.add_subcommand("approx", "build an entropy-bounded code in linear time");
  add_input_options(approx, in);
  approx->add_option("--algo", algo, "gm | horibe | yeung | bddv")->required();
  approx->add_option("--format", format, "json | table | dot")->default_val("json");

  auto* bounds = app.add_subcommand("bounds", "evaluate all upper bounds on one input");
  add_input_options(bounds, in);

  auto* check = app.add_subcommand("check", "test a length profile for feasibility");
  check->add_option("--lengths", lengths_csv, "comma separated lengths, e.g. 2,1,2")
      ->required();

  auto* variant = app.add_subcommand("variant", "optimise an alternative objective");
  add_input_options(variant, in);
  variant
      ->add_option("--objective", objective,
                   "height:<L> | minimax | maxsum | expcost:<a> | general:<costfile>")
      ->required();
  variant->add_option("--format", format, "json | table | dot")->default_val("json");

  auto* oracle = app.add_subcommand("oracle", "brute-force verification helpers");
  oracle->require_subcommand(1);
  auto* oracle_exists = oracle->add_subcommand("exists", "profile feasibility by brute force");
  oracle_exists->add_option("--lengths", lengths_csv)->required();
  auto* oracle_opt = oracle->add_subcommand("opt", "exhaustive minimisation over all trees");
  add_input_options(oracle_opt, in);
  oracle_opt->add_option("--objective", objective, "avg | minimax | maxsum")
      ->default_val("avg");
  auto* oracle_count = oracle->add_subcommand("count", "enumerate tree shapes");
  oracle_count->add_option("--n", enum_n, "leaf count")->required();
  auto* oracle_huffman = oracle->add_subcommand("huffman", "unordered prefix-code reference");
  add_input_options(oracle_huffman, in);

  auto* compare = app.add_subcommand("compare", "cross-check the optimal constructors");
  add_input_options(compare, in);
  compare->add_option("--count", count, "random batch size (omit for single input)");
  compare->add_option("--seed", seed, "random seed")->default_val(1);
  compare->add_option("--max-n", max_n, "largest random n")->default_val(50);
  compare->add_flag("--oracle", with_oracle, "also compare against brute force when small");

  auto* exporter = app.add_subcommand("export", "write the code tree as Graphviz DOT");
  add_input_options(exporter, in);
  exporter->add_option("--algo", algo, "gm | knuth | hu-tucker | garsia-wachs | horibe")
      ->default_val("knuth");
  exporter->add_option("-o,--output", out_path, "output path (stdout when omitted)");

  auto* search = app.add_subcommand("search", "replay the comparison search for a symbol");
  add_input_options(search, in);
  search->add_option("--target", target, "symbol index, 1-based")->required();
  search->add_option("--algo", algo, "tree constructor")->default_val("knuth");

  auto* bench = app.add_subcommand("bench", "timing of serial vs OpenMP kernels");
  bench->add_option("--max-n", max_n, "largest DP size")->default_val(800);
  bench->add_option("--seed", seed)->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(in, algo, format, dump_tables, parallel);
    if (approx->parsed()) return cmd_approx(in, algo, format);
    if (bounds->parsed()) return cmd_bounds(in);
    if (check->parsed()) return cmd_check(lengths_csv);
    if (variant->parsed()) return cmd_variant(in, objective, format);
    if (oracle->parsed()) {
      if (oracle_exists->parsed()) return cmd_oracle_exists(lengths_csv);
      if (oracle_opt->parsed()) return cmd_oracle_opt(in, objective);
      if (oracle_count->parsed()) return cmd_oracle_count(enum_n);
      if (oracle_huffman->parsed()) return cmd_oracle_huffman(in);
    }
    if (compare->parsed())
      return cmd_compare(in, compare->count("--count") ? count : 0, seed, max_n, with_oracle);
    if (exporter->parsed()) return cmd_export(in, algo, out_path);
    if (search->parsed()) return cmd_search(in, target, algo);
    if (bench->parsed()) return cmd_bench(max_n, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  }
  return kExitUsage;
}
