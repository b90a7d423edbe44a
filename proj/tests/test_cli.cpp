// End-to-end checks of the installed binary: exit codes, golden fragments,
// byte determinism. The harness passes the binary path via ALPHATREE_BIN.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

std::string binary_path() {
  const char* p = std::getenv("ALPHATREE_BIN");
  REQUIRE_MESSAGE(p != nullptr, "ALPHATREE_BIN must point at the CLI binary");
  return p;
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  const std::string cmd = env_prefix + binary_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const char* kExampleJson = "/tmp/alphatree_cli_example.json";

void write_example() {
  std::ofstream os(kExampleJson);
  os << R"({"weights":[24,12,9,8,4,2,3,6,14,11,7]})";
}

}  // namespace

TEST_CASE("construct reports the worked optimum") {
  write_example();
  const auto res = run(std::string("construct -i ") + kExampleJson +
                       " --normalize --algo hu-tucker");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"cost\": \"161/50\"") != std::string::npos);
  // the leftmost depth-6 codeword of the worked level profile
  CHECK(res.out.find("\"codeword\": \"100010\"") != std::string::npos);

  // level profile surfaces through --dump-tables
  const auto lv = run(std::string("construct -i ") + kExampleJson +
                      " --normalize --algo hu-tucker --dump-tables");
  CHECK(lv.out.find("\"levels\"") != std::string::npos);
}

TEST_CASE("construct --dump-tables exposes the DP matrices") {
  write_example();
  const auto res = run(std::string("construct -i ") + kExampleJson +
                       " --normalize --algo knuth --dump-tables");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"search_intervals\"") != std::string::npos);
  CHECK(res.out.find("\"3-7\"") != std::string::npos);   // cell (1,11)
  CHECK(res.out.find("\"161/50\"") != std::string::npos);  // C(1,11)
}

TEST_CASE("check exits 1 on an infeasible profile and 0 on a feasible one") {
  const auto bad = run("check --lengths 2,1,2");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("\"feasible\": false") != std::string::npos);

  const auto good = run("check --lengths 1,2,2");
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("\"codebook\"") != std::string::npos);
  CHECK(good.out.find("\"10\"") != std::string::npos);
}

TEST_CASE("compare agrees on the worked example and on a seeded batch") {
  write_example();
  const auto one = run(std::string("compare -i ") + kExampleJson + " --normalize --oracle");
  CHECK(one.exit_code == 0);
  CHECK(one.out.find("\"agree\": true") != std::string::npos);

  const auto batch = run("compare --count 25 --seed 7 --max-n 20 --oracle");
  CHECK(batch.exit_code == 0);
  CHECK(batch.out.find("\"disagreements\": 0") != std::string::npos);
}

TEST_CASE("search prints the answer string for the chosen symbol") {
  write_example();
  const auto res = run(std::string("search -i ") + kExampleJson +
                       " --normalize --target 3 --algo garsia-wachs");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"answers\": \"0110\"") != std::string::npos);
  CHECK(res.out.find("\"codeword\": \"0110\"") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("construct --algo nonsense -w 1,2,3").exit_code == 2);
  CHECK(run("definitely-not-a-command").exit_code == 2);
  CHECK(run("construct -w 0,1").exit_code == 2);
  CHECK(run("approx -w 1,1 --algo gm").exit_code == 2);  // unnormalized
}

TEST_CASE("variant objectives parse and report") {
  const auto mm = run("variant -w 1,1,1,1 --normalize --objective minimax");
  CHECK(mm.exit_code == 0);
  CHECK(mm.out.find("\"cost\": \"1/1\"") != std::string::npos);

  const auto h = run("variant -w 1,1,1,1 --normalize --objective height:2");
  CHECK(h.exit_code == 0);
  CHECK(h.out.find("\"cost\": \"2/1\"") != std::string::npos);

  const auto bad = run("variant -w 1,1,1,1 --normalize --objective height:1");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("export writes DOT with boxes and circles") {
  write_example();
  const auto res = run(std::string("export -i ") + kExampleJson + " --normalize");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("digraph") != std::string::npos);
  CHECK(res.out.find("shape=box") != std::string::npos);
  CHECK(res.out.find("shape=circle") != std::string::npos);
}

TEST_CASE("oracle subcommands") {
  CHECK(run("oracle count --n 4").out.find("\"trees\": 5") != std::string::npos);
  CHECK(run("oracle exists --lengths 2,1,2").exit_code == 1);
  CHECK(run("oracle exists --lengths 1,2,2").exit_code == 0);
  const auto hf = run("oracle huffman -w 1,1,2 --normalize");
  CHECK(hf.out.find("\"cost\": \"3/2\"") != std::string::npos);
  const auto opt = run(std::string("oracle opt -w 1,98,1 --normalize"));
  CHECK(opt.out.find("\"cost\": \"199/100\"") != std::string::npos);
}

TEST_CASE("oracle ceilings honour the environment override") {
  // 12 entries: above the default brute-force existence ceiling of 10
  const std::string lengths = "4,4,4,4,4,4,4,4,4,4,4,4";
  CHECK(run("oracle exists --lengths " + lengths).exit_code == 2);
  const auto raised = run("oracle exists --lengths " + lengths, "ALPHATREE_ORACLE_MAX_N=12 ");
  CHECK(raised.exit_code == 0);
  CHECK(raised.out.find("\"exists\": true") != std::string::npos);
}

TEST_CASE("general cost files drive the variant solver") {
  std::ofstream os("/tmp/alphatree_cli_costs.csv");
  os << "0,1,2,3\n0,2,4,6\n0,3,6,9\n0,1,2,3\n";
  os.close();
  const auto res = run("variant -w 1,1,1,1 --objective general:/tmp/alphatree_cli_costs.csv");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"cost\": \"14/1\"") != std::string::npos);
  CHECK(run("variant -w 1,1 --objective general:/tmp/alphatree_cli_costs.csv").exit_code == 2);
}

TEST_CASE("table dump matches the golden file byte for byte") {
  const char* dir = std::getenv("ALPHATREE_GOLDEN");
  REQUIRE_MESSAGE(dir != nullptr, "ALPHATREE_GOLDEN must point at tests/golden");
  std::ifstream is(std::string(dir) + "/construct_knuth_dump.json", std::ios::binary);
  REQUIRE(is.good());
  std::string golden((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  write_example();
  const auto res = run(std::string("construct -i ") + kExampleJson +
                       " --normalize --algo knuth --dump-tables");
  CHECK(res.exit_code == 0);
  CHECK(res.out == golden);
}

TEST_CASE("output bytes are deterministic across runs") {
  write_example();
  const std::string cmd =
      std::string("construct -i ") + kExampleJson + " --normalize --algo knuth --dump-tables";
  const auto a = run(cmd);
  const auto b = run(cmd);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  const auto t1 = run(std::string("bounds -i ") + kExampleJson + " --normalize");
  const auto t2 = run(std::string("bounds -i ") + kExampleJson + " --normalize");
  CHECK(t1.out == t2.out);
}

TEST_CASE("codebooks emitted by every constructor re-validate") {
  write_example();
  for (const char* algo : {"gm", "knuth", "hu-tucker", "garsia-wachs"}) {
    const auto res =
        run(std::string("construct -i ") + kExampleJson + " --normalize --algo " + algo);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"cost\": \"161/50\"") != std::string::npos);
  }
  for (const char* algo : {"gm", "horibe", "yeung", "bddv"}) {
    const auto res =
        run(std::string("approx -i ") + kExampleJson + " --normalize --algo " + algo);
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"codeword\"") != std::string::npos);
  }
}
