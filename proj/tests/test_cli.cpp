#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace erne;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream file(std::string(ERNE_GOLDEN_DIR) + "/" + name);
  REQUIRE(file);
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

const std::string kTwoChain = "carrier: x1 z\nx1 < z\n";

}  // namespace

TEST_CASE("count reports matching sides") {
  const auto a2 = run({"count", "--Q", "antichain2", "--X", "1"});
  CHECK(a2.code == cli::kExitOk);
  CHECK(a2.out == golden("count_antichain2_x1.txt"));

  const auto c2 = run({"count", "--Q", "chain2", "--X", "1", "--json"});
  CHECK(c2.code == cli::kExitOk);
  CHECK(c2.out == golden("count_chain2_x1.json"));

  const auto empty = run({"count", "--Q", "empty", "--X", "2"});
  CHECK(empty.out.rfind("lhs=3 rhs=3 equal\n", 0) == 0);

  const auto lam = run({"count", "--Q", "lambda", "--X", "1"});
  CHECK(lam.out.rfind("lhs=12 rhs=12 equal\n", 0) == 0);
  CHECK(lam.out.find("lhs multiplicities: 1 1 1 1 1 1 2 2 2\n") != std::string::npos);
}

TEST_CASE("count reads the anchor from a file or stdin") {
  const auto r = run({"count", "--Q", "-", "--X", "x1"}, "carrier: a b\na < b\n");
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.rfind("lhs=6 rhs=6 equal\n", 0) == 0);
}

TEST_CASE("map tau and sigma") {
  const auto t = run({"map", "tau", "--in", "-", "--X", "x1"}, kTwoChain);
  CHECK(t.code == cli::kExitOk);
  CHECK(t.out == "carrier: x1 z\n");

  const std::string input = "carrier: z1 x1 y\nx1 < y\n";
  const auto s = run({"map", "sigma", "--in", "-", "--X", "x1", "--apex", "y", "--check"}, input);
  CHECK(s.code == cli::kExitOk);
  CHECK(s.out == "carrier: z1 x1\nx1 < z1\n");
  const auto back = run({"map", "sigma-inverse", "--in", "-", "--X", "x1", "--check"}, s.out);
  CHECK(back.code == cli::kExitOk);
  CHECK(back.out == input);

  const auto bad = run({"map", "sigma", "--in", "-", "--X", "x1", "--apex", "y"}, "carrier: z1 x1 y\n");
  CHECK(bad.code == cli::kExitFailed);
  CHECK(bad.err.find("NotInFamily") != std::string::npos);
  CHECK(bad.err.find("witness: x1") != std::string::npos);
}

TEST_CASE("map phi-inverse lists the lower-end map") {
  const auto r = run({"map", "phi-inverse", "--in", "-", "--X", "x1"}, kTwoChain);
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("carrier: x1\n") == 0);
  CHECK(r.out.find("map:\n") != std::string::npos);
}

TEST_CASE("export-dot") {
  const auto chain = run({"export-dot", "--in", "-"}, kTwoChain);
  CHECK(chain.code == cli::kExitOk);
  CHECK(count_of(chain.out, " -> ") == 1);
  CHECK(chain.out.rfind("digraph poset {\n  rankdir=BT;\n", 0) == 0);

  const auto anti = run({"export-dot", "--in", "-"}, "carrier: a b c\n");
  CHECK(count_of(anti.out, " -> ") == 0);
  CHECK(count_of(anti.out, "rank=same") == 1);

  const auto roles = run({"export-dot", "--in", "-", "--X", "z1", "--Z", "z2", "--apex", "z3"},
                         "carrier: z1 z2 z3\nz1 < z2\nz3 < z2\n");
  CHECK(roles.out == golden("lambda_roles.dot"));
}

TEST_CASE("verify and enumerate") {
  const auto th = run({"verify", "theorem", "--maxZ", "2", "--maxX", "1"});
  CHECK(th.code == cli::kExitOk);
  CHECK(th.out.find(", 0 failures\n") != std::string::npos);

  const auto part = run({"verify", "partition", "--Q", "chain2", "--X", "1", "--system", "both"});
  CHECK(part.code == cli::kExitOk);
  CHECK(part.out.find("partition convex: 2 blocks, 6 relations, target 6\n") != std::string::npos);
  CHECK(part.out.find("partition maxstar:") != std::string::npos);

  CHECK(run({"enumerate", "--n", "4", "--count-only"}).out == "219\n");
  CHECK(run({"enumerate", "--family", "mstar", "--Q", "antichain2", "--X", "1", "--apex", "y", "--count-only"}).out ==
        "7\n");
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bogus"}).code == cli::kExitUsage);
  CHECK(run({"count", "--Q", "nonsense"}).code == cli::kExitUsage);
  CHECK(run({"enumerate", "--n", "9"}).code == cli::kExitUsage);
  const auto parse = run({"export-dot", "--in", "-"}, "carrier: a b\na < c\n");
  CHECK(parse.code == cli::kExitUsage);
  CHECK(parse.err.find("line 2: unknown element 'c'") != std::string::npos);
  CHECK(run({"--help"}).code == cli::kExitOk);
}
