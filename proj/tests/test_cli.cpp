#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include <json.hpp>

#include "k3br/brauer.hpp"
#include "k3br/cli.hpp"
#include "k3br/literal.hpp"
#include "k3br/reference_tables.hpp"
#include "k3br/report.hpp"

using namespace k3br;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Outcome r = run(args);
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  return json::parse(r.out);
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, GOrderPrintsProvenance) {
  const Outcome r = run({"g-order", "-d", "-1", "3i"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  for (const char* key : {"order: 1\n", "A: 1\n", "h1: 1\n", "J: 3\n", "e-factor: 4\n"}) EXPECT_TRUE(contains(r.out, key)) << key;

  const json j = run_json({"g-order", "-d", "-1", "(7)"});
  EXPECT_EQ(j["A"], 2);
  EXPECT_EQ(j["order"], 2);
  EXPECT_EQ(j["command"], "g-order");
  EXPECT_EQ(j["schema"], kJsonSchema);
}

TEST(Cli, Splitting) {
  EXPECT_EQ(run({"splitting", "-d", "-1", "5"}).out, "Split\n");
  EXPECT_EQ(run({"splitting", "-d", "-1", "3"}).out, "Inert\n");
  EXPECT_EQ(run({"splitting", "-d", "-1", "2"}).out, "Ramified\n");
  EXPECT_EQ(run_json({"splitting", "-d", "-3", "7"})["splitting"], "Split");
  EXPECT_EQ(run({"splitting", "-d", "-1", "6"}).code, cli::kExitValidation);
}

TEST(Cli, FieldInfo) {
  const json j = run_json({"field-info", "-d", "-5"});
  EXPECT_EQ(j["D"], -20);
  EXPECT_EQ(j["class_number"], 2);
  EXPECT_TRUE(contains(run({"field-info", "-d", "-23"}).out, "class number: 3"));
  EXPECT_EQ(run({"field-info", "-d", "5"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"field-info", "-d", "-4"}).code, cli::kExitValidation);  // not squarefree
}

TEST(Cli, IdealOps) {
  EXPECT_EQ(run({"ideal-op", "-d", "-1", "mul", "2r", "(3)"}).out, "2r*3i\n");
  EXPECT_EQ(run({"ideal-op", "-d", "-1", "div", "2r", "(3)"}).out, "2r*3i^-1\n");
  EXPECT_EQ(run({"ideal-op", "-d", "-1", "gcd", "2r^3*5s", "2r*(5)"}).out, "2r*5s\n");
  EXPECT_EQ(run({"ideal-op", "-d", "-1", "lcm", "2r^3", "2r*5s"}).out, "2r^3*5s\n");
  EXPECT_EQ(run({"ideal-op", "-d", "-1", "conj", "5s^2"}).out, "5t^2\n");
  const Outcome show = run({"ideal-op", "-d", "-1", "show", "(2+w)"});
  EXPECT_EQ(show.out.rfind("ideal: 5t\nnorm: 5\n", 0), 0u) << show.out;
  EXPECT_TRUE(contains(show.out, "group: Z/5\n"));
  const json div = run_json({"ideal-op", "-d", "-1", "divides", "2r", "2r^3"});
  EXPECT_TRUE(div.dump().find("true") != std::string::npos);
  EXPECT_EQ(run({"ideal-op", "-d", "-1", "frobnicate", "2r"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"ideal-op", "-d", "-1", "mul", "2r"}).code, cli::kExitValidation);
}

TEST(Cli, IdealLiteralsRoundTripThroughJson) {
  for (const std::int64_t d : {-1, -3, -5, -23}) {
    const ImQuadField E = make_field(d);
    const json j = run_json({"enumerate", "-d", std::to_string(d), "-n", "2"});
    for (const auto& k : j["kept"]) {
      const std::string lit = k["ideal"].get<std::string>();
      EXPECT_EQ(format_ideal(parse_ideal(E, lit)), lit);
      EXPECT_EQ(run({"ideal-op", "-d", std::to_string(d), "show", lit}).out.rfind("ideal: " + lit + "\n", 0), 0u);
    }
  }
}

TEST(Cli, ParseErrorsNameTokenAndPosition) {
  const Outcome r = run({"ideal-op", "-d", "-1", "show", "2r 3i"});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_TRUE(contains(r.err, "position 3")) << r.err;
  EXPECT_TRUE(contains(r.err, "3i")) << r.err;

  const Outcome g = run({"g-order", "-d", "-1", "5q"});
  EXPECT_EQ(g.code, cli::kExitValidation);
  EXPECT_TRUE(contains(g.err, "position 1")) << g.err;

  const Outcome l = run({"lattice", "-d", "-1", "lat((1); alpha=1; J=2q)"});
  EXPECT_EQ(l.code, cli::kExitValidation);
  EXPECT_TRUE(contains(l.err, "position 21")) << l.err;
}

TEST(Cli, EnumerateGaussian) {
  const Outcome r = run({"enumerate", "-d", "-1", "-n", "1"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto& ref = reference_case("gaussian");
  EXPECT_TRUE(contains(r.out, "kept: " + std::to_string(ref.kept.size()) + "\n"));
  const ImQuadField E = make_field(-1);
  for (const auto& k : ref.kept) EXPECT_TRUE(contains(r.out, "  " + format_ideal(parse_ideal(E, k)) + "  ")) << k;
}

TEST(Cli, UncertifiedExitsTwoUnlessForced) {
  const Outcome e = run({"enumerate", "-d", "-1", "-n", "1", "--two-exp-cap", "2"});
  EXPECT_EQ(e.code, cli::kExitUncertified);
  EXPECT_TRUE(contains(e.out, "certified: no"));
  const Outcome b = run({"brauer", "-d", "-1", "-n", "1", "--two-exp-cap", "2"});
  EXPECT_EQ(b.code, cli::kExitUncertified);
  EXPECT_TRUE(contains(b.err, "not certified"));
  const Outcome f = run({"brauer", "-d", "-1", "-n", "1", "--two-exp-cap", "2", "--force-uncertified", "--md"});
  EXPECT_EQ(f.code, cli::kExitOk);
  EXPECT_TRUE(contains(f.out, "uncertified"));
  EXPECT_EQ(run({"hilbert-brauer", "-d", "-1", "--norm-bound", "200", "--residue-bound", "50"}).code,
            cli::kExitUncertified);
}

TEST(Cli, BrauerEisensteinJson) {
  const json j = run_json({"brauer", "-d", "-3", "-n", "1"});
  EXPECT_EQ(j["certified"], true);
  bool found = false;
  for (const auto& g : j["groups"]) found |= g["invariants"] == json::array({3, 9});
  EXPECT_TRUE(found);
  // the computed list has the tabulated nine plus Z/7
  EXPECT_EQ(j["groups"].size(), 10u);
}

TEST(Cli, BrauerGaussianMarkdown) {
  const Outcome r = run({"brauer", "-d", "-1", "-n", "1", "--md"});
  ASSERT_EQ(r.code, cli::kExitOk);
  std::vector<Invariants> ref;
  for (const auto& g : reference_case("gaussian").groups) ref.push_back(parse_group_notation(g));
  EXPECT_TRUE(contains(r.out, group_table_markdown(distinct_sorted(ref))));
  EXPECT_TRUE(contains(r.out, "| 16 | "));
  EXPECT_FALSE(contains(r.out, "| 17 | "));
}

TEST(Cli, BadArguments) {
  EXPECT_EQ(run({}).code, cli::kExitValidation);
  EXPECT_EQ(run({"frob"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"enumerate", "-d", "-1"}).code, cli::kExitValidation);  // -n missing
  EXPECT_EQ(run({"enumerate", "-d", "-1", "-n", "0"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"enumerate", "-d", "-1", "-n", "x"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"g-order", "-d", "-1", "(1/3)"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"g-order", "-d", "-1"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"splitting", "-d", "-1", "5", "--bogus"}).code, cli::kExitValidation);
}

TEST(Cli, Lattice) {
  const Outcome r = run({"lattice", "-d", "-1", "lat((1); alpha=1; J=2r^-2)", "--scale", "1+w"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(contains(r.out, "lattice: lat(2r; alpha=1/2; J=2r^-1)"));
  EXPECT_TRUE(contains(r.out, "level ideal: (1)"));

  const json j = run_json({"lattice", "-d", "-5", "lat((1); alpha=1; J=2r^-2*5r^-1)", "--equivalent",
                           "lat(2r; alpha=1/2; J=2r^-3*5r^-1)"});
  EXPECT_TRUE(j["equivalent"].is_null());
  EXPECT_EQ(j["det"], "20");
  const json k = run_json({"lattice", "-d", "-1", "lat((1); alpha=1; J=2r^-2)", "--equivalent",
                           "lat(2r; alpha=1/2; J=2r^-1)"});
  EXPECT_TRUE(k["equivalent"].is_string());
}

TEST(Cli, HilbertBrauer) {
  const json j = run_json({"hilbert-brauer", "-d", "-7", "--norm-bound", "50"});
  std::set<std::string> ideals;
  for (const auto& e : j["entries"]) ideals.insert(e["ideal"].get<std::string>());
  EXPECT_TRUE(ideals.count("(1)"));
  EXPECT_TRUE(ideals.count("7r"));
  EXPECT_FALSE(ideals.count("11s"));
  EXPECT_FALSE(ideals.count("(5)"));
}

TEST(Cli, VerifyReportsEveryCheck) {
  const Outcome r = run({"verify-paper"});
  const auto results_line = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  EXPECT_TRUE(contains(results_line, "checks passed"));
  EXPECT_TRUE(contains(r.out, "PASS gaussian"));
  // exit status mirrors the check results
  const bool all_pass = !contains(r.out, "FAIL ");
  EXPECT_EQ(r.code, all_pass ? cli::kExitOk : cli::kExitValidation);
  const Outcome jr = run({"verify-paper", "--json"});
  EXPECT_EQ(jr.code, r.code);
  const json j = json::parse(jr.out);
  EXPECT_EQ(j["command"], "verify-paper");
  int failed = 0;
  for (const auto& c : j["checks"]) failed += c["passed"] ? 0 : 1;
  EXPECT_EQ(j["failed"], failed);
}
