#include "hedgelab/cli/commands.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

namespace hedgelab {
namespace {

std::string fixture(const std::string& name) { return std::string(HEDGELAB_FIXTURES) + "/" + name; }

CommandRequest request(std::string command, const std::string& model, std::string sub = "") {
  CommandRequest r;
  r.command = std::move(command);
  r.subcommand = std::move(sub);
  r.model_path = fixture(model);
  return r;
}

Json without_timing(Json report) {
  report.erase("timing");
  return report;
}

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hedgelab");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  CliRun run;
  run.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

TEST(Documents, FixturesRoundTrip) {
  for (const char* name : {"menu_example.json", "binomial.json", "arbitrage.json", "two_period.json", "topology.json"}) {
    const auto json = read_json_file(fixture(name));
    const auto doc = parse_document(json);
    const auto again = serialize_document(doc);
    EXPECT_EQ(serialize_document(parse_document(again)), again) << name;
    EXPECT_TRUE(check_document(json).empty()) << name;
  }
}

TEST(Documents, ValidationListsEveryViolation) {
  const auto problems = check_document(read_json_file(fixture("broken_probability.json")));
  ASSERT_FALSE(problems.empty());
  EXPECT_EQ(problems[0], "probabilities sum to 9/10 ≠ 1");
  const auto refinement = check_document(read_json_file(fixture("broken_refinement.json")));
  ASSERT_FALSE(refinement.empty());
  EXPECT_NE(refinement[0].find("{a,c}"), std::string::npos);
}

TEST(Documents, StructuralErrorsNameTheirLocation) {
  auto json = read_json_file(fixture("binomial.json"));
  json["prices"][1][0][0] = "x";
  try {
    parse_document(json);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("prices[1]"), std::string::npos) << e.what();
  }
}

TEST(Commands, ReportShapeAndSeedEcho) {
  auto r = request("check-aip", "binomial.json");
  r.seed = 17;
  const auto report = run_command(r);
  EXPECT_EQ(report["command"], "check-aip");
  EXPECT_EQ(report["verdict"], "holds");
  EXPECT_EQ(report["seed"], 17);
  EXPECT_TRUE(report.contains("timing"));
  EXPECT_TRUE(report.contains("tool_version"));
  EXPECT_TRUE(report.contains("certificates"));
}

TEST(Commands, DeterministicApartFromTiming) {
  auto r = request("check-aip-stopping", "two_period.json");
  r.budget = 16;
  r.seed = 3;
  EXPECT_EQ(without_timing(run_command(r)), without_timing(run_command(r)));
  auto sub = request("maxingale", "two_period.json", "strong");
  sub.process = "running_max";
  sub.budget = 8;
  EXPECT_EQ(without_timing(run_command(sub)), without_timing(run_command(sub)));
}

TEST(Commands, BinomialPriceAndMeasure) {
  const auto price = run_command(request("price", "binomial.json"));
  EXPECT_EQ(price["verdict"], "finite");
  EXPECT_EQ(price["certificates"]["price_process"]["0"]["up"], "1/3");
  EXPECT_EQ(price["certificates"]["hedge"]["0"][0]["theta"][0], "2/3");
  EXPECT_EQ(run_command(request("find-emm", "binomial.json"))["verdict"], "found");
}

TEST(Commands, MenuExampleMembership) {
  auto r = request("price-membership", "menu_example.json");
  r.price = "one_A";
  const auto report = run_command(r);
  EXPECT_EQ(report["verdict"], "member");
  EXPECT_EQ(report["certificates"]["raw_menu_member"], false);
  r.price = "one_A_minus_one";
  EXPECT_EQ(run_command(r)["verdict"], "not-member");
  EXPECT_EQ(run_command(request("closed-price", "menu_example.json"))["verdict"], "invariant");
}

TEST(Commands, InputErrorsThrow) {
  EXPECT_THROW(run_command(request("check-aip", "missing.json")), InputError);
  EXPECT_THROW(run_command(request("check-aip", "broken_probability.json")), InputError);
  auto r = request("price-membership", "menu_example.json");
  r.price = "no_such_variable";
  EXPECT_THROW(run_command(r), InputError);
  EXPECT_THROW(run_command(request("no-such-command", "binomial.json")), InputError);
}

TEST(Cli, EveryCommandReachesAVerdict) {
  struct Case {
    std::vector<std::string> args;
    const char* verdict;
  };
  const std::vector<Case> cases{
      {{"check-aip-stopping", "--model", fixture("two_period.json")}, "holds"},
      {{"check-nupbr", "--model", fixture("arbitrage.json"), "--m", "1/2"}, "fails"},
      {{"price-menu", "--model", fixture("menu_example.json")}, "priced"},
      {{"topology", "pdist", "--model", fixture("topology.json"), "--lhs", "zero", "--rhs", "X"}, "0/1"},
      {{"topology", "converges", "--model", fixture("topology.json"), "--sequence", "diverging"}, "divergent"},
      {{"topology", "is-limit", "--model", fixture("topology.json"), "--sequence", "shrinking", "--limit", "zero"},
       "not-limit"},
      {{"topology", "cauchy", "--model", fixture("topology.json"), "--sequence", "alternating"}, "not-cauchy"},
      {{"maxingale", "sub", "--model", fixture("two_period.json"), "--process", "increasing"}, "sub-maxingale"},
      {{"maxingale", "lemma-suite", "--model", fixture("two_period.json"), "--process", "running_max"}, "verified"},
      {{"experiment", "strong-gap", "--depth", "2"}, "no-gap-found"},
  };
  for (const auto& c : cases) {
    const auto run = cli(c.args);
    ASSERT_EQ(run.code, 0) << c.args[0] << ": " << run.err;
    EXPECT_EQ(Json::parse(run.out)["verdict"], c.verdict) << c.args[0] << " " << c.args[1];
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"check-aip", "--model", fixture("binomial.json")}).code, 0);
  EXPECT_EQ(cli({"check-aip", "--model", fixture("arbitrage.json")}).code, 0);
  const auto bad = cli({"check-aip", "--model", fixture("broken_refinement.json")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("{a,c}"), std::string::npos);
  EXPECT_EQ(cli({"validate", "--model", fixture("broken_refinement.json")}).code, 0);
  EXPECT_NE(cli({"check-aip", "--no-such-flag"}).code, 0);
}

TEST(Cli, HumanRendering) {
  const auto run = cli({"check-aip", "--model", fixture("binomial.json"), "--human"});
  EXPECT_EQ(run.code, 0);
  EXPECT_NE(run.out.find("verdict: holds"), std::string::npos) << run.out;
}

}  // namespace
}  // namespace hedgelab
