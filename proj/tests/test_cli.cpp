#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "hodgevf/cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "hodgevf");
  std::ostringstream out, err;
  int code = hodgevf::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  Outcome o = run(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return json::parse(o.out);
}

}  // namespace

TEST(Cli, InvariantsReport) {
  json j = run_json({"invariants", "-f", "x^2+y^3"});
  EXPECT_EQ(j["invariants"]["mlct"], "5/6");
  EXPECT_EQ(j["invariants"]["lct"], "5/6");
  EXPECT_EQ(j["invariants"]["mu"], 2);
  EXPECT_EQ(j["input"]["weights"], json::array({"1/2", "1/3"}));
  EXPECT_EQ(j["input"]["variables"], json::array({"x", "y"}));
  EXPECT_TRUE(j.contains("version"));
  EXPECT_TRUE(j["verifications"].empty());
}

TEST(Cli, TopLevelKeysInFixedOrder) {
  json j = run_json({"spectrum", "-f", "x^3+y^3+z^3"});
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  // nlohmann::json sorts keys on parse, so compare as a set
  EXPECT_EQ(keys, (std::vector<std::string>{"input", "invariants", "result", "verifications", "version"}));
  EXPECT_EQ(j["result"]["total"], 8);
}

TEST(Cli, TheoremOnePasses) {
  Outcome o = run({"verify", "theorem1", "-f", "x^3+y^3+z^3", "--p", "2", "--max-degree", "12", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  json j = json::parse(o.out);
  ASSERT_EQ(j["verifications"].size(), 1u);
  EXPECT_EQ(j["verifications"][0]["status"], "pass");
  EXPECT_EQ(j["verifications"][0]["details"]["max_degree"], "4");
  EXPECT_EQ(j["verifications"][0]["details"]["degrees_checked"], 13);
}

TEST(Cli, WeightedMaxDegree) {
  json j = run_json({"verify", "theorem1", "-f", "x^3+y^3+z^3", "--p", "1", "--max-degree", "5/3"});
  EXPECT_EQ(j["verifications"][0]["details"]["max_degree"], "5/3");
  EXPECT_EQ(j["verifications"][0]["details"]["degrees_checked"], 6);
}

TEST(Cli, MembershipQueries) {
  json j = run_json({"vfilt", "member", "-f", "x^3+y^3+z^3", "-g", "x*(y^3+z^3)", "--alpha", "3"});
  EXPECT_EQ(j["result"]["member"], false);
  j = run_json({"vfilt", "member", "-f", "x^3+y^3+z^3", "-g", "x^4", "--alpha", "3"});
  EXPECT_EQ(j["result"]["member"], true);
  j = run_json({"vfilt", "order", "-f", "x^2+y^2+z^2", "-g", "x", "--ceiling", "4"});
  EXPECT_EQ(j["result"]["order"], "5/2");
  EXPECT_EQ(j["result"]["above_ceiling"], false);
}

TEST(Cli, LevelJumpingAndMultiplier) {
  json j = run_json({"vfilt", "jumping", "-f", "x^2+y^2+z^2", "--ceiling", "4"});
  ASSERT_EQ(j["result"]["jumps"].size(), 3u);
  EXPECT_EQ(j["result"]["jumps"][2]["alpha"], "7/2");
  EXPECT_EQ(j["result"]["jumps"][2]["gr_dim"], 6);
  j = run_json({"vfilt", "level", "-f", "x^2+y^2+z^2", "--alpha", "5/2"});
  EXPECT_EQ(j["result"]["groebner_basis"], json::array({"z", "y", "x"}));
  EXPECT_EQ(j["result"]["codim"], 1);
  j = run_json({"multiplier", "-f", "x^2+y^3", "--alpha", "5/6"});
  EXPECT_EQ(j["result"]["colength"], 1);
}

TEST(Cli, HodgeSlices) {
  json j = run_json({"hodge", "slice", "-f", "x^3+y^3+z^3", "--p", "2", "--max-degree", "4"});
  auto slices = j["result"]["slices"];
  ASSERT_EQ(slices.size(), 5u);
  EXPECT_EQ(slices[4]["degree"], "4/3");
  EXPECT_EQ(slices[4]["dim"], 6);
  EXPECT_EQ(slices[4]["ambient_dim"], 15);
}

TEST(Cli, RemarkTwoAndOracle) {
  json j = run_json({"verify", "remark-ii"});
  EXPECT_EQ(j["verifications"][0]["status"], "pass");
  j = run_json({"oracle", "spectrum", "--exponents", "2,3"});
  EXPECT_EQ(j["result"]["spectrum"][0]["alpha"], "5/6");
  j = run_json({"oracle", "member", "--exponents", "3,3,3", "-g", "x1^4", "--alpha", "3"});
  EXPECT_EQ(j["result"]["member"], true);
  j = run_json({"oracle", "member", "-f", "x^2+y^2+z^2", "-g", "x", "--alpha", "7/2"});
  EXPECT_EQ(j["result"]["member"], false);
}

TEST(Cli, VerifyAllSkipsInapplicableBlocks) {
  json j = run_json({"verify", "all", "-f", "x^2+y^3"});
  std::map<std::string, std::string> status;
  for (auto& v : j["verifications"]) status[v["name"]] = v["status"];
  EXPECT_EQ(status["theorem1 p=2"], "pass");
  EXPECT_EQ(status["eq242 p=0"], "skipped");
  EXPECT_EQ(status["remark_ii"], "skipped");
  EXPECT_EQ(status["corollary1"], "pass");
  EXPECT_EQ(status["oracle"], "pass");
  EXPECT_EQ(status["properties"], "pass");
}

TEST(Cli, VerifyAllIsDeterministic) {
  Outcome a = run({"verify", "all", "-f", "x^3+y^3+z^3", "--format", "json"});
  Outcome b = run({"verify", "all", "-f", "x^3+y^3+z^3", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TextFormatIsDefault) {
  Outcome o = run({"vfilt", "member", "-f", "x^3+y^3+z^3", "-g", "x*(y^3+z^3)", "--alpha", "3"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("member: false"), std::string::npos);
  EXPECT_NE(o.out.find("mlct: 1"), std::string::npos);
}

TEST(Cli, InputErrorsExitWithOne) {
  Outcome o = run({"invariants", "-f", "x^^2"});
  EXPECT_EQ(o.code, hodgevf::cli::kInputError);
  EXPECT_NE(o.err.find("offset 2"), std::string::npos);
  EXPECT_EQ(run({"invariants", "-f", "x+y"}).code, 1);
  EXPECT_EQ(run({"invariants"}).code, 1);
  EXPECT_EQ(run({"invariants", "-f", "x^2+y^3", "--bogus"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"vfilt", "member", "-f", "x^2+y^3", "-g", "x"}).code, 1);
  EXPECT_EQ(run({"invariants", "-f", "x^2+y^3", "--weights", "1/2"}).code, 1);
  EXPECT_EQ(run({"multiplier", "-f", "x^2+y^3", "--alpha", "3/2"}).code, 1);
}

TEST(Cli, PreconditionViolationsNameTheCondition) {
  Outcome o = run({"verify", "eq242", "-f", "x^2+y^3"});
  EXPECT_EQ(o.code, 1);
  EXPECT_NE(o.err.find("precondition"), std::string::npos);
  EXPECT_NE(o.err.find("homogeneous"), std::string::npos);
  EXPECT_EQ(run({"verify", "remark-i", "-f", "x^3+y^3+z^3"}).code, 1);
  EXPECT_EQ(run({"verify", "oracle", "-f", "x^2+x*y^2+y^4"}).code, 1);
}

TEST(Cli, ExplicitVariablesAndWeights) {
  json j = run_json({"invariants", "-f", "y^3+x^2", "--vars", "x,y", "--weights", "1/2,1/3"});
  EXPECT_EQ(j["input"]["variables"], json::array({"x", "y"}));
  EXPECT_EQ(j["invariants"]["milnor_basis"], json::array({"1", "y"}));
}

TEST(Cli, HelpExitsCleanly) {
  Outcome o = run({"--help"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("verify"), std::string::npos);
}
