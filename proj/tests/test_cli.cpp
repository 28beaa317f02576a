#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wfriend/cli.hpp"

using namespace wfriend;

namespace {

const std::filesystem::path kFixtures = WFRIEND_FIXTURES;
const std::filesystem::path kGolden = WFRIEND_GOLDEN;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string fixture(const std::string& name) { return (kFixtures / name).string(); }

}  // namespace

TEST(Golden, MachineReports) {
  const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
      {"decompositions.json", {"--format", "machine", "decompositions"}},
      {"lhv.json", {"--format", "machine", "lhv"}},
      {"hidden_sweep.json", {"--format", "machine", "hidden-qubit", "--sweep", "11"}},
      {"hidden_gamma0.json", {"--format", "machine", "hidden-qubit", "--gamma", "0"}},
      {"statements_systems.json",
       {"--format", "machine", "statements", fixture("valid/friends_as_systems.scn")}},
      {"statements_bypass.json",
       {"--format", "machine", "statements", fixture("valid/friends_as_agents.scn"),
        "--bypass-gate"}},
  };
  for (const auto& [golden, args] : cases) {
    SCOPED_TRACE(golden);
    const auto r = run(args);
    EXPECT_EQ(r.out, slurp(kGolden / golden));
  }
}

TEST(Determinism, RepeatedRunsAreByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "machine", "decompositions"},
           {"--format", "machine", "statements", fixture("valid/hidden_qubit.scn")}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Decompositions, DiscrepancyAndWignerRow) {
  const auto r = run({"--format", "machine", "decompositions"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["results"]["max_discrepancy"].get<double>(), 1e-12);
  const auto& terms = j["results"]["decompositions"][3]["terms"];
  EXPECT_EQ(terms[3]["fbar_side"], "failbar");
  EXPECT_EQ(terms[3]["f_side"], "fail");
  EXPECT_NEAR(terms[3]["coefficient"]["re"].get<double>(), 0.866025403784, 1e-12);
}

TEST(Statements, ExitCodes) {
  EXPECT_EQ(run({"statements", fixture("valid/friends_as_systems.scn")}).code, kExitOk);
  EXPECT_EQ(run({"statements", fixture("valid/friends_as_agents.scn")}).code, kExitOk);
  const auto bypass = run({"statements", fixture("valid/friends_as_systems.scn"), "--bypass-gate"});
  EXPECT_EQ(bypass.code, kExitContradiction);
  EXPECT_NE(bypass.out.find("CONTRADICTION"), std::string::npos);
  EXPECT_NE(bypass.out.find("GATE BYPASSED"), std::string::npos);
}

TEST(Statements, GateRejectionIsAResult) {
  const auto r = run({"--format", "machine", "statements", fixture("valid/agents_measured.scn")});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_FALSE(j["results"]["plan_verdict"]["admitted"].get<bool>());
  EXPECT_EQ(j["results"]["plan_verdict"]["violations"].size(), 2u);
}

TEST(Statements, MalformedFixturesExitTwoWithPosition) {
  int seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(kFixtures / "malformed")) {
    SCOPED_TRACE(entry.path().string());
    const auto r = run({"statements", entry.path().string()});
    EXPECT_EQ(r.code, kExitInputError);
    // path:line:col: error: ...
    const auto prefix = entry.path().string() + ":";
    ASSERT_EQ(r.err.rfind(prefix, 0), 0u) << r.err;
    int line = 0, col = 0;
    EXPECT_EQ(std::sscanf(r.err.c_str() + prefix.size(), "%d:%d: error:", &line, &col), 2)
        << r.err;
    EXPECT_GT(line, 0);
    EXPECT_GT(col, 0);
    ++seen;
  }
  EXPECT_GE(seen, 8);
}

TEST(Statements, MissingFileAndMissingFriends) {
  EXPECT_EQ(run({"statements", fixture("does_not_exist.scn")}).code, kExitInputError);
  const auto tmp = std::filesystem::temp_directory_path() / "wfriend_no_friends.scn";
  std::ofstream(tmp) << "entity coin coin\n";
  EXPECT_EQ(run({"statements", tmp.string()}).code, kExitInputError);
  std::filesystem::remove(tmp);
}

TEST(HiddenQubit, GammaEndpoints) {
  auto j = nlohmann::json::parse(run({"--format", "machine", "hidden-qubit", "--gamma", "1"}).out);
  EXPECT_NEAR(j["results"]["statistics"]["p_up_given_okbar"].get<double>(), 1.0, 1e-9);
  j = nlohmann::json::parse(run({"--format", "machine", "hidden-qubit", "--gamma", "0"}).out);
  EXPECT_NEAR(j["results"]["statistics"]["p_up_given_okbar"].get<double>(), 1.0 / 3, 1e-9);
}

TEST(HiddenQubit, SweepRows) {
  const auto r = run({"--format", "csv", "hidden-qubit", "--sweep", "11"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 12u);
  EXPECT_EQ(lines[1].rfind("0,", 0), 0u);
  EXPECT_EQ(lines[11].rfind("1,", 0), 0u);
}

TEST(HiddenQubit, InputErrors) {
  EXPECT_EQ(run({"hidden-qubit", "--gamma", "1.5"}).code, kExitInputError);
  EXPECT_EQ(run({"hidden-qubit", "--gamma", "-0.5"}).code, kExitInputError);
  EXPECT_EQ(run({"hidden-qubit", "--sweep", "1"}).code, kExitInputError);
  EXPECT_EQ(run({"hidden-qubit"}).code, kExitInputError);
  EXPECT_EQ(run({"hidden-qubit", "--gamma", "0.5", "--sweep", "3"}).code, kExitInputError);
  EXPECT_EQ(run({"hidden-qubit", "--gamma", "abc"}).code, kExitInputError);
}

TEST(Lhv, VerdictIsExitZero) {
  const auto r = run({"--format", "machine", "lhv"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["results"]["verdict"]["contradiction"].get<bool>());
  EXPECT_FALSE(j["results"]["verdict"]["admissible"].empty());
  EXPECT_TRUE(j["results"]["constraints_match_reference"].get<bool>());
}

TEST(Usage, ErrorsAndHelp) {
  EXPECT_EQ(run({}).code, kExitInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(run({"--format", "xml", "lhv"}).code, kExitInputError);
  EXPECT_EQ(run({"--format", "csv", "lhv"}).code, kExitInputError);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Output, WritesFile) {
  const auto tmp = std::filesystem::temp_directory_path() / "wfriend_lhv.json";
  const auto r = run({"--format", "machine", "--output", tmp.string(), "lhv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(slurp(tmp), run({"--format", "machine", "lhv"}).out);
  std::filesystem::remove(tmp);
}

TEST(Human, SixSignificantDigitsAndElapsed) {
  const auto r = run({"decompositions"});
  EXPECT_NE(r.out.find("0.866025"), std::string::npos);
  EXPECT_EQ(r.out.find("0.8660254"), std::string::npos);
  EXPECT_NE(r.out.find("elapsed"), std::string::npos);
}
