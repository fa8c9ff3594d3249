#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fixtures.hpp"
#include "leavitt/cli.hpp"

namespace leavitt {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "leavitt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string kOneLoop = fixtures::quiver_file("one_loop");
const std::string kTwoLoops = fixtures::quiver_file("two_loops");

TEST(Validate, PassesOnShippedQuivers) {
  CliRun r = invoke({"validate", kOneLoop});
  EXPECT_EQ(r.code, kExitPass);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["command"], "validate");
  EXPECT_EQ(j["quiver"], "one_loop");
}

TEST(Validate, SourceVertexFails) {
  std::string path = write_temp("leavitt_cli_source.quiver", "quiver s\nvertex 1\nvertex 2\narrow b : 1 -> 2\narrow c : 2 -> 2\n");
  CliRun r = invoke({"validate", path});
  EXPECT_EQ(r.code, kExitFail);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failures"][0], "vertex 1 is a source");
}

TEST(Validate, MissingFileIsAUsageError) {
  CliRun r = invoke({"validate", fixtures::quiver_file("missing")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("cannot open"), std::string::npos);
}

TEST(Validate, ParseErrorIsAUsageError) {
  std::string path = write_temp("leavitt_cli_bad.quiver", "vertex 1\narrow a : 1 -> 7\n");
  EXPECT_EQ(invoke({"validate", path}).code, kExitUsage);
}

TEST(Verify, FullSuiteOnTwoLoops) {
  CliRun r = invoke({"verify", kTwoLoops, "--suite", "all", "--lmin", "-2", "--lmax", "2", "--N", "4", "--seed", "7"});
  ASSERT_EQ(r.code, kExitPass) << r.out << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["field"], "Q");
  EXPECT_EQ(j["seed"], 7);
  ASSERT_EQ(j["suites"].size(), 4u);
  for (const auto& s : j["suites"]) EXPECT_EQ(s["status"], "pass") << s["suite"];
}

TEST(Verify, OneLoopCohomologyWideWindow) {
  CliRun r = invoke({"verify", kOneLoop, "--suite", "cohomology", "--lmin", "-3", "--lmax", "3", "--N", "6"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["suites"].size(), 1u);
  const auto& certs = j["suites"][0]["certificates"];
  const auto& report = certs[certs.size() - 1];
  EXPECT_EQ(report["check"], "quasi-balanced");
  EXPECT_EQ(report["children"].size(), 7u);
}

TEST(Verify, IsDeterministic) {
  std::vector<std::string> args{"verify", kTwoLoops, "--suite", "bimodule", "--seed", "3", "--samples", "5"};
  EXPECT_EQ(invoke(args).out, invoke(args).out);
}

TEST(Verify, WritesToOutFile) {
  auto path = (std::filesystem::temp_directory_path() / "leavitt_cli_report.json").string();
  CliRun r = invoke({"verify", kOneLoop, "--suite", "lpa", "--out", path});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["suites"][0]["suite"], "lpa");
}

TEST(Verify, FieldFlagAndEnvironment) {
  CliRun flag = invoke({"verify", kOneLoop, "--suite", "lpa", "--field", "Fp:7"});
  EXPECT_EQ(nlohmann::json::parse(flag.out)["field"], "Fp:7");
  setenv("LEAVITT_FIELD", "Fp:11", 1);
  CliRun env = invoke({"verify", kOneLoop, "--suite", "lpa"});
  CliRun both = invoke({"verify", kOneLoop, "--suite", "lpa", "--field", "Q"});
  setenv("LEAVITT_FIELD", "bogus", 1);
  CliRun bad = invoke({"verify", kOneLoop, "--suite", "lpa"});
  unsetenv("LEAVITT_FIELD");
  EXPECT_EQ(nlohmann::json::parse(env.out)["field"], "Fp:11");
  EXPECT_EQ(nlohmann::json::parse(both.out)["field"], "Q");
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(Verify, InvalidFlagsAreUsageErrors) {
  EXPECT_EQ(invoke({"verify", kOneLoop, "--suite", "bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", kOneLoop, "--lmin", "2", "--lmax", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", kOneLoop, "--N", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", kOneLoop, "--field", "Fp:8"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
}

TEST(LpaMul, Examples) {
  CliRun r = invoke({"lpa-mul", kTwoLoops, "g\"a1\" r\"\"", "g\"\" r\"a1\""});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "e(1) - g\"a2\" r\"a2\"\n");
  EXPECT_EQ(invoke({"lpa-mul", kOneLoop, "g\"\" r\"a\"", "g\"a\" r\"\""}).out, "e(1)\n");
  std::string path = write_temp("leavitt_cli_cycle.quiver", format_quiver(fixtures::two_cycle()));
  EXPECT_EQ(invoke({"lpa-mul", path, "e(1)", "e(2)"}).out, "0\n");
  EXPECT_EQ(invoke({"lpa-mul", kOneLoop, "e(1)", "g\"b\" r\"\""}).code, kExitUsage);
}

TEST(Act, Examples) {
  CliRun r = invoke({"act", kTwoLoops, "e(1) z(p\"a1\", q\"\")", "g\"\" r\"a1\""});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "e(1) z(p\"\", q\"\") - e(1) z(p\"a2\", q\"a2\")\n");
  std::string path = write_temp("leavitt_cli_cycle2.quiver", format_quiver(fixtures::two_cycle()));
  EXPECT_EQ(invoke({"act", path, "e(1) z(p\"\", q\"\")", "e(2)"}).out, "0\n");
  EXPECT_EQ(invoke({"act", kTwoLoops, "e(1) z(p\"\", q\"\") + e(1) z(p\"\", q\"a1\")", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"act", kTwoLoops, "e(1) z(p\"a1\", q\"a1\")", "1"}).code, kExitUsage);
}

}  // namespace
}  // namespace leavitt
