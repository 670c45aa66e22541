#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "artin/cli.hpp"

using artin::Json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;

  Json json() const { return Json::parse(out); }
  Json error() const { return Json::parse(err).at("error"); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = artin::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("artin_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, BoundsWorkedValue) {
  Outcome r = run({"bounds", "--e", "7", "--h", "3"});
  ASSERT_EQ(r.status, 0) << r.err;
  Json j = r.json();
  EXPECT_EQ(j["schema"], artin::kSchema);
  EXPECT_EQ(j["t"], 2);
  EXPECT_EQ(j["r"], 3);
  EXPECT_EQ(j["lower"], 3);
  EXPECT_EQ(j["upper"], 7);
}

TEST(Cli, BoundsMarkdownIsOneRow) {
  Outcome r = run({"bounds", "--e", "7", "--h", "3", "--markdown"});
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("| artin-report/1 | bounds | 7 | 3 | 2 | 3 | 3 | 7 |"), std::string::npos) << r.out;
}

TEST(Cli, BoundsWithHilbertFunction) {
  Outcome r = run({"bounds", "--e", "7", "--h", "3", "--hf", "1,3,2,1"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.json()["hf_admissible"], true);
  EXPECT_TRUE(r.json().contains("v_lex"));
  EXPECT_EQ(run({"bounds", "--e", "7", "--h", "3", "--hf", "1,2,4"}).json()["hf_admissible"], false);
}

TEST(Cli, SemigroupTrivial) {
  Json j = run({"semigroup", "2,3"}).json();
  EXPECT_EQ(j["v"], 1);
  EXPECT_EQ(j["symmetric"], true);
  EXPECT_EQ(j["frobenius"], 1);
}

TEST(Cli, SemigroupCounterexample) {
  Json j = run({"semigroup", "7,8,10,19"}).json();
  EXPECT_EQ(j["v"], 7);
  EXPECT_EQ(j["rgs_report"]["r3"], "holds");
  Json k = run({"semigroup", "8,10,12,15"}).json();
  EXPECT_EQ(k["symmetric"], true);
  EXPECT_NE(k["v"], 5);
}

TEST(Cli, ErrorRecords) {
  Outcome gcd = run({"semigroup", "4,6"});
  EXPECT_EQ(gcd.status, artin::kExitFailure);
  EXPECT_EQ(gcd.error()["code"], "GcdNotOne");
  EXPECT_TRUE(gcd.out.empty());

  EXPECT_EQ(run({"semigroup", "4,x"}).error()["code"], "SyntaxError");
  EXPECT_EQ(run({"semigroup", "3,6,7"}).error()["code"], "NonMinimalGenerators");
  EXPECT_EQ(run({"verify", "--suite", "nope"}).error()["code"], "UnknownSuite");
  EXPECT_EQ(run({"hf", "/nonexistent/ideal.txt"}).error()["code"], "Io");
  EXPECT_EQ(run({"bounds", "--e", "2", "--h", "3"}).error()["code"], "InvalidArgument");

  Outcome usage = run({"bounds", "--e", "7"});
  EXPECT_EQ(usage.status, artin::kExitUsage);
  EXPECT_EQ(usage.error()["code"], "UsageError");
  EXPECT_EQ(run({}).status, artin::kExitUsage);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, MakeWritesUnderOutputDirectory) {
  auto dir = scratch("make");
  setenv("ARTIN_OUTPUT_DIR", dir.c_str(), 1);
  Outcome r = run({"make", "almost", "--h", "2", "--t", "3", "--s", "6", "--a", "x1", "--out", "a.txt"});
  unsetenv("ARTIN_OUTPUT_DIR");
  ASSERT_EQ(r.status, 0) << r.err;
  ASSERT_TRUE(std::filesystem::exists(dir / "a.txt"));

  Outcome hf = run({"hf", (dir / "a.txt").string()});
  EXPECT_EQ(hf.json()["hf"], Json::parse("[1,2,2,2,1,1,1]"));

  Outcome c = run({"classify7", "--ideal", (dir / "a.txt").string()});
  ASSERT_EQ(c.status, 0) << c.err;
  EXPECT_EQ(c.json()["case"], "Case2b2");
  EXPECT_EQ(c.json()["p_squared"], "1/5");
}

TEST(Cli, ClassifyFromParameter) {
  EXPECT_EQ(run({"classify7", "--a", "1 + x2"}).json()["case"], "Case1");
  EXPECT_EQ(run({"classify7", "--a", "x1^2"}).json()["case"], "Case2a");
  Json b1 = run({"classify7", "--a", "2*sqrt(-1)*x1", "--field", "sqrt(-1)"}).json();
  EXPECT_EQ(b1["case"], "Case2b1");
  EXPECT_TRUE(b1["p"].is_null());
  EXPECT_EQ(run({"classify7", "--a", "x1", "--no-extensions"}).error()["code"], "FieldExtensionRequired");
  EXPECT_EQ(run({"classify7"}).error()["code"], "InvalidArgument");
}

TEST(Cli, ClassifyRejectsWrongHilbertFunction) {
  auto dir = scratch("wrong");
  setenv("ARTIN_OUTPUT_DIR", dir.c_str(), 1);
  run({"make", "stretched", "--h", "2", "--s", "4", "--tau", "1", "--out", "s.txt"});
  unsetenv("ARTIN_OUTPUT_DIR");
  EXPECT_EQ(run({"classify7", "--ideal", (dir / "s.txt").string()}).error()["code"], "WrongHilbertFunction");
}

TEST(Cli, NormalizeStretchedWithUnits) {
  auto dir = scratch("normalize");
  setenv("ARTIN_OUTPUT_DIR", dir.c_str(), 1);
  ASSERT_EQ(run({"make", "stretched", "--h", "3", "--s", "4", "--tau", "1", "--units", "2", "3 + x1", "--out", "s.txt"}).status, 0);
  unsetenv("ARTIN_OUTPUT_DIR");
  const std::string file = (dir / "s.txt").string();

  Json plain = run({"normalize", file}).json();
  EXPECT_EQ(plain["kind"], "stretched");
  EXPECT_EQ(plain["params"]["tau"], 1);
  EXPECT_EQ(plain["params"]["units"], Json::parse(R"(["2","3"])"));

  EXPECT_EQ(run({"normalize", file, "--units"}).error()["code"], "FieldExtensionRequired");
  Json ext = run({"normalize", file, "--units", "--allow-extensions"}).json();
  EXPECT_EQ(ext["params"]["units"], Json::parse(R"(["1","1"])"));
  EXPECT_EQ(ext["params"]["field"], "sqrt(1/2), sqrt(1/3)");
}

TEST(Cli, NormalizeAlmostStretched) {
  auto dir = scratch("almost");
  setenv("ARTIN_OUTPUT_DIR", dir.c_str(), 1);
  ASSERT_EQ(run({"make", "almost", "--h", "3", "--t", "2", "--s", "4", "--a", "x1", "--w", "4", "--units", "9", "--out", "a.txt"}).status, 0);
  unsetenv("ARTIN_OUTPUT_DIR");
  Json j = run({"normalize", (dir / "a.txt").string(), "--units"}).json();
  EXPECT_EQ(j["kind"], "almost_stretched");
  EXPECT_EQ(j["params"]["t"], 2);
  EXPECT_EQ(j["params"]["s"], 4);
  EXPECT_EQ(j["params"]["w"], "1");
}

TEST(Cli, InvariantsOfModel) {
  auto dir = scratch("inv");
  setenv("ARTIN_OUTPUT_DIR", dir.c_str(), 1);
  ASSERT_EQ(run({"make", "1321", "--which", "2", "--out", "m.txt"}).status, 0);
  unsetenv("ARTIN_OUTPUT_DIR");
  Json j = run({"invariants", (dir / "m.txt").string()}).json();
  EXPECT_EQ(j["hf"], Json::parse("[1,3,2,1]"));
  EXPECT_EQ(j["tau"], 1);
  EXPECT_EQ(j["v"], 5);
  EXPECT_EQ(run({"make", "1321", "--out", "m.txt"}).error()["code"], "InvalidArgument");
  EXPECT_EQ(run({"make", "1321"}).json()["ideals"].size(), 2U);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::string> cmd{"classify7", "--a", "x1 + x2^2", "--seed", "3"};
  EXPECT_EQ(run(cmd).out, run(cmd).out);
  const std::vector<std::string> ver{"verify", "--suite", "hensel", "--seed", "42", "--quick"};
  EXPECT_EQ(run(ver).out, run(ver).out);
}

TEST(Cli, VerifySuite) {
  Outcome r = run({"verify", "--suite", "tables", "--seed", "42", "--quick"});
  ASSERT_EQ(r.status, 0) << r.err;
  Json s = r.json()["suites"][0];
  EXPECT_EQ(s["suite"], "tables");
  EXPECT_EQ(s["seed"], 42);
  EXPECT_GT(s["passed"], 0);
  EXPECT_EQ(s["failed"], 0);
}
