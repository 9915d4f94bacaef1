#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "support.hpp"

using namespace testing_support;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  CliRun r;
  std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return fixture(name); }

json run_json(const std::string& args) {
  CliRun r = run(args + " --format json");
  return json::parse(r.out);
}

std::map<std::string, long> betti_of(const json& j) {
  std::map<std::string, long> out;
  for (auto& [k, v] : j["results"][0]["betti"].items()) out[k] = v.get<long>();
  return out;
}

}  // namespace

TEST(Cli, ValidFixtureExitsZero) {
  for (auto& name : valid_category_fixtures()) {
    CliRun r = run("validate " + fx(name));
    EXPECT_EQ(r.code, 0) << name << "\n" << r.out;
  }
}

TEST(Cli, MutantsExitOneAndNameTheAxiom) {
  for (auto& m : bialgebra_mutants()) {
    json j = run_json("validate " + fx(m.fixture));
    std::set<std::string> failed;
    for (auto& c : j["results"])
      if (c["status"] == "FAIL") {
        failed.insert(c["check"].get<std::string>());
        EXPECT_FALSE(c["residual_witnesses"].empty()) << m.fixture;
      }
    EXPECT_EQ(failed, m.validators) << m.fixture;
    EXPECT_EQ(run("validate " + fx(m.fixture)).code, 1);
  }
  CliRun r = run("validate " + fx("cycpair-ainf"));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL ainf"), std::string::npos) << r.out;
}

TEST(Cli, InputErrorsExitTwo) {
  CliRun dangling = run("validate " + fx("cycpair-dangling"));
  EXPECT_EQ(dangling.code, 2);
  EXPECT_EQ(dangling.out.rfind("ResolutionError:", 0), 0u) << dangling.out;

  std::string bad = testing::TempDir() + "/malformed.json";
  std::ofstream(bad) << "{\"objects\": [\"A\",";
  CliRun malformed = run("validate " + bad);
  EXPECT_EQ(malformed.code, 2);
  EXPECT_EQ(malformed.out.rfind("ParseError:", 0), 0u) << malformed.out;

  EXPECT_EQ(run("validate " + testing::TempDir() + "/missing.json").code, 2);
  EXPECT_EQ(run("homology " + fx("cycpair") + " --complex nonsense").code, 2);
  EXPECT_EQ(run("contact " + fx("cl-toy-badorbit") + " --check d2").code, 2);
}

TEST(Cli, DualComplexesGiveTheSameTables) {
  for (auto& name : valid_category_fixtures())
    for (auto field : {"rational", "mod2"}) {
      std::string base = "homology " + fx(name) + " --N 4 --field " + std::string(field);
      EXPECT_EQ(betti_of(run_json(base + " --complex hoch")),
                betti_of(run_json(base + " --complex dual-hoch")))
          << name;
      EXPECT_EQ(betti_of(run_json(base + " --complex cyclic")),
                betti_of(run_json(base + " --complex dual-cyclic")))
          << name;
    }
}

TEST(Cli, CyclicTableMatchesShippedValues) {
  const auto shipped = raw("lambda-eps")["cyclic_betti_N4"];
  std::map<std::string, long> expect;
  for (auto& [k, v] : shipped.items()) expect[k] = v.get<long>();
  auto got = betti_of(run_json("homology " + fx("lambda-eps") + " --complex cyclic --N 4"));
  for (auto& [k, v] : expect) EXPECT_EQ(got[k], v) << k;
}

TEST(Cli, BialgebraCommand) {
  CliRun ok = run("bialgebra " + fx("cycpair") + " --N 6 --W 2");
  EXPECT_EQ(ok.code, 0) << ok.out;
  json j = run_json("bialgebra " + fx("cycpair-parity") + " --N 7 --W 3");
  int failed = 0;
  for (auto& c : j["results"]) failed += c["status"] == "FAIL";
  EXPECT_GT(failed, 0);
  EXPECT_EQ(run("bialgebra " + fx("cycpair") + " --N 5 --W 2").code, 2);
}

TEST(Cli, ContactCommands) {
  EXPECT_EQ(run("contact " + fx("cl-toy") + " --check d2").code, 0);
  EXPECT_EQ(run("contact " + fx("cl-toy") + " --check skew").code, 0);
  CliRun d2 = run("contact " + fx("cl-toy-d2") + " --check d2");
  EXPECT_EQ(d2.code, 1);
  EXPECT_NE(d2.out.find("d^2(alpha)"), std::string::npos);
  EXPECT_EQ(run("contact " + fx("cl-toy-skew") + " --check skew").code, 1);
  EXPECT_EQ(run("contact " + fx("cl-fuk-toy") + " --check chainmap").code, 0);
  EXPECT_EQ(run("contact " + fx("cl-fuk-toy") + " --check linfty-2").code, 0);
  CliRun pert = run("contact " + fx("cl-fuk-toy-perturbed") + " --check chainmap");
  EXPECT_EQ(pert.code, 1);
  EXPECT_NE(pert.out.find("orbit ga on (p,p*)"), std::string::npos) << pert.out;
  EXPECT_EQ(run("contact " + fx("cl-fuk-toy-r2zero") + " --check linfty-2").code, 1);
}

TEST(Cli, LinftyCommand) {
  EXPECT_EQ(run("linfty " + fx("linfty-so3") + " --max-arity 4").code, 0);
  CliRun bad = run("linfty " + fx("linfty-so3-bad"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("arity 3"), std::string::npos) << bad.out;
  EXPECT_EQ(run("linfty " + fx("linfty-exact")).code, 0);
}

TEST(Cli, JsonSchema) {
  json j = run_json("validate " + fx("cycpair"));
  for (auto key : {"command", "input", "options", "results"}) EXPECT_TRUE(j.contains(key)) << key;
  for (auto& c : j["results"]) {
    EXPECT_TRUE(c["check"].is_string());
    EXPECT_TRUE(c["status"] == "PASS" || c["status"] == "FAIL");
    EXPECT_TRUE(c["residual_witnesses"].is_array());
  }
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> commands{
      "validate " + fx("cycpair"),
      "validate " + fx("cycpair-flip"),
      "homology " + fx("cycodd") + " --complex cyclic --N 4",
      "homology " + fx("lambda-eps") + " --complex dual-hoch --N 4 --field mod2",
      "bialgebra " + fx("cycpair") + " --N 6 --W 2",
      "bialgebra " + fx("cycpair-mode") + " --N 7 --W 3",
      "contact " + fx("cl-toy") + " --check skew",
      "contact " + fx("cl-fuk-toy") + " --check linfty-2",
      "linfty " + fx("linfty-exact"),
  };
  for (auto& c : commands)
    for (auto fmt : {" --format json", " --format text"}) {
      CliRun a = run(c + fmt), b = run(c + fmt);
      EXPECT_EQ(a.out, b.out) << c;
      EXPECT_EQ(a.code, b.code) << c;
    }
}
