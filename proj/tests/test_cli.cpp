#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "groups.hpp"
#include "json.hpp"
#include "pargroupoid/cli.hpp"

namespace cli = pargroupoid::cli;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "pargroupoid");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("pargroupoid_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("gamma") {
  const auto r = run({"gamma", "--group", "cyclic:1"});
  REQUIRE(r.code == cli::kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["gamma_size"] == 1);
  REQUIRE(doc["elements"].size() == 1);
  CHECK(doc["elements"][0].dump().find("e") != std::string::npos);

  const auto z3 = nlohmann::json::parse(run({"gamma", "--group", "cyclic:3", "--lambda"}).out);
  CHECK(z3["gamma_size"] == 8);
  CHECK(z3["units"].size() == 4);
  CHECK(z3.contains("lambda_p"));
}

TEST_CASE("decompose") {
  const auto r = run({"decompose", "--group", "cyclic:2"});
  REQUIRE(r.code == cli::kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["group"] == "cyclic:2");
  CHECK(doc["gamma_size"] == 3);
  REQUIRE(doc["blocks"].size() == 2);
  CHECK(doc["blocks"][0]["H_order"] == 1);
  CHECK(doc["blocks"][0]["m"] == 1);
  CHECK(doc["blocks"][0]["c"] == 1);
  CHECK(doc["blocks"][1]["H_order"] == 2);
  CHECK(doc["blocks"][1]["H_gens"] == nlohmann::json::array({"a"}));
  CHECK(doc["audit"]["lhs"] == 3);
  CHECK(doc["audit"]["rhs"] == 3);
  CHECK(doc["audit"]["ok"] == true);
  CHECK(doc["recursion_diff"].is_array());

  const auto text = run({"decompose", "--group", "klein4", "--format", "text", "--scalar", "nat"});
  CHECK(text.code == cli::kExitPass);
  CHECK(text.out.find("audit 20 = 20 ok") != std::string::npos);

  const auto q8 = run({"decompose", "--group", "table:" + testgroups::data_path("q8.json"), "--scalar", "qnn-delta"});
  CHECK(q8.code == cli::kExitPass);
  CHECK(nlohmann::json::parse(q8.out)["gamma_size"] == 576);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--group", "cyclic:3", "--suite", "partialrep"});
  CHECK(r.code == cli::kExitPass);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["seed"] == 0xC0FFEE);
  CHECK_FALSE(doc["checks"].empty());
  for (const auto& c : doc["checks"]) CHECK(c["passed"] == true);
  CHECK(r.err.empty());

  CHECK(run({"verify", "--group", "cyclic:2", "--suite", "all"}).code == cli::kExitPass);
  CHECK(run({"verify", "--group", "klein4", "--suite", "structure", "--format", "text"}).code == cli::kExitPass);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"verify", "--group", "sym:3", "--suite", "extension", "--seed", "17"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);
  const auto c = run({"decompose", "--group", "dihedral:4"});
  const auto d = run({"decompose", "--group", "dihedral:4"});
  CHECK(c.out == d.out);
}

TEST_CASE("action-check") {
  const auto good = write_temp("good.json", R"({"group":"cyclic:2","X":2,"domains":{"e":[0,1],"a":[0]},
    "maps":{"e":[[0,0],[1,1]],"a":[[0,0]]}})");
  const auto r = run({"action-check", "--file", good});
  CHECK(r.code == cli::kExitPass);
  CHECK(nlohmann::json::parse(r.out)["passed"] == true);

  const auto bad = write_temp("bad.json", R"({"X":3,"domains":{"e":[0,1,2],"a":[0,1],"a^2":[1,2]},
    "maps":{"e":[[0,0],[1,1],[2,2]],"a":[[1,0],[2,1]],"a^2":[[0,1],[1,2]]}})");
  const auto f = run({"action-check", "--file", bad, "--group", "cyclic:3"});
  CHECK(f.code == cli::kExitFail);
  CHECK(f.err.find("domain_compatibility") != std::string::npos);

  const auto malformed = write_temp("malformed.json", R"({"group":"cyclic:2","X":2,"domains":{"e":[0,1],"a":[1]},
    "maps":{"e":[[0,0],[1,1]],"a":[[0,0]]}})");
  CHECK(run({"action-check", "--file", malformed}).code == cli::kExitInput);
  CHECK(run({"action-check", "--file", "/nonexistent/x.json", "--group", "cyclic:2"}).code == cli::kExitInput);
  const auto no_group = write_temp("nogroup.json", R"({"X":1})");
  CHECK(run({"action-check", "--file", no_group}).code == cli::kExitUsage);
}

TEST_CASE("usage and input errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"gamma"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--group", "cyclic:2", "--suite", "nope"}).code == cli::kExitUsage);
  CHECK(run({"decompose", "--group", "cyclic:2", "--scalar", "bool"}).code == cli::kExitUsage);
  const auto bad_spec = run({"gamma", "--group", "torus"});
  CHECK(bad_spec.code == cli::kExitUsage);
  CHECK_FALSE(bad_spec.err.empty());
  CHECK(bad_spec.out.empty());

  const auto table = write_temp("table.json", R"({"order":2,"table":[[0,1],[1,1]]})");
  CHECK(run({"gamma", "--group", "table:" + table}).code == cli::kExitInput);
  CHECK(run({"gamma", "--group", "cyclic:17"}).code == cli::kExitInput);
}

TEST_CASE("bound from flag and environment") {
  CHECK(run({"gamma", "--group", "cyclic:5", "--bound", "4"}).code == cli::kExitInput);
  ::setenv("PARGROUPOID_BOUND", "4", 1);
  CHECK(run({"gamma", "--group", "cyclic:5"}).code == cli::kExitInput);
  CHECK(run({"gamma", "--group", "cyclic:4"}).code == cli::kExitPass);
  CHECK(run({"gamma", "--group", "cyclic:5", "--bound", "5"}).code == cli::kExitPass);
  ::setenv("PARGROUPOID_BOUND", "zero", 1);
  CHECK(run({"gamma", "--group", "cyclic:2"}).code == cli::kExitUsage);
  ::unsetenv("PARGROUPOID_BOUND");
  CHECK(run({"gamma", "--group", "cyclic:5"}).code == cli::kExitPass);
}
