// SPDX-License-Identifier: MIT
//
// End-to-end tests of the command-line tool: spawns the built binary (path
// injected by the build as REEDERKIT_CLI_PATH) and checks JSON/DOT output and
// exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs the CLI with the given arguments; stdout is captured, stderr dropped.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string cmd =
      env + (env.empty() ? "" : " ") + "\"" + REEDERKIT_CLI_PATH + "\" " + args +
      " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string::npos;
       pos = hay.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("small subcommand emits the poset as JSON") {
  const RunResult r = run_cli("small C 4");
  REQUIRE(r.exit_code == 0);
  const json d = json::parse(r.out);
  CHECK(d["schema"] == "reederkit.small.v1");
  CHECK(d["type"] == "C4");
  CHECK(d["count"] == 5);
  REQUIRE(d["nodes"].size() == 5);
  CHECK(d["covers"].size() == 4);
  for (const json& node : d["nodes"]) {
    CHECK(node.contains("display"));
    CHECK(node.contains("fund"));
    CHECK(node.contains("classical"));
    CHECK(node.contains("dim"));
    CHECK(node.contains("dual"));
    CHECK(node.contains("self_dual"));
  }
  CHECK(d["nodes"][0]["display"] == "1,1,1,1");
  CHECK(d["nodes"][0]["dim"] == 20);
  CHECK(d["nodes"].back()["dim"] == 0);
  // output is deterministic
  CHECK(run_cli("small C 4").out == r.out);

  const json small_a1 = json::parse(run_cli("small A 1").out);
  CHECK(small_a1["count"] == 2);
}

TEST_CASE("small subcommand emits DOT") {
  const RunResult r = run_cli("small G 2 --format dot");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("digraph small_G2") != std::string::npos);
  CHECK(count_occurrences(r.out, "[label=") == 3);
  CHECK(count_occurrences(r.out, " -> ") == 2);
  CHECK(run_cli("small G 2 --format dot").out == r.out);
}

TEST_CASE("reeder subcommand lists the pieces") {
  const RunResult r = run_cli("reeder B 4");
  REQUIRE(r.exit_code == 0);
  const json d = json::parse(r.out);
  CHECK(d["schema"] == "reederkit.reeder.v1");
  CHECK(d["count"] == 5);
  bool found = false;
  for (const json& p : d["pieces"]) {
    if (p["coweight"] != "2,1,1,0") continue;
    found = true;
    CHECK(p["case"] == "double");
    REQUIRE(p["orbits"].size() == 2);
    CHECK(p["orbits"][0]["label"] == "3^2.1^3");
    CHECK(p["orbits"][1]["label"] == "3.2^2.1^2");
    CHECK(p["orbits"][0]["dim"] == 22);
    CHECK(p["orbits"][1]["dim"] == 20);
  }
  CHECK(found);
  const json e8 = json::parse(run_cli("reeder E 8").out);
  CHECK(e8["count"] == 5);
}

TEST_CASE("mult subcommand computes weight multiplicities") {
  const json top = json::parse(run_cli("mult E 6 3w1 0").out);
  CHECK(top["schema"] == "reederkit.mult.v1");
  CHECK(top["multiplicity"] == 24);
  CHECK(top["lambda"] == "3w1");
  const json e7 = json::parse(run_cli("mult E 7 w2+w7 w6").out);
  CHECK(e7["multiplicity"] == 22);
}

TEST_CASE("verify subcommand reports per-check records") {
  const RunResult r = run_cli("verify stalk");
  REQUIRE(r.exit_code == 0);
  const json d = json::parse(r.out);
  CHECK(d["schema"] == "reederkit.verify.v1");
  CHECK(d["suite"] == "stalk");
  CHECK(d["ok"] == true);
  CHECK(d["counts"]["mismatch"] == 0);
  CHECK(d["counts"]["error"] == 0);
  CHECK(d["counts"]["ok"] == d["records"].size());
  REQUIRE(!d["records"].empty());
  for (const json& rec : d["records"]) {
    CHECK(rec["status"] == "ok");
    CHECK(rec.contains("command"));
    CHECK(rec.contains("inputs"));
    CHECK(rec.contains("outputs"));
    CHECK(rec.contains("origin"));
  }
}

TEST_CASE("exit codes") {
  CHECK(run_cli("").exit_code == 2);                 // missing subcommand
  CHECK(run_cli("small Z 4").exit_code == 2);        // no such family
  CHECK(run_cli("small D 2").exit_code == 2);        // rank out of range
  CHECK(run_cli("mult E 6 nonsense 0").exit_code == 2);
  CHECK(run_cli("mult E 6 w1 0").exit_code == 2);    // w1 outside the lattice
  CHECK(run_cli("reeder D 3").exit_code == 2);       // D3 pieces are refused
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("small --help").exit_code == 0);
  // a bad data override is an operational error, not a usage error
  // (exceptional pieces read the bundled tables)
  CHECK(run_cli("reeder E 6", "REEDERKIT_DATA=/nonexistent/tables.txt").exit_code == 1);
}
