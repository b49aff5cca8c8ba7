#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "omconf/io.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(OMCONF_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name, const std::string& content) {
  std::string path = "/tmp/omconf_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("construct big-stepped emits the canonical distribution") {
  RunResult r = run_cli("construct big-stepped --order \"a > b = c > d\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "states a b c d\n"
        "prob a=6/11 b=2/11 c=2/11 d=1/11\n");
}

TEST_CASE("check reports the preadditivity witness with exit 1") {
  std::string dist = fixture("poss.txt", "states a b c\nposs a=3 b=2 c=1\n");
  std::string rel = "/tmp/omconf_test_rel.txt";
  RunResult ind = run_cli("induce --dist " + dist + " --kind possibility --out " + rel);
  CHECK(ind.exit_code == 0);

  RunResult chk = run_cli("check --rel " + rel + " --axiom ADD");
  CHECK(chk.exit_code == 1);
  CHECK(chk.output.find("ADD: FAIL") != std::string::npos);
  CHECK(chk.output.find("witness") != std::string::npos);

  RunResult ok = run_cli("check --rel " + rel + " --axiom CLO");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("verify theorem 6 exhaustively from the command line") {
  RunResult r = run_cli("verify --theorem 6 --n 3 --mode exhaustive");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("instances: 545835") != std::string::npos);
  CHECK(r.output.find("counterexamples: 0") != std::string::npos);
}

TEST_CASE("usage and parse failures exit with 2") {
  CHECK(run_cli("frobnicate").exit_code == 2);
  CHECK(run_cli("check --rel /nonexistent.txt --axiom ADD").exit_code == 2);
  CHECK(run_cli("verify --theorem 9").exit_code == 2);
  std::string bad = fixture("bad.txt", "states a b\nprob a=1/2 b=1/3\n");
  RunResult r = run_cli("check --dist " + bad + " --kind probability");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("WEIGHTS_NOT_NORMALIZED") != std::string::npos);
}

TEST_CASE("induced relation files round-trip through the CLI") {
  std::string dist =
      fixture("rt.txt", "states a b c\nposs a=2 b=2 c=1\nprob a=2/5 b=2/5 c=1/5\n");
  std::string rel = "/tmp/omconf_test_rt_rel.txt";
  for (const char* kind : {"possibility", "necessity", "discrimax", "leximax",
                           "probability", "lifted"}) {
    RunResult r = run_cli("induce --dist " + dist + " --kind " + kind + " --out " + rel);
    CHECK(r.exit_code == 0);
    omconf::RelationFile parsed = omconf::parse_relation(omconf::read_file(rel));
    CHECK(omconf::render_relation(parsed) == omconf::read_file(rel));
  }
}

TEST_CASE("compare and classify answer directly") {
  std::string dist = fixture("cmp.txt", "states a b c\nposs a=3 b=2 c=1\n");
  RunResult cmp =
      run_cli("compare --dist " + dist + " --kind possibility --a \"a,b\" --b \"a,c\"");
  CHECK(cmp.exit_code == 0);
  CHECK(cmp.output.find("EQUIVALENT") != std::string::npos);

  RunResult cls = run_cli("classify --dist " + dist + " --kind possibility");
  CHECK(cls.exit_code == 0);
  CHECK(cls.output.find("om_relation: yes") != std::string::npos);
  CHECK(cls.output.find("preadditive: no") != std::string::npos);
}

TEST_CASE("report format is machine-readable and stable") {
  RunResult a = run_cli("verify --theorem 2 --n 4 --samples 20 --seed 5 --format report");
  RunResult b = run_cli("verify --theorem 2 --n 4 --samples 20 --seed 5 --format report");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"command\"") != std::string::npos);
  CHECK(a.output.find("elapsed") == std::string::npos);
}
