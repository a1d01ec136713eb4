#include "doctest.h"

#include "cusg/cli.hpp"

using namespace cusg;

namespace {

CliResult cli(std::initializer_list<std::string> args) {
  return run_cli(std::vector<std::string>(args));
}

}  // namespace

TEST_CASE("membership queries and exit codes") {
  auto ok = cli({"--spec", "zdd23", "--query", "member", "--lhs", "const 1"});
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("answer: true") != std::string::npos);

  auto bad = cli({"--spec", "zdd23", "--query", "member", "--lhs", "const 1/2"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("reason") != std::string::npos);
}

TEST_CASE("way-below at the top is not reflexive") {
  auto r = cli({"--spec", "lsc-interval-nbar", "--query", "waybelow", "--lhs", "const inf",
                "--rhs", "const inf"});
  CHECK(r.exit_code == 1);
  auto r2 = cli({"--spec", "lsc-interval-nbar", "--query", "waybelow", "--lhs", "const 2",
                 "--rhs", "const inf"});
  CHECK(r2.exit_code == 0);
}

TEST_CASE("scalar queries") {
  CHECK(cli({"--spec", "nbar", "--query", "leq", "--lhs", "2", "--rhs", "3"}).exit_code == 0);
  CHECK(cli({"--spec", "nbar", "--query", "leq", "--lhs", "inf", "--rhs", "5"}).exit_code == 1);
  auto sum = cli({"--spec", "c2", "--query", "add", "--lhs", "1/2", "--rhs", "soft 1/2",
                  "--format", "machine"});
  CHECK(sum.exit_code == 0);
  CHECK(sum.output.find("result=soft 1") != std::string::npos);
}

TEST_CASE("limit queries") {
  CHECK(cli({"--spec", "limit-nbar-x2", "--query", "limit-leq", "--lhs", "1@0", "--rhs",
             "2@1"}).exit_code == 0);
  CHECK(cli({"--spec", "limit-nbar-x2", "--query", "limit-leq", "--lhs", "3@0", "--rhs",
             "2@1"}).exit_code == 1);
  CHECK(cli({"--spec", "limit-nbar-x2", "--query", "limit-leq", "--lhs", "5@2", "--rhs",
             "5@2"}).exit_code == 0);
}

TEST_CASE("machine format is deterministic and round-trips elements") {
  std::vector<std::string> args = {"--spec",  "lsc-interval-nbar2", "--query", "check-axioms",
                                   "--seed",  "42",                 "--trials", "20",
                                   "--format", "machine"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("answer=true") != std::string::npos);

  // printed elements re-parse to canonically equal elements
  auto sum = cli({"--spec", "lsc-interval-nbar", "--query", "add", "--lhs",
                  "edge e1: [0,1/2]=1, (1/2,1]=2", "--rhs", "const 1", "--format", "machine"});
  CHECK(sum.exit_code == 0);
  auto pos = sum.output.find("result=");
  auto end = sum.output.find('\n', pos);
  std::string printed = sum.output.substr(pos + 7, end - pos - 7);
  auto again = cli({"--spec", "lsc-interval-nbar", "--query", "leq", "--lhs", printed, "--rhs",
                    printed});
  CHECK(again.exit_code == 0);
}

TEST_CASE("usage errors exit with 64") {
  CHECK(cli({"--query", "leq"}).exit_code == 64);
  CHECK(cli({"--spec", "nbar", "--query", "frobnicate", "--lhs", "1"}).exit_code == 64);
  CHECK(cli({"--spec", "nbar", "--query", "leq", "--lhs", "not-a-number", "--rhs", "1"})
            .exit_code == 64);
  CHECK(cli({"--spec", "no-such-spec-anywhere", "--query", "leq", "--lhs", "1", "--rhs", "1"})
            .exit_code == 64);
}

TEST_CASE("approx prints the canonical chain") {
  auto r = cli({"--spec", "nbar", "--query", "approx", "--lhs", "inf", "--depth", "4",
                "--format", "machine"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("approximant=1") != std::string::npos);
  CHECK(r.output.find("approximant=4") != std::string::npos);
}

TEST_CASE("graph-iso runs from the CLI") {
  auto r = cli({"--spec", "loop-nbar", "--query", "graph-iso", "--trials", "25", "--seed", "3"});
  CHECK(r.exit_code == 0);
}

TEST_CASE("compacts for the dimension drop") {
  auto r = cli({"--spec", "zdd23", "--query", "compacts", "--bound", "2", "--format", "machine"});
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("count=3") != std::string::npos);
}
