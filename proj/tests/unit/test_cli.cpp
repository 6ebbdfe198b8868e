#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "wildnum");
  std::ostringstream out;
  std::ostringstream err;
  int code = wildnum::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(WILDNUM_GOLDEN_DIR) / name, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wildnum_cli_test_" + name);
}

}  // namespace

TEST_CASE("trace") {
  Outcome vl = run({"trace", "--rule", "vanlamoen", "--n", "2"});
  CHECK(vl.code == 0);
  CHECK(vl.out == golden("trace_vanlamoen_2.txt"));
  CHECK(vl.out.rfind("2/1 -> 2/3 -> 6/5 -> 30/11 -> 66\n", 0) == 0);

  Outcome one = run({"trace", "--rule", "collatz", "--n", "1"});
  CHECK(one.code == 0);
  CHECK(one.out == "1\nreached 1 in 0 steps, peak 1 (1 bits)\n");

  Outcome c27 = run({"trace", "--rule", "collatz", "--n", "27"});
  CHECK(c27.code == 0);
  CHECK(c27.out == golden("trace_collatz_27.txt"));

  Outcome lines = run({"trace", "--n", "2", "--lines"});
  CHECK(lines.out.rfind("2/1\n2/3\n6/5\n30/11\n66\n", 0) == 0);

  Outcome budget = run({"trace", "--rule", "vanlamoen", "--n", "2", "--max-steps", "1"});
  CHECK(budget.code == 2);
  CHECK(budget.out.find("exhausted: StepBudget after 1 steps") != std::string::npos);

  Outcome cycle = run({"trace", "--n", "84", "--cycle-check"});
  CHECK(cycle.code == 2);
  CHECK(cycle.out.find("CycleDetected") != std::string::npos);
}

TEST_CASE("trace usage errors") {
  CHECK(run({"trace", "--rule", "wild", "--n", "2"}).code == 64);
  CHECK(run({"trace", "--n", "-2"}).code == 64);
  CHECK(run({"trace", "--n", "abc"}).code == 64);
  CHECK(run({"trace", "--rule", "collatz", "--n", "0"}).code == 64);
  CHECK(run({"trace"}).code == 64);
  CHECK(run({"trace", "--n", "2", "--max-bits", "4"}).code == 64);
  CHECK(run({}).code == 64);
  CHECK(run({"frobnicate"}).code == 64);
  Outcome bad = run({"trace", "--rule", "family:1,1", "--n", "2"});
  CHECK(bad.code == 64);
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("seq") {
  Outcome all = run({"seq", "--rule", "vanlamoen", "--from", "0", "--to", "47"});
  CHECK(all.code == 0);
  CHECK(all.out == golden("seq_vanlamoen_0_47.txt"));

  Outcome nine = run({"seq", "--rule", "vanlamoen", "--from", "9", "--to", "9"});
  CHECK(nine.code == 0);
  CHECK(nine.out == "9 9\n");

  CHECK(run({"seq", "--from", "5", "--to", "4"}).code == 64);
  CHECK(run({"seq", "--from", "0", "--to", "100000000"}).code == 64);

  Outcome gaps = run({"seq", "--from", "80", "--to", "90"});
  CHECK(gaps.code == 0);
  CHECK(gaps.out.rfind("# a(84) = 0: exhausted (StepBudget)\n80 ", 0) == 0);
  CHECK(gaps.out.find("\n84 0\n") != std::string::npos);
  CHECK(gaps.err.find("1 record(s) exhausted") != std::string::npos);
}

TEST_CASE("seq output file") {
  auto path = temp_path("seq.txt");
  Outcome ok = run({"seq", "--from", "0", "--to", "47", "--out", path.string()});
  CHECK(ok.code == 0);
  CHECK(ok.out.empty());
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  CHECK(s.str() == golden("seq_vanlamoen_0_47.txt"));
  std::filesystem::remove(path);

  Outcome bad = run({"seq", "--from", "0", "--to", "3", "--out", "/nonexistent-dir/x/b.txt"});
  CHECK(bad.code == 74);
}

TEST_CASE("worker count never changes output bytes") {
  std::string one = run({"seq", "--from", "0", "--to", "400", "--workers", "1"}).out;
  CHECK(run({"seq", "--from", "0", "--to", "400", "--workers", "4"}).out == one);
  ::setenv(wildnum::cli::kWorkersEnv, "3", 1);
  CHECK(run({"seq", "--from", "0", "--to", "400"}).out == one);
  ::setenv(wildnum::cli::kWorkersEnv, "zero", 1);
  CHECK(run({"seq", "--from", "0", "--to", "4"}).code == 64);
  CHECK(run({"seq", "--from", "0", "--to", "4", "--workers", "2"}).code == 0);
  ::unsetenv(wildnum::cli::kWorkersEnv);
  CHECK(run({"seq", "--from", "0", "--to", "4", "--workers", "0"}).code == 64);
}

TEST_CASE("verify") {
  Outcome ok = run({"verify", "--rule", "vanlamoen", "--reference", "paper48"});
  CHECK(ok.code == 0);
  CHECK(ok.out == "verify vanlamoen against paper48: 48 terms, 0 mismatches\n");

  Outcome bad = run({"verify", "--rule", "family:1,1,1", "--reference", "paper48"});
  CHECK(bad.code == 1);
  CHECK(bad.out == golden("verify_family_1_1_1.txt"));
  // n = 2 under (1,1,1): 2/1 -> 1/2 -> 1/2 -> ... never integral.
  CHECK(bad.out.find("\n2 66 0 exhausted:StepBudget\n") != std::string::npos);

  CHECK(run({"verify", "--reference", "missing.txt"}).code == 64);

  auto path = temp_path("ref.txt");
  {
    std::ofstream f(path, std::ios::binary);
    f << "# slice of the table\n20 12\n21 12\n22 90\n23 3703207920\n";
  }
  Outcome file = run({"verify", "--reference", path.string()});
  CHECK(file.code == 0);
  CHECK(file.out.find("4 terms, 0 mismatches") != std::string::npos);
  {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << "20 12\n19 12\n";
  }
  CHECK(run({"verify", "--reference", path.string()}).code == 65);
  std::filesystem::remove(path);
}

TEST_CASE("search") {
  Outcome fict = run({"search", "--target", "11,67,2,4769,67", "--alpha", "-3..3", "--beta",
                      "-3..3", "--gamma", "-3..3"});
  CHECK(fict.code == 1);
  CHECK(fict.out == golden("search_fictional.txt"));

  Outcome vl = run({"search", "--target-ref", "paper48", "--alpha", "1..1", "--beta", "1..1",
                    "--gamma", "0..0"});
  CHECK(vl.code == 0);
  CHECK(vl.out.find("EXACT (1,1,0) matched 48/48") != std::string::npos);
  CHECK(vl.out.find("candidates: 1 ") != std::string::npos);

  CHECK(run({"search", "--target", "11", "--alpha", "1..0"}).code == 64);
  CHECK(run({"search", "--target", "11", "--target-ref", "paper48"}).code == 64);
  CHECK(run({"search"}).code == 64);
  CHECK(run({"search", "--target", "1,x"}).code == 64);
  CHECK(run({"search", "--target", "1", "--gamma", "0..5000"}).code == 64);

  Outcome offset = run({"search", "--target", "9,5", "--offset", "9", "--alpha", "1", "--beta",
                        "1", "--gamma", "0"});
  CHECK(offset.code == 0);
}

TEST_CASE("help documents exit codes") {
  Outcome help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("64   usage error") != std::string::npos);
  CHECK(help.out.find("WILDNUM_WORKERS") != std::string::npos);
  CHECK(run({"seq", "--help"}).code == 0);
}
