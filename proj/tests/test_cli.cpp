#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chronoscale/cli.hpp"
#include "chronoscale/report.hpp"
#include "doctest.h"

using namespace chronoscale;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "chronoscale");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("chronoscale_cli_" + name)).string();
}

}  // namespace

TEST_CASE("verify thm31 prints lhs and rhs and exits 0") {
  const auto r = run({"verify", "--theorem", "thm31", "--ts1", "R[0,1]", "--ts2", "R[0,1]", "--rect", "0,1,0,1",
                      "--f", "x*y"});
  CHECK(r.code == kExitOk);
  const auto at = r.out.find("rhs ");
  REQUIRE(at != std::string::npos);
  CHECK(std::abs(std::stod(r.out.substr(at + 4)) - 0.25) <= 1e-9);
  CHECK(r.out.find("pass        true") != std::string::npos);
}

TEST_CASE("verify of the stated Gruss witness exits 1") {
  const auto r = run({"verify", "--theorem", "thm22-stated", "--ts1", "R[0,4]", "--ts2", "R[0,4]", "--rect",
                      "0,4,0,4", "--f", "x*y", "--g", "x*y"});
  CHECK(r.code == kExitViolation);
}

TEST_CASE("endpoints off the time scale exit 2 and name the flag") {
  const auto r = run({"verify", "--theorem", "thm21", "--ts1", "Z[0,5]", "--ts2", "Z[0,5]", "--rect", "0.5,1,0,1",
                      "--f", "x*y"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("--rect") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"verify"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  const auto bad_theorem = run({"verify", "--theorem", "thm9", "--ts1", "R[0,1]", "--ts2", "R[0,1]", "--rect",
                                "0,1,0,1", "--f", "x"});
  CHECK(bad_theorem.code == kExitUsage);
  CHECK(bad_theorem.err.find("--theorem") != std::string::npos);
  const auto bad_expr = run({"integrate", "--ts1", "R[0,1]", "--ts2", "R[0,1]", "--rect", "0,1,0,1", "--f", "x+"});
  CHECK(bad_expr.code == kExitUsage);
  CHECK(bad_expr.err.find("--f") != std::string::npos);
  const auto bad_tol = run({"integrate", "--ts1", "R[0,1]", "--ts2", "R[0,1]", "--rect", "0,1,0,1", "--f", "x",
                            "--panel-tol", "-1"});
  CHECK(bad_tol.code == kExitUsage);
}

TEST_CASE("help lists every flag and exits 0") {
  const auto r = run({"verify", "--help"});
  CHECK(r.code == kExitOk);
  for (const char* flag : {"--theorem", "--ts1", "--ts2", "--rect", "--f", "--g", "--out", "--config",
                           "--panel-tol", "--quad-order", "--tol-abs", "--anchor"}) {
    CAPTURE(flag);
    CHECK(r.out.find(flag) != std::string::npos);
  }
  CHECK(run({"--version"}).code == kExitOk);
}

TEST_CASE("integrate prints the double integral") {
  const auto r = run({"integrate", "--ts1", "Z[0,3]", "--ts2", "Z[0,3]", "--rect", "0,3,0,3", "--f", "x*y"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "9\n");
}

TEST_CASE("config file overrides defaults and flags override the file") {
  const std::string path = temp_path("cfg.txt");
  {
    std::ofstream cfg(path);
    cfg << "# tolerances\n"
        << "tol-abs = 30\n";
  }
  const std::vector<std::string> base{"verify", "--theorem", "thm22-stated", "--ts1", "R[0,4]", "--ts2", "R[0,4]",
                                      "--rect", "0,4,0,4", "--f", "x*y", "--config", path};
  CHECK(run(base).code == kExitOk);
  auto with_flag = base;
  with_flag.insert(with_flag.end(), {"--tol-abs", "1e-7"});
  CHECK(run(with_flag).code == kExitViolation);

  {
    std::ofstream cfg(path);
    cfg << "mystery = 1\n";
  }
  const auto unknown = run(base);
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("mystery") != std::string::npos);
  std::remove(path.c_str());
  CHECK(run(base).code == kExitUsage);
}

TEST_CASE("campaign writes a report and reflects failures in the exit code") {
  const std::string path = temp_path("campaign.json");
  const auto ok = run({"campaign", "--trials", "5", "--seed", "3", "--theorems", "thm21,thm31", "--out", path,
                       "--anchor", "endpoint"});
  CHECK(ok.code == kExitOk);
  const auto report = read_report(path);
  CHECK(report.records.size() == 10);

  const auto bad = run({"campaign", "--trials", "1", "--theorems", "thm22-stated", "--functions", "xy",
                        "--domain-ts1", "R[0,4]", "--domain-ts2", "R[0,4]", "--domain-rect", "0,4,0,4", "--out",
                        path, "--format", "csv"});
  CHECK(bad.code == kExitViolation);
  CHECK(run({"campaign", "--trials", "0", "--out", path}).code == kExitUsage);
  CHECK(run({"campaign", "--out", path, "--domain-ts1", "R[0,1]"}).code == kExitUsage);
  std::remove(path.c_str());
}

TEST_CASE("counterexample finds the stated-bound witness") {
  const std::string path = temp_path("witness.json");
  const auto r = run({"counterexample", "--theorem", "thm22-stated", "--budget", "500", "--out", path});
  CHECK(r.code == kExitViolation);
  CHECK(std::filesystem::exists(path));
  std::remove(path.c_str());
  CHECK(run({"counterexample", "--theorem", "thm31", "--budget", "50", "--anchor", "endpoint"}).code == kExitOk);
}
