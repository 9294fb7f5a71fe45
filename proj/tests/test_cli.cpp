#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "unruhsim/csv.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path tmp = fs::temp_directory_path() /
                       ("unruhsim_cli_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter++) + ".out");
  const std::string cmd =
      std::string(UNRUHSIM_CLI_PATH) + " " + args + " >" + tmp.string() + " 2>&1";
  const int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  std::ifstream f(tmp);
  std::stringstream ss;
  ss << f.rdbuf();
  fs::remove(tmp);
  return {WEXITSTATUS(rc), ss.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& row) {
  std::vector<std::string> fields;
  std::stringstream ss(row);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  if (!row.empty() && row.back() == ',') fields.push_back("");
  return fields;
}

// data rows: everything after the '#' meta line and the header row
std::vector<std::string> data_rows(const std::string& text) {
  auto lines = lines_of(text);
  REQUIRE(lines.size() >= 2);
  REQUIRE(lines[0].rfind("# unruhsim", 0) == 0);
  return {lines.begin() + 2, lines.end()};
}

}  // namespace

TEST_CASE("format_real: 12 significant digits, scientific below 1e-4") {
  CHECK(unruhsim::format_real(0.0) == "0");
  CHECK(unruhsim::format_real(-0.0) == "0");
  CHECK(unruhsim::format_real(1.0) == "1");
  CHECK(unruhsim::format_real(0.5) == "0.5");
  CHECK(unruhsim::format_real(0.33950298678451318) == "0.339502986785");
  CHECK(unruhsim::format_real(1e-5) == "1.00000000000e-05");
  CHECK(unruhsim::format_real(-2.5e-7) == "-2.50000000000e-07");
  CHECK(unruhsim::format_real(0.785398163397448) == "0.785398163397");
}

TEST_CASE("point: undisturbed Bell pair has concurrence 1") {
  const auto res =
      run_cli("point --scenario S1 --coupling multilocal --r 0 --p1 0 --p2 0 --p3 0");
  CHECK(res.code == 0);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0] == "S1,multilocal,0,0,0,0,1");
}

TEST_CASE("point: infinite-acceleration limit gives 1/sqrt(2)") {
  const auto res = run_cli(
      "point --scenario S1 --coupling multilocal --r 0.7853981634 --p1 0 --p2 0 --p3 0");
  CHECK(res.code == 0);
  const auto fields = fields_of(data_rows(res.out)[0]);
  REQUIRE(fields.size() == 7);
  CHECK(std::abs(std::stod(fields[6]) - 0.7071067812) < 1e-9);
}

TEST_CASE("point: golden row for the validated S3 global point") {
  const auto res =
      run_cli("point --scenario S3 --coupling global --r 0.3 --p1 0.1 --p2 0.2 --p3 0.2");
  CHECK(res.code == 0);
  CHECK(data_rows(res.out)[0] == "S3,global,0.3,0.1,0.2,0.2,0.339502986785");
}

TEST_CASE("point: bad flags exit with the usage code") {
  CHECK(run_cli("point --scenario S9 --coupling global --r 0").code == 1);
  CHECK(run_cli("point --scenario S1 --coupling global --r 2.0").code == 1);
  CHECK(run_cli("point --scenario S1 --coupling global --r 0.1 --p1 1.5").code == 1);
  CHECK(run_cli("nonsense").code == 1);
}

TEST_CASE("point: help exits cleanly") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("point --help").code == 0);
}

TEST_CASE("sweep: two-point sweep endpoints match single-point evaluations") {
  const auto sweep = run_cli(
      "sweep --scenario S1 --coupling multilocal --r 0 --sweep p2:0:1:2 --out -");
  CHECK(sweep.code == 0);
  const auto rows = data_rows(sweep.out);
  REQUIRE(rows.size() == 2);

  const auto lo = run_cli(
      "point --scenario S1 --coupling multilocal --r 0 --p1 0 --p2 0 --p3 0");
  const auto hi = run_cli(
      "point --scenario S1 --coupling multilocal --r 0 --p1 0 --p2 1 --p3 0");
  CHECK(rows[0] == data_rows(lo.out)[0]);
  CHECK(rows[1] == data_rows(hi.out)[0]);

  // endpoint values against the brute-force expansion
  const auto ref0 = oracles::brute_force_evolve(oracles::Scen::S1, false, 0.0, 0.0, 0.0, 0.0);
  const auto ref1 = oracles::brute_force_evolve(oracles::Scen::S1, false, 0.0, 0.0, 1.0, 0.0);
  CHECK(std::abs(std::stod(fields_of(rows[0])[6]) - oracles::concurrence_xstate(ref0)) <=
        1e-12);
  CHECK(std::abs(std::stod(fields_of(rows[1])[6]) - oracles::concurrence_xstate(ref1)) <=
        1e-12);
}

TEST_CASE("sweep: figure 3 parameters reach zero only in the last row") {
  const auto res = run_cli(
      "sweep --scenario S2 --coupling multilocal --r 0.3926990816987241 --fix p2=0.5 "
      "--sweep p1:0:1:201 --out -");
  CHECK(res.code == 0);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 201);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    CHECK(std::stod(fields_of(rows[i])[6]) > 1e-12);
  }
  CHECK(std::stod(fields_of(rows.back())[6]) <= 1e-12);
}

TEST_CASE("sweep: rows are ordered by r then sweep value") {
  const auto res = run_cli(
      "sweep --scenario S1 --coupling global --r 0.7,0.1,0.4 --fix p1=0.1 --fix p2=0.1 "
      "--sweep p3:0:1:5 --out -");
  CHECK(res.code == 0);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 15);
  double prev_r = -1.0, prev_v = -1.0;
  for (const auto& row : rows) {
    const auto f = fields_of(row);
    const double r = std::stod(f[2]), v = std::stod(f[5]);
    if (r != prev_r) {
      CHECK(r > prev_r);
      prev_r = r;
      prev_v = -1.0;
    }
    CHECK(v > prev_v);
    prev_v = v;
  }
}

TEST_CASE("sweep: the p variable drives p1 = p2 = p3 together") {
  const auto res =
      run_cli("sweep --scenario S1 --coupling global --r 0.3 --sweep p:0:1:5 --out -");
  CHECK(res.code == 0);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 5);
  for (const auto& row : rows) {
    const auto f = fields_of(row);
    CHECK(f[3] == f[4]);
    CHECK(f[4] == f[5]);
  }
  CHECK(run_cli("sweep --scenario S1 --coupling global --r 0.3 --fix p1=0.2 "
                "--sweep p:0:1:5")
            .code == 1);
}

TEST_CASE("sweep: conflicting --fix and --sweep variable is a usage error") {
  const auto res = run_cli(
      "sweep --scenario S1 --coupling global --r 0.1 --fix p2=0.3 --sweep p2:0:1:5");
  CHECK(res.code == 1);
}

TEST_CASE("sweep: malformed ranges are usage errors") {
  CHECK(run_cli("sweep --scenario S1 --coupling global --r 0.1 --sweep p2:0:1:1").code == 1);
  CHECK(run_cli("sweep --scenario S1 --coupling global --r 0.1 --sweep p2:0:1.5:9").code ==
        1);
  CHECK(run_cli("sweep --scenario S1 --coupling global --r 0.1 --sweep p2:0:1").code == 1);
}

TEST_CASE("figure: 1a emits 201 x 5 rows with pinned parameters") {
  const auto res = run_cli("figure --id 1a --out -");
  CHECK(res.code == 0);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 1005);
  for (const auto& row : rows) {
    const auto f = fields_of(row);
    CHECK(f[0] == "S1");
    CHECK(f[1] == "multilocal");
    CHECK(f[3] == "0.5");  // p1
    CHECK(f[5] == "0");    // p3
  }
}

TEST_CASE("figure: 2b rows satisfy p1 = p2 = p3") {
  const auto res = run_cli("figure --id 2b --samples 41 --out -");
  CHECK(res.code == 0);
  for (const auto& row : data_rows(res.out)) {
    const auto f = fields_of(row);
    CHECK(f[3] == f[4]);
    CHECK(f[4] == f[5]);
  }
}

TEST_CASE("figure: 6 fixes p2 = p3 = 0.2 and sweeps p1") {
  const auto res = run_cli("figure --id 6 --samples 21 --out -");
  CHECK(res.code == 0);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 105);
  for (const auto& row : rows) {
    const auto f = fields_of(row);
    CHECK(f[0] == "S3");
    CHECK(f[4] == "0.2");
    CHECK(f[5] == "0.2");
  }
}

TEST_CASE("figure: metadata line records the preset and r grid") {
  const auto res = run_cli("figure --id 5b --samples 11 --out -");
  const auto lines = lines_of(res.out);
  CHECK(lines[0].find("figure 5b") != std::string::npos);
  CHECK(lines[0].find("r-grid=") != std::string::npos);
  CHECK(lines[0].find("sweep=p2") != std::string::npos);
}

TEST_CASE("figure: unknown id lists the valid ones") {
  const auto res = run_cli("figure --id 9z");
  CHECK(res.code == 1);
  CHECK(res.out.find("1a") != std::string::npos);
  CHECK(res.out.find("5b") != std::string::npos);
}

TEST_CASE("figure: byte-identical across runs and to --out files") {
  const auto a = run_cli("figure --id 4 --samples 51 --out -");
  const auto b = run_cli("figure --id 4 --samples 51 --out -");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  const fs::path f1 = fs::temp_directory_path() / "unruhsim_fig.csv";
  CHECK(run_cli("figure --id 4 --samples 51 --out " + f1.string()).code == 0);
  std::ifstream s1(f1);
  std::stringstream b1;
  b1 << s1.rdbuf();
  CHECK(run_cli("figure --id 4 --samples 51 --out " + f1.string()).code == 0);
  std::ifstream s2(f1);
  std::stringstream b2;
  b2 << s2.rdbuf();
  CHECK(b1.str() == b2.str());
  fs::remove(f1);
}

TEST_CASE("every subcommand's CSV is byte-identical across runs") {
  const std::vector<std::string> cmds = {
      "point --scenario S2 --coupling global --r 0.44 --p1 0.3 --p2 0.2 --p3 0.7",
      "sweep --scenario S3 --coupling multilocal --r 0.2,0.6 --fix p2=0.2 "
      "--sweep p3:0:1:17 --out -",
      "esd --scenario S3 --coupling global --fix p2=0.2 --fix p3=0.2 --sweep-var p1 "
      "--r 0.1,0.7",
      "validate-closedform --grid 10 --seed 99 --out -",
  };
  for (const auto& cmd : cmds) {
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("an unwritable --out path is a usage error") {
  const auto res = run_cli("figure --id 3 --out /nonexistent_dir_zz/f.csv");
  CHECK(res.code == 1);
}

TEST_CASE("esd: figure 3 preset reports NoDeath with an empty threshold") {
  const auto res = run_cli(
      "esd --scenario S2 --coupling multilocal --fix p2=0.5 --sweep-var p1 "
      "--r 0,0.39269908169872414,0.7853981633974483");
  CHECK(res.code == 0);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    const auto f = fields_of(row);
    REQUIRE(f.size() == 11);
    CHECK(f[7] == "NoDeath");
    CHECK(f[8] == "");
  }
}

TEST_CASE("esd: figure 1a preset thresholds are non-increasing in r") {
  const auto res = run_cli(
      "esd --scenario S1 --coupling multilocal --fix p1=0.5 --sweep-var p2 "
      "--r 0.19634954084936207,0.39269908169872414,0.5890486225480862,"
      "0.7853981633974483");
  CHECK(res.code == 0);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 4);
  double prev = 2.0;
  for (const auto& row : rows) {
    const auto f = fields_of(row);
    CHECK(f[7] == "Found");
    const double t = std::stod(f[8]);
    CHECK(t < prev);
    prev = t;
  }
}

TEST_CASE("esd: refined tolerance reproduces thresholds within 1e-5") {
  const std::string base =
      "esd --scenario S1 --coupling multilocal --fix p1=0.5 --sweep-var p2 "
      "--r 0.7853981633974483 --tol ";
  const auto coarse = run_cli(base + "1e-6");
  const auto fine = run_cli(base + "1e-9");
  const double tc = std::stod(fields_of(data_rows(coarse.out)[0])[8]);
  const double tf = std::stod(fields_of(data_rows(fine.out)[0])[8]);
  CHECK(std::abs(tc - tf) < 1e-5);
}

TEST_CASE("validate-closedform: small grid validates and lists corrections") {
  const auto res = run_cli("validate-closedform --grid 25 --seed 7 --out -");
  CHECK(res.code == 0);
  const auto lines = lines_of(res.out);
  CHECK(lines[0].find("corrections:") != std::string::npos);
  CHECK(lines[0].find("rho41") != std::string::npos);
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 75);
  for (const auto& row : rows) {
    const auto f = fields_of(row);
    CHECK(f.back() == "validated");
    CHECK(std::stod(f[7]) <= 1e-9);
  }
}

TEST_CASE("validate-closedform: row layout is family,r,p1,p2,p3,pipeline,printed,dev,status") {
  const auto res = run_cli("validate-closedform --grid 1 --seed 3 --out -");
  const auto rows = data_rows(res.out);
  REQUIRE(rows.size() == 3);
  CHECK(fields_of(rows[0])[0] == "density_s1");
  CHECK(fields_of(rows[1])[0] == "eig_s1");
  CHECK(fields_of(rows[2])[0] == "eig_s3");
}
