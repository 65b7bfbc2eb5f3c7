#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "cli_runner.hpp"

using entorder::test_support::CliResult;
using entorder::test_support::run_cli;
using entorder::test_support::TempFile;
using nlohmann::json;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kKappa = (kSqrt2 - 1.0) / 2.0;

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  return cells;
}

std::string horodecki_half_document() {
  // 1/2 |Bell><Bell| + 1/2 |00><00| written out as a literal matrix.
  return R"({"format": 1, "rho": [
    [[0.5, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0.25, 0], [-0.25, 0], [0, 0]],
    [[0, 0], [-0.25, 0], [0.25, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0, 0]]
  ]})";
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("measure from a family") {
  const CliResult r = run_cli("measure --family werner --p 1");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["concurrence"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(j["negativity"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(j["log_negativity"].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(j["eof"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));

  const std::vector<std::string> keys = {"concurrence", "negativity",
                                         "log_negativity", "eof"};
  size_t pos = 0;
  for (const std::string& key : keys) {
    const size_t found = r.output.find("\"" + key + "\"");
    REQUIRE(found != std::string::npos);
    CHECK(found >= pos);
    pos = found;
  }
}

TEST_CASE("measure from a literal matrix document") {
  const TempFile doc(horodecki_half_document());
  const CliResult r = run_cli("measure --state " + doc.path());
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["concurrence"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(j["negativity"].get<double>() ==
        doctest::Approx(kKappa).epsilon(1e-9));
}

TEST_CASE("measure reads standard input") {
  const TempFile doc(horodecki_half_document());
  const CliResult r = run_cli("measure --state - < " + doc.path());
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["concurrence"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("measure error paths") {
  const TempFile garbage("{not json");
  CHECK(run_cli("measure --state " + garbage.path()).exit_code == 2);

  const TempFile wrong_keys(R"({"format": 1})");
  CHECK(run_cli("measure --state " + wrong_keys.path()).exit_code == 2);

  const TempFile no_format(R"({"family": "werner", "params": {"p": 0.5}})");
  CHECK(run_cli("measure --state " + no_format.path()).exit_code == 2);

  const TempFile bad_trace(R"({"format": 1, "rho": [
    [[1, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [1, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0, 0]],
    [[0, 0], [0, 0], [0, 0], [0, 0]]
  ]})");
  CHECK(run_cli("measure --state " + bad_trace.path()).exit_code == 3);

  CHECK(run_cli("measure --family bogus --p 0.5").exit_code == 4);
  CHECK(run_cli("measure --family werner --p 1.5").exit_code == 4);
  CHECK(run_cli("measure --family werner").exit_code == 4);
  CHECK(run_cli("measure --family mixture --p 0.5").exit_code == 4);
  CHECK(run_cli("measure").exit_code == 4);
  CHECK(run_cli("measure --state missing.json --family werner --p 1")
            .exit_code == 4);
  CHECK(run_cli("measure --state /nonexistent/doc.json").exit_code == 2);
}

TEST_CASE("compare verdicts") {
  const TempFile v(R"({"format": 1, "family": "werner",
                       "params": {"p": 0.5690355937288492}})");
  const TempFile x(R"({"format": 1, "family": "horodecki",
                       "params": {"p": 0.5}})");
  const CliResult r = run_cli("compare " + v.path() + " " + x.path());
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["verdict"].get<std::string>() == "order_violation");
  CHECK(j["delta"].get<double>() ==
        doctest::Approx(0.021446609406726238).epsilon(1e-6));
  CHECK(j["delta_c"].get<double>() < 0.0);
  CHECK(j["delta_n"].get<double>() > 0.0);

  const CliResult same = run_cli("compare " + x.path() + " " + x.path());
  REQUIRE(same.exit_code == 0);
  CHECK(json::parse(same.output)["verdict"].get<std::string>() == "equal_both");
}

TEST_CASE("scan constant-concurrence family") {
  const CliResult r = run_cli("scan --family xz --steps 11");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "q,concurrence,negativity,eof,log_negativity");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv(lines[i]);
    REQUIRE(cells.size() == 5);
    CHECK(std::abs(std::stod(cells[1]) - 0.5) < 1e-9);
  }
  CHECK(split_csv(lines[1])[0] == "0");
  CHECK(split_csv(lines[11])[0] == "1");
}

TEST_CASE("scan constant-negativity family") {
  const CliResult r = run_cli("scan --family xy --steps 21");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 22);
  CHECK(lines[0] == "p,concurrence,negativity,eof,log_negativity");
  for (size_t i = 1; i < lines.size(); ++i) {
    CHECK(std::abs(std::stod(split_csv(lines[i])[2]) - kKappa) < 1e-9);
  }
  CHECK(split_csv(lines[1])[0] == "0.207106781");
  CHECK(split_csv(lines[21])[0] == "0.5");
}

TEST_CASE("scan with pinned and ranged parameters") {
  const CliResult r =
      run_cli("scan --family mixture --p 0.2:0.8 --q 0.5 --steps 4");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "p,q,concurrence,negativity,eof,log_negativity");
  const std::vector<std::string> expected_p = {"0.2", "0.4", "0.6", "0.8"};
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv(lines[i]);
    REQUIRE(cells.size() == 6);
    CHECK(cells[0] == expected_p[i - 1]);
    CHECK(cells[1] == "0.5");
    CHECK(std::abs(std::stod(cells[2]) - std::stod(cells[0])) < 1e-9);
  }
}

TEST_CASE("scan rejects bad ranges") {
  CHECK(run_cli("scan --family werner --p 0.5:1.5").exit_code == 4);
  CHECK(run_cli("scan --family werner --p 0.8:0.2").exit_code == 4);
  CHECK(run_cli("scan --family werner --q 0:1").exit_code == 4);
  CHECK(run_cli("scan --family nope").exit_code == 4);
  CHECK(run_cli("scan --family werner --p abc").exit_code == 4);
  CHECK(run_cli("scan --family werner --steps 1").exit_code == 4);
}

TEST_CASE("figure 1 band and landmark points") {
  const CliResult r = run_cli("figure 1 --resolution 11");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 1 + 2 * 11 + 6);
  CHECK(lines[0] == "series,c,n");
  CHECK(lines[1] == "maxneg_boundary,0,0");
  CHECK(lines[11] == "maxneg_boundary,1,1");
  CHECK(lines[12] == "minneg_boundary,0,0");

  bool found_x = false;
  for (const auto& line : lines) {
    if (line == "X,0.5,0.207106781") found_x = true;
  }
  CHECK(found_x);
  CHECK(lines[lines.size() - 2] == "origin,0,0");
  CHECK(lines[lines.size() - 1] == "unit,1,1");
}

TEST_CASE("figure 2 delta surface") {
  const CliResult r = run_cli("figure 2 --resolution 5");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 1 + 25);
  CHECK(lines[0] == "c1,c2,delta");
  CHECK(lines[1] == "0,0,0");
  // The (c1, c2) = (0.25, 0.5) entry is a genuine violation cell.
  bool found = false;
  for (const auto& line : lines) {
    const auto cells = split_csv(line);
    if (cells[0] == "0.25" && cells[1] == "0.5") {
      found = true;
      const double expect = (0.5 - 0.25) * (kKappa - 0.25);
      CHECK(std::abs(std::stod(cells[2]) + expect) < 1e-9);
    }
  }
  CHECK(found);
}

TEST_CASE("figure 3a holds the target negativity") {
  const CliResult r = run_cli("figure 3a --nprime 0.1 --resolution 7");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "nprime,p,concurrence,negativity,eof,log_negativity");
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv(lines[i]);
    CHECK(cells[0] == "0.1");
    CHECK(std::abs(std::stod(cells[3]) - 0.1) < 1e-9);
    CHECK(std::abs(std::stod(cells[2]) - std::stod(cells[1])) < 1e-9);
  }

  const CliResult all = run_cli("figure 3a --resolution 3");
  REQUIRE(all.exit_code == 0);
  CHECK(lines_of(all.output).size() == 1 + 9 * 3);
}

TEST_CASE("figure 3b sweeps the mixing weight") {
  const CliResult r = run_cli("figure 3b --resolution 3");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 1 + 9 * 3);
  CHECK(lines[0] == "p,q,concurrence,negativity,eof,log_negativity");
  // Concurrence equals p on every row.
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv(lines[i]);
    CHECK(std::abs(std::stod(cells[2]) - std::stod(cells[0])) < 1e-9);
  }
}

TEST_CASE("figure 3c keeps the measure sum constant") {
  const CliResult r = run_cli("figure 3c --cref 0.5 --resolution 9");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "cref,nref,p,concurrence,negativity,eof,log_negativity");
  const double sum = 0.5 + kKappa;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split_csv(lines[i]);
    CHECK(std::abs(std::stod(cells[3]) + std::stod(cells[4]) - sum) < 1e-9);
  }

  const CliResult all = run_cli("figure 3c --resolution 3");
  REQUIRE(all.exit_code == 0);
  CHECK(lines_of(all.output).size() == 1 + 9 * 3);
}

TEST_CASE("figure rejects bad selectors") {
  CHECK(run_cli("figure 4").exit_code == 4);
  CHECK(run_cli("figure 3d").exit_code == 4);
  CHECK(run_cli("figure 1 --resolution 1").exit_code == 4);
  CHECK(run_cli("figure 3a --nprime 1.5").exit_code == 4);
  CHECK(run_cli("figure 3c --nref 0.3").exit_code == 4);
}

TEST_CASE("extremal verification passes") {
  const CliResult r = run_cli("extremal");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["pass"].get<bool>());
  CHECK(j["closed_form"]["max_delta"].get<double>() ==
        doctest::Approx(0.021446609406726238).epsilon(1e-12));
  CHECK(j["witness"]["max_dc"]["value"].get<double>() ==
        doctest::Approx(0.292893218813452476).epsilon(1e-9));
  CHECK(j["numeric"]["max_delta"]["value"].get<double>() ==
        doctest::Approx(0.021446609406726238).epsilon(1e-6));
}

TEST_CASE("sample reports and exit codes") {
  const CliResult r = run_cli("sample --seed 7 --rank 2 --pairs 200");
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.output);
  CHECK(j["seed"].get<std::uint64_t>() == 7);
  CHECK(j["rank"].get<int>() == 2);
  CHECK(j["pair_count"].get<int>() == 200);
  CHECK(j["ensemble"].get<std::string>() == "ginibre");
  CHECK(j["band_violations"].get<int>() == 0);
  CHECK(j["pairs_tested"].get<int>() >= 1);

  CHECK(run_cli("sample --seed 7 --rank 9 --pairs 10").exit_code == 4);
  CHECK(run_cli("sample --seed 7 --rank 2 --pairs 0").exit_code == 4);
  CHECK(run_cli("sample --rank 2").exit_code == 4);
}

TEST_CASE("help and usage errors") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code == 4);
  CHECK(run_cli("frobnicate").exit_code == 4);
  CHECK(run_cli("measure --bogus-flag 1").exit_code == 4);
}

}  // TEST_SUITE
