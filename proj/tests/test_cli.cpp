#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "pauli_ds_cli/commands.hpp"
#include "pauli_ds_cli/run_config.hpp"

using namespace pauli_ds;
using namespace pauli_ds::cli;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    for (std::string cell; std::getline(fields, cell, ',');) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("format_number round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 6.02214076e23, 1.125, 0.0}) CHECK(std::strtod(format_number(v).c_str(), nullptr) == v);
  CHECK(format_number(2.25) == "2.25");
}

TEST_CASE("spectrum") {
  const Outcome res = invoke({"spectrum"});
  CHECK(res.code == kSuccess);
  CHECK(res.out.find("\r") == std::string::npos);
  const auto rows = parse_csv(res.out);
  CHECK(rows.front() == std::vector<std::string>{"j", "n", "two_m_e", "E"});
  CHECK(std::find(rows.begin(), rows.end(), std::vector<std::string>{"1/2", "0", "2.25", "1.125"}) != rows.end());
  CHECK(rows.size() == 7);

  const auto heavy = parse_csv(invoke({"spectrum", "--mass", "2"}).out);
  for (std::size_t k = 1; k < rows.size(); ++k) CHECK(std::stod(heavy[k][3]) == 0.5 * std::stod(rows[k][3]));

  const Outcome ads = invoke({"spectrum", "--model", "ads"});
  CHECK(ads.code == kUnsupported);
  CHECK(ads.err.find("not quantized") != std::string::npos);
}

TEST_CASE("eval") {
  const Outcome res = invoke({"eval", "--model", "ds", "--j", "1/2", "--n", "0", "--grid-r", "3", "--grid-t", "3"});
  REQUIRE(res.code == kSuccess);
  const auto rows = parse_csv(res.out);
  CHECK(rows.front() == std::vector<std::string>{"r", "t", "re_f", "im_f", "re_g_small", "im_g_small", "density"});
  REQUIRE(rows.size() == 10);
  // Middle of the grid is (r, t) = (pi/2, 0); the mode carries C = 4/sqrt(pi).
  const auto& mid = rows[5];
  CHECK(std::stod(mid[0]) == doctest::Approx(M_PI / 2));
  CHECK(std::stod(mid[1]) == 0.0);
  CHECK(std::stod(mid[2]) == doctest::Approx(0.353553 * 4 / std::sqrt(M_PI)).epsilon(1e-6));
  for (int k = 1; k <= 3; ++k) CHECK(std::abs(std::stod(rows[k][6]) - std::stod(rows[k + 6][6])) < 1e-12);

  CHECK(invoke({"eval", "--grid-r", "0"}).code == kUsageError);
  CHECK(invoke({"eval", "--model", "ads"}).code == kUsageError);
  CHECK(invoke({"eval", "--model", "ads", "--energy", "1"}).code == kSuccess);
  CHECK(invoke({"eval", "--model", "ads", "--ads-formal", "--n", "1"}).code == kSuccess);
  CHECK(invoke({"eval", "--j", "1"}).code == kUsageError);
  CHECK(invoke({"eval", "--delta", "0"}).code == kUsageError);
  CHECK(invoke({"eval", "--delta", "-1"}).code == kSuccess);
}

TEST_CASE("csv and json carry identical numbers") {
  const std::vector<std::string> base = {"eval", "--model", "ads", "--energy", "4", "--j", "3/2", "--delta", "-1",
                                         "--grid-r", "5", "--grid-t", "4"};
  auto csv_args = base, json_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  json_args.insert(json_args.end(), {"--format", "json"});
  const auto rows = parse_csv(invoke(csv_args).out);
  const json doc = json::parse(invoke(json_args).out);
  REQUIRE(doc["rows"].size() == rows.size() - 1);
  for (std::size_t k = 1; k < rows.size(); ++k)
    for (std::size_t c = 0; c < rows[0].size(); ++c)
      CHECK(std::strtod(rows[k][c].c_str(), nullptr) == doc["rows"][k - 1][rows[0][c]].get<double>());
  CHECK(doc["mode"]["model"] == "ads");
  CHECK(doc["run_config"]["command"] == "eval");
}

TEST_CASE("verify default suite passes") {
  const Outcome res = invoke({"verify", "--grid-r", "80"});
  CHECK(res.code == kSuccess);
  const json doc = json::parse(res.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["failures"].empty());
  CHECK(doc["results"].size() == 72);
  for (const auto& r : doc["results"]) {
    CHECK(r["max_abs"].get<double>() < 1e-7);
    CHECK(r["mode"].contains("E"));
    CHECK(r["grid"]["r_count"] == 80);
  }
}

TEST_CASE("verify flags injected errors") {
  const Outcome e = invoke({"verify", "--model", "ds", "--j", "1/2", "--n", "0", "--inject-error", "e-perturb=0.01"});
  CHECK(e.code == kVerificationFailed);
  const json doc = json::parse(e.out);
  CHECK(doc["pass"] == false);
  bool radial_flagged = false;
  for (const auto& f : doc["failures"]) radial_flagged = radial_flagged || f["equation_id"] == "RadialODE";
  CHECK(radial_flagged);

  const json swapped = json::parse(
      invoke({"verify", "--model", "ads", "--j", "1/2", "--energy", "1", "--inject-error", "time-profile=swap"}).out);
  for (const auto& r : swapped["results"])
    CHECK(r["pass"] == (r["equation_id"] == "AdSRadialODE"));

  const json zeroed =
      json::parse(invoke({"verify", "--model", "ds", "--j", "1/2", "--n", "1", "--inject-error", "small=zero"}).out);
  for (const auto& r : zeroed["results"]) CHECK(r["pass"] == (r["equation_id"] != "ReducedSystem"));

  CHECK(invoke({"verify", "--inject-error", "bogus=1"}).code == kUsageError);
}

TEST_CASE("verify scaling section") {
  const Outcome res = invoke({"verify", "--model", "ds", "--j", "1/2", "--n", "0", "--delta", "+1", "--grid-r", "60",
                              "--masses", "10,20,40"});
  CHECK(res.code == kSuccess);
  const json doc = json::parse(res.out);
  REQUIRE(doc["scaling"].size() == 1);
  const auto& s = doc["scaling"][0];
  CHECK(s["monotone"] == true);
  CHECK(s["points"].size() == 3);
  CHECK(s["doubling_ratios"].size() == 2);
  CHECK(invoke({"verify", "--masses", "10"}).code == kUsageError);
}

TEST_CASE("usage errors and help") {
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"frobnicate"}).code == kUsageError);
  CHECK(invoke({"spectrum", "--model", "flat"}).code == kUsageError);
  CHECK(invoke({"spectrum", "--format", "xml"}).code == kUsageError);
  CHECK(invoke({"spectrum", "--mass", "-1"}).code == kUsageError);
  CHECK(invoke({"--help"}).code == kSuccess);
}

TEST_CASE("output file") {
  const auto path = std::filesystem::temp_directory_path() / "pauli_ds_cli_test.csv";
  const Outcome res = invoke({"spectrum", "--out", path.string()});
  CHECK(res.code == kSuccess);
  CHECK(res.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == invoke({"spectrum"}).out);
  std::filesystem::remove(path);
  CHECK(invoke({"spectrum", "--out", "/nonexistent-dir/x.csv"}).code == kUsageError);
}

TEST_CASE("run config json round-trip") {
  RunConfig config;
  config.command = "verify";
  config.model = ModelKind::OscillatingAdS;
  config.j = HalfInt::from_twice(5);
  config.two_m_e = 0.75;
  config.masses = {10, 20};
  config.inject_errors = {"small=zero"};
  config.format = OutputFormat::csv;
  const json once = to_json(config);
  CHECK(to_json(run_config_from_json(once)) == once);
  CHECK(once["j"] == "5/2");
  CHECK(once["n"].is_null());
}
