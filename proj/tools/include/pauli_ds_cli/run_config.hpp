#ifndef PAULI_DS_CLI_RUN_CONFIG_HPP
#define PAULI_DS_CLI_RUN_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pauli_ds/half_int.hpp"
#include "pauli_ds/model.hpp"
#include "pauli_ds/verify.hpp"

namespace pauli_ds::cli {

enum class OutputFormat { csv, json };

/// Everything a subcommand needs. Defaults match the documented --help values.
struct RunConfig {
  std::string command;
  /// Empty means both models (verify only; spectrum and eval default to ds).
  std::optional<ModelKind> model;
  double mass = 1.0;

  // A single mode (eval), or a restriction of the swept ranges (spectrum, verify).
  std::optional<HalfInt> j;
  std::optional<int> n;
  std::optional<int> delta;
  std::optional<double> two_m_e;  // AdS 2ME
  HalfInt m = kHalf;
  bool ads_formal = false;

  HalfInt j_max = HalfInt::from_twice(3);
  int n_max = 2;
  std::vector<double> ads_energies = {0.5, 1.0, 4.0};

  int grid_r = 200;
  int grid_t = 9;
  double margin = 0.05;
  double ads_r_max = 3.0;
  double theta = 1.0;
  double phi = 0.0;

  double tolerance = 1e-7;
  std::vector<double> masses;
  std::vector<std::string> inject_errors;  // raw KEY=VAL

  std::optional<OutputFormat> format;
  std::string out;

  OutputFormat output_format() const;
  std::vector<ModelKind> models() const;
  std::vector<int> deltas() const;

  /// Parsed --inject-error entries. Throws std::invalid_argument on unknown keys.
  FaultInjection fault() const;

  /// Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

nlohmann::json to_json(const RunConfig& config);
RunConfig run_config_from_json(const nlohmann::json& value);

}  // namespace pauli_ds::cli

#endif  // PAULI_DS_CLI_RUN_CONFIG_HPP
