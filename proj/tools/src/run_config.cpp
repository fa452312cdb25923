#include "pauli_ds_cli/run_config.hpp"

#include <stdexcept>

#include "pauli_ds/errors.hpp"

namespace pauli_ds::cli {
namespace {

using nlohmann::json;

template <class T>
json optional_json(const std::optional<T>& value) {
  return value ? json(*value) : json(nullptr);
}

json optional_json(const std::optional<HalfInt>& value) { return value ? json(value->str()) : json(nullptr); }

template <class T>
std::optional<T> optional_from(const json& object, const char* key) {
  if (!object.contains(key) || object.at(key).is_null()) return std::nullopt;
  return object.at(key).get<T>();
}

std::optional<HalfInt> optional_half(const json& object, const char* key) {
  if (!object.contains(key) || object.at(key).is_null()) return std::nullopt;
  return HalfInt::parse(object.at(key).get<std::string>());
}

void check_j(HalfInt j, const char* what) {
  if (j.twice() < 1 || j.is_integer()) {
    throw std::invalid_argument(std::string(what) + " must be a positive half-odd integer such as 1/2 or 3/2");
  }
}

}  // namespace

OutputFormat RunConfig::output_format() const {
  if (format) return *format;
  return command == "verify" ? OutputFormat::json : OutputFormat::csv;
}

std::vector<ModelKind> RunConfig::models() const {
  if (model) return {*model};
  if (command == "verify") return {ModelKind::ExpandingDS, ModelKind::OscillatingAdS};
  return {ModelKind::ExpandingDS};
}

std::vector<int> RunConfig::deltas() const {
  if (delta) return {*delta};
  return {+1, -1};
}

FaultInjection RunConfig::fault() const {
  FaultInjection fault;
  for (const std::string& entry : inject_errors) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("--inject-error expects KEY=VAL, got '" + entry + "'");
    const std::string key = entry.substr(0, eq);
    const std::string value = entry.substr(eq + 1);
    if (key == "e-perturb") {
      std::size_t used = 0;
      fault.e_relative_shift = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument("e-perturb expects a number");
    } else if (key == "time-profile" && value == "swap") {
      fault.swap_time_profile = true;
    } else if (key == "small" && value == "zero") {
      fault.zero_small_component = true;
    } else {
      throw std::invalid_argument("unknown --inject-error '" + entry +
                                  "' (known: e-perturb=X, time-profile=swap, small=zero)");
    }
  }
  return fault;
}

void RunConfig::validate() const {
  if (command != "spectrum" && command != "eval" && command != "verify") {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  if (!(mass > 0.0)) throw std::invalid_argument("--mass must be positive");
  if (j) check_j(*j, "--j");
  check_j(j_max, "--j-max");
  if (n && *n < 0) throw std::invalid_argument("--n must be non-negative");
  if (n_max < 0) throw std::invalid_argument("--n-max must be non-negative");
  if (delta && *delta != 1 && *delta != -1) throw std::invalid_argument("--delta must be +1 or -1");
  if (two_m_e && !(*two_m_e > 0.0)) throw std::invalid_argument("--energy (2ME) must be positive");
  for (double e : ads_energies) {
    if (!(e > 0.0)) throw std::invalid_argument("AdS 2ME values must be positive");
  }
  if (grid_r < 1 || grid_t < 1) throw std::invalid_argument("grid must have at least one r and one t point");
  if (!(margin > 0.0)) throw std::invalid_argument("--margin must be positive");
  if (!(tolerance > 0.0)) throw std::invalid_argument("--tolerance must be positive");
  if (!masses.empty()) {
    if (masses.size() < 2) throw std::invalid_argument("--masses needs at least two values");
    for (std::size_t k = 0; k < masses.size(); ++k) {
      if (!(masses[k] > 0.0) || (k > 0 && !(masses[k] > masses[k - 1]))) {
        throw std::invalid_argument("--masses must be positive and strictly increasing");
      }
    }
  }
  if (command == "eval") {
    const HalfInt jv = j.value_or(kHalf);
    QuantumNumbers{jv, m, n.value_or(0), delta.value_or(1)}.validate();
  }
  fault();
}

json to_json(const RunConfig& c) {
  json out;
  out["command"] = c.command;
  out["model"] = c.model ? json(*c.model == ModelKind::ExpandingDS ? "ds" : "ads") : json(nullptr);
  out["mass"] = c.mass;
  out["j"] = optional_json(c.j);
  out["n"] = optional_json(c.n);
  out["delta"] = optional_json(c.delta);
  out["two_m_e"] = optional_json(c.two_m_e);
  out["m"] = c.m.str();
  out["ads_formal"] = c.ads_formal;
  out["j_max"] = c.j_max.str();
  out["n_max"] = c.n_max;
  out["ads_energies"] = c.ads_energies;
  out["grid_r"] = c.grid_r;
  out["grid_t"] = c.grid_t;
  out["margin"] = c.margin;
  out["ads_r_max"] = c.ads_r_max;
  out["theta"] = c.theta;
  out["phi"] = c.phi;
  out["tolerance"] = c.tolerance;
  out["masses"] = c.masses;
  out["inject_errors"] = c.inject_errors;
  out["format"] = c.format ? json(*c.format == OutputFormat::csv ? "csv" : "json") : json(nullptr);
  out["out"] = c.out;
  return out;
}

RunConfig run_config_from_json(const json& v) {
  RunConfig c;
  c.command = v.at("command").get<std::string>();
  if (auto model = optional_from<std::string>(v, "model")) c.model = parse_model_kind(*model);
  c.mass = v.at("mass").get<double>();
  c.j = optional_half(v, "j");
  c.n = optional_from<int>(v, "n");
  c.delta = optional_from<int>(v, "delta");
  c.two_m_e = optional_from<double>(v, "two_m_e");
  c.m = HalfInt::parse(v.at("m").get<std::string>());
  c.ads_formal = v.at("ads_formal").get<bool>();
  c.j_max = HalfInt::parse(v.at("j_max").get<std::string>());
  c.n_max = v.at("n_max").get<int>();
  c.ads_energies = v.at("ads_energies").get<std::vector<double>>();
  c.grid_r = v.at("grid_r").get<int>();
  c.grid_t = v.at("grid_t").get<int>();
  c.margin = v.at("margin").get<double>();
  c.ads_r_max = v.at("ads_r_max").get<double>();
  c.theta = v.at("theta").get<double>();
  c.phi = v.at("phi").get<double>();
  c.tolerance = v.at("tolerance").get<double>();
  c.masses = v.at("masses").get<std::vector<double>>();
  c.inject_errors = v.at("inject_errors").get<std::vector<std::string>>();
  if (auto format = optional_from<std::string>(v, "format")) {
    if (*format == "csv") {
      c.format = OutputFormat::csv;
    } else if (*format == "json") {
      c.format = OutputFormat::json;
    } else {
      throw std::invalid_argument("unknown format '" + *format + "'");
    }
  }
  c.out = v.at("out").get<std::string>();
  return c;
}

}  // namespace pauli_ds::cli
