#include "pauli_ds_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "pauli_ds/errors.hpp"
#include "pauli_ds/radial.hpp"
#include "pauli_ds/verify.hpp"

namespace pauli_ds::cli {
namespace {

using nlohmann::json;
using Cell = std::variant<double, int, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string cell_text(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<int>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

json cell_json(const Cell& cell) {
  return std::visit([](const auto& v) { return json(v); }, cell);
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t k = 0; k < table.columns.size(); ++k) out << (k ? "," : "") << table.columns[k];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << cell_text(row[k]);
    out << '\n';
  }
}

json table_json(const Table& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json object = json::object();
    for (std::size_t k = 0; k < row.size(); ++k) object[table.columns[k]] = cell_json(row[k]);
    rows.push_back(std::move(object));
  }
  return rows;
}

void write_table(const RunConfig& config, const Table& table, json extra, std::ostream& out) {
  if (config.output_format() == OutputFormat::csv) {
    write_csv(table, out);
    return;
  }
  json doc = std::move(extra);
  doc["run_config"] = to_json(config);
  doc["columns"] = table.columns;
  doc["rows"] = table_json(table);
  out << doc.dump(2) << '\n';
}

Model make_model(ModelKind kind, double mass) {
  return kind == ModelKind::ExpandingDS ? Model::expanding_ds(mass) : Model::oscillating_ads(mass);
}

std::vector<HalfInt> j_values(const RunConfig& config) {
  if (config.j) return {*config.j};
  std::vector<HalfInt> out;
  for (int twice = 1; twice <= config.j_max.twice(); twice += 2) out.push_back(HalfInt::from_twice(twice));
  return out;
}

std::vector<int> n_values(const RunConfig& config) {
  if (config.n) return {*config.n};
  std::vector<int> out;
  for (int n = 0; n <= config.n_max; ++n) out.push_back(n);
  return out;
}

std::vector<double> ads_energy_values(const RunConfig& config) {
  if (config.two_m_e) return {*config.two_m_e};
  return config.ads_energies;
}

json mode_json(const ModeLabel& label) {
  return {{"model", label.model == ModelKind::ExpandingDS ? "ds" : "ads"},
          {"j", label.qn.j.str()},
          {"m", label.qn.m.str()},
          {"n", label.qn.n},
          {"delta", label.qn.delta},
          {"E", label.spectral_parameter},
          {"mass", label.mass}};
}

json grid_json(const GridSummary& g) {
  return {{"r_count", g.r_count}, {"t_count", g.t_count}, {"r_min", g.r_min}, {"r_max", g.r_max},
          {"t_min", g.t_min},     {"t_max", g.t_max},     {"margin", g.margin}};
}

std::vector<RadialMode> verify_modes(const RunConfig& config, ModelKind kind) {
  const Model model = make_model(kind, config.mass);
  std::vector<RadialMode> modes;
  for (HalfInt j : j_values(config)) {
    for (int delta : config.deltas()) {
      const QuantumNumbers base{j, kHalf, 0, delta};
      if (kind == ModelKind::ExpandingDS) {
        for (int n : n_values(config)) {
          QuantumNumbers qn = base;
          qn.n = n;
          modes.push_back(RadialMode::expanding_ds(model, qn));
        }
      } else if (config.ads_formal) {
        for (int n : n_values(config)) {
          QuantumNumbers qn = base;
          qn.n = n;
          modes.push_back(RadialMode::ads_formal_polynomial(model, qn));
        }
      } else {
        for (double e : ads_energy_values(config)) modes.push_back(RadialMode::oscillating_ads(model, base, e));
      }
    }
  }
  return modes;
}

struct ScalingOutcome {
  json entry;
  bool pass = true;
};

ScalingOutcome run_scaling(const RunConfig& config, ModelKind kind, int delta, const Grid& grid) {
  ModeFamilySpec family;
  family.model = kind;
  family.qn = {config.j.value_or(kHalf), kHalf, config.n.value_or(0), delta};
  family.two_m_e = ads_energy_values(config).front();
  const auto points = relativistic_limit_scaling(family, config.masses, grid);

  ScalingOutcome outcome;
  json pts = json::array();
  json ratios = json::array();
  bool monotone = true;
  bool ratios_ok = true;
  for (std::size_t k = 0; k < points.size(); ++k) {
    pts.push_back({{"mass", points[k].mass}, {"residual", points[k].residual}});
    if (k == 0) continue;
    monotone = monotone && points[k].residual < points[k - 1].residual;
    const double ratio = points[k].residual / points[k - 1].residual;
    const bool doubling = points[k].mass == 2.0 * points[k - 1].mass && points[k - 1].mass >= 10.0;
    if (doubling) {
      const bool ok = ratio >= 0.35 && ratio <= 0.65;
      ratios_ok = ratios_ok && ok;
      ratios.push_back({{"from", points[k - 1].mass}, {"to", points[k].mass}, {"ratio", ratio}, {"pass", ok}});
    }
  }
  outcome.pass = monotone && ratios_ok;
  const ModeLabel label = label_of(make_mode(family, config.masses.front()));
  outcome.entry = {{"equation_id", to_string(kind == ModelKind::ExpandingDS ? EquationId::RelativisticFirstOrder
                                                                             : EquationId::AdSSystem)},
                   {"mode", mode_json(label)},
                   {"two_m_e", 2.0 * label.mass * label.spectral_parameter},
                   {"points", pts},
                   {"doubling_ratios", ratios},
                   {"monotone", monotone},
                   {"pass", outcome.pass}};
  return outcome;
}

}  // namespace

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, ptr);
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.models().front() != ModelKind::ExpandingDS) {
    err << "error: spectrum is not quantized for the oscillating anti-de Sitter model\n";
    return kUnsupported;
  }
  const Model model = Model::expanding_ds(config.mass);
  Table table{{"j", "n", "two_m_e", "E"}, {}};
  for (HalfInt j : j_values(config)) {
    for (int n : n_values(config)) {
      const double e = spectrum(model, j, n);
      table.rows.push_back({j.str(), n, 2.0 * config.mass * e, e});
    }
  }
  write_table(config, table, json::object(), out);
  return kSuccess;
}

int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ModelKind kind = config.models().front();
  const Model model = make_model(kind, config.mass);
  const QuantumNumbers qn{config.j.value_or(kHalf), config.m, config.n.value_or(0), config.delta.value_or(1)};
  RadialMode mode = [&] {
    if (kind == ModelKind::ExpandingDS) return RadialMode::expanding_ds(model, qn);
    if (config.ads_formal) return RadialMode::ads_formal_polynomial(model, qn);
    if (!config.two_m_e) throw std::invalid_argument("eval --model ads needs --energy (the value of 2ME)");
    return RadialMode::oscillating_ads(model, qn, *config.two_m_e);
  }();
  const Grid grid = Grid::uniform(model, config.grid_r, config.grid_t, config.margin, config.ads_r_max);

  Table table{{"r", "t", "re_f", "im_f", "re_g_small", "im_g_small", "density"}, {}};
  for (double t : grid.t_points) {
    for (double r : grid.r_points) {
      const cplx big = big_component(mode, t, r);
      const cplx small = radial_small(mode, r, t);
      const double density = pauli_wavefunction(mode, t, r, config.theta, config.phi).density();
      table.rows.push_back({r, t, big.real(), big.imag(), small.real(), small.imag(), density});
    }
  }
  json extra = {{"mode", mode_json(label_of(mode))},
                {"amplitude", {mode.amplitude().real(), mode.amplitude().imag()}},
                {"formal", mode.is_formal()}};
  write_table(config, table, std::move(extra), out);
  return kSuccess;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const FaultInjection fault = config.fault();
  json results = json::array();
  json failures = json::array();
  json scaling = json::array();
  Table table{{"equation_id", "model", "j", "m", "n", "delta", "E", "max_abs", "rms", "r_count", "t_count", "pass"},
              {}};
  bool pass = true;

  for (ModelKind kind : config.models()) {
    const Model model = make_model(kind, config.mass);
    const Grid grid = Grid::uniform(model, config.grid_r, config.grid_t, config.margin, config.ads_r_max);
    for (const RadialMode& mode : verify_modes(config, kind)) {
      for (const ResidualReport& report : {radial_ode_residual(mode, grid, fault), pauli_pde_residual(mode, grid, fault),
                                           first_order_residual(mode, grid, fault)}) {
        const bool ok = report.max_abs < config.tolerance;
        pass = pass && ok;
        const json mode_entry = mode_json(report.mode);
        results.push_back({{"equation_id", to_string(report.equation_id)},
                           {"mode", mode_entry},
                           {"max_abs", report.max_abs},
                           {"rms", report.rms},
                           {"scale", report.scale},
                           {"grid", grid_json(report.grid)},
                           {"pass", ok}});
        if (!ok) failures.push_back({{"equation_id", to_string(report.equation_id)}, {"mode", mode_entry}});
        const auto& qn = report.mode.qn;
        table.rows.push_back({std::string(to_string(report.equation_id)), std::string(model.name()), qn.j.str(),
                              qn.m.str(), qn.n, qn.delta, report.mode.spectral_parameter, report.max_abs, report.rms,
                              report.grid.r_count, report.grid.t_count, std::string(ok ? "true" : "false")});
      }
    }
    if (!config.masses.empty()) {
      for (int delta : config.deltas()) {
        ScalingOutcome outcome = run_scaling(config, kind, delta, grid);
        pass = pass && outcome.pass;
        if (!outcome.pass) {
          failures.push_back({{"equation_id", outcome.entry["equation_id"]}, {"mode", outcome.entry["mode"]}});
        }
        scaling.push_back(std::move(outcome.entry));
      }
    }
  }

  for (const auto& failure : failures) {
    err << "FAIL " << failure["equation_id"].get<std::string>() << " " << failure["mode"].dump() << '\n';
  }
  if (config.output_format() == OutputFormat::csv) {
    write_csv(table, out);
  } else {
    json doc = {{"run_config", to_json(config)},
                {"results", results},
                {"scaling", scaling},
                {"failures", failures},
                {"pass", pass}};
    out << doc.dump(2) << '\n';
  }
  return pass ? kSuccess : kVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Pauli-equation modes in expanding de Sitter and oscillating anti-de Sitter backgrounds"};
  app.name("pauli-ds");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::string model_name;
  std::string j_text, m_text = config.m.str(), j_max_text = config.j_max.str();
  std::string format_name;
  int delta = 0;
  int n = -1;
  double two_m_e = 0.0;

  app.add_option("--model", model_name, "Background: ds (expanding) or ads (oscillating); verify runs both by default")
      ->check(CLI::IsMember({"ds", "ads"}));
  app.add_option("--mass", config.mass, "Nonrelativistic mass M (curvature radius = 1)")->capture_default_str();
  app.add_option("--j", j_text, "Total angular momentum as p/2 (single mode, or restricts the sweep)");
  app.add_option("--m", m_text, "Projection m as p/2 (eval)")->capture_default_str();
  app.add_option("--n", n, "Radial quantum number (single mode, or restricts the sweep)");
  app.add_option("--delta", delta, "Parity label +1 or -1 (default: both where a sweep applies, +1 for eval)");
  app.add_option("--energy", two_m_e, "AdS spectral parameter, given as 2ME > 0");
  app.add_flag("--ads-formal", config.ads_formal, "Use the terminating AdS solution with 2ME = -(j+1+n)^2");
  app.add_option("--j-max", j_max_text, "Largest j in sweeps")->capture_default_str();
  app.add_option("--n-max", config.n_max, "Largest n in sweeps")->capture_default_str();
  app.add_option("--ads-energies", config.ads_energies, "AdS 2ME values swept by verify")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--grid-r", config.grid_r, "Radial grid points")->capture_default_str();
  app.add_option("--grid-t", config.grid_t, "Time grid points")->capture_default_str();
  app.add_option("--margin", config.margin, "Distance kept from singular edges")->capture_default_str();
  app.add_option("--r-max", config.ads_r_max, "Outer radius of the AdS grid")->capture_default_str();
  app.add_option("--theta", config.theta, "Polar angle for |Psi|^2 (eval)")->capture_default_str();
  app.add_option("--phi", config.phi, "Azimuth for |Psi|^2 (eval)")->capture_default_str();
  app.add_option("--tolerance", config.tolerance, "Relative residual threshold (verify)")->capture_default_str();
  app.add_option("--masses", config.masses, "Comma-separated increasing masses for the nonrelativistic-limit scan")
      ->delimiter(',');
  app.add_option("--inject-error", config.inject_errors,
                 "Corrupt the candidate: e-perturb=X, time-profile=swap, small=zero (repeatable)");
  app.add_option("--format", format_name, "csv or json (default: csv; json for verify)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", config.out, "Output path (default: stdout)");

  app.add_subcommand("spectrum", "Quantized de Sitter spectrum rows (j, n, 2ME, E)");
  app.add_subcommand("eval", "Evaluate one mode on the (r, t) grid");
  app.add_subcommand("verify", "Residual audit of the closed-form solutions");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    config.command = app.get_subcommands().front()->get_name();
    if (!model_name.empty()) config.model = parse_model_kind(model_name);
    if (!j_text.empty()) config.j = HalfInt::parse(j_text);
    config.m = HalfInt::parse(m_text);
    config.j_max = HalfInt::parse(j_max_text);
    if (app.count("--n")) config.n = n;
    if (app.count("--delta")) config.delta = delta;
    if (app.count("--energy")) config.two_m_e = two_m_e;
    if (!format_name.empty()) config.format = format_name == "csv" ? OutputFormat::csv : OutputFormat::json;
    config.validate();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      err << "error: cannot open " << config.out << " for writing\n";
      return kUsageError;
    }
    sink = &file;
  }

  try {
    if (config.command == "spectrum") return cmd_spectrum(config, *sink, err);
    if (config.command == "eval") return cmd_eval(config, *sink, err);
    return cmd_verify(config, *sink, err);
  } catch (const NotQuantizedError& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const NotImplementedError& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupported;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace pauli_ds::cli
