// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include "pauli_ds/angular.hpp"
#include "pauli_ds/quadrature.hpp"
#include "pauli_ds/specfun.hpp"
#include "pauli_ds/verify.hpp"
#include "pauli_ds_cli/commands.hpp"

using namespace pauli_ds;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

std::vector<HalfInt> projections(HalfInt j) {
  std::vector<HalfInt> out;
  for (int t = -j.twice(); t <= j.twice(); t += 2) out.push_back(h(t));
  return out;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

Verdict quantization() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int tj : {1, 3, 5}) {
    for (int delta : {1, -1}) {
      const auto values = eigenvalue_oracle(Model::expanding_ds(1.0), h(tj), delta, 2, 4000);
      for (int n = 0; n <= 2; ++n) {
        const double want = std::pow(0.5 * tj + 1 + n, 2);
        worst = std::max(worst, std::abs(values[n] - want) / want);
      }
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst < 1e-3 && seconds < 10.0, "max rel err " + fmt("%.3e", worst) + ", " + fmt("%.2f", seconds) + " s"};
}

Verdict exact_residuals() {
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  int modes = 0;
  auto audit = [&](const RadialMode& mode, const Grid& grid) {
    for (const auto& r : {radial_ode_residual(mode, grid), pauli_pde_residual(mode, grid), first_order_residual(mode, grid)})
      worst = std::max(worst, r.max_abs);
    ++modes;
  };
  const Model ds = Model::expanding_ds(1.0), ads = Model::oscillating_ads(1.0);
  const Grid ds_grid = Grid::uniform(ds, 200, 9), ads_grid = Grid::uniform(ads, 200, 9);
  for (int tj = 1; tj <= 7; tj += 2) {
    for (int delta : {1, -1}) {
      for (int n = 0; n <= 3; ++n) audit(RadialMode::expanding_ds(ds, {h(tj), kHalf, n, delta}), ds_grid);
      if (tj <= 3)
        for (double e : {0.5, 1.0, 4.0}) audit(RadialMode::oscillating_ads(ads, {h(tj), kHalf, 0, delta}, e), ads_grid);
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst < 1e-7 && seconds < 30.0,
          std::to_string(modes) + " modes, max rel residual " + fmt("%.3e", worst) + ", " + fmt("%.2f", seconds) + " s"};
}

Verdict limit_scaling() {
  const double masses[] = {10.0, 20.0, 40.0};
  Verdict v;
  double lo = 1.0, hi = 0.0;
  for (ModelKind kind : {ModelKind::ExpandingDS, ModelKind::OscillatingAdS}) {
    const Model model = kind == ModelKind::ExpandingDS ? Model::expanding_ds(1.0) : Model::oscillating_ads(1.0);
    const Grid grid = Grid::uniform(model, 100, 7);
    for (int delta : {1, -1}) {
      const auto pts = relativistic_limit_scaling({kind, {kHalf, kHalf, 0, delta}, 1.0}, masses, grid);
      for (std::size_t k = 1; k < pts.size(); ++k) {
        const double ratio = pts[k].residual / pts[k - 1].residual;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        v.pass = v.pass && ratio >= 0.35 && ratio <= 0.65;
      }
    }
  }
  v.detail = "doubling ratios in [" + fmt("%.4f", lo) + ", " + fmt("%.4f", hi) + "]";
  return v;
}

Verdict angular_identities() {
  double rec = 0.0, par = 0.0, sig = 0.0, uni = 0.0;
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> amp(-2.0, 2.0), phi(-std::numbers::pi, std::numbers::pi);
  for (int tj = 1; tj <= 7; tj += 2) {
    const HalfInt j = h(tj);
    for (HalfInt m : projections(j)) {
      for (double theta : {0.2, 0.8, 1.5, 2.3, 2.9}) {
        rec = std::max(rec, recurrence_residual(j, m, theta));
        for (int delta : {1, -1}) {
          const QuantumNumbers qn{j, m, 0, delta};
          const cplx f1(amp(rng), amp(rng)), f2(amp(rng), amp(rng));
          par = std::max(par, parity_check(qn, f1, f2, theta, phi(rng)));
          const Spinor4 f = fixed_parity_amplitudes(delta, f1, f2);
          sig = std::max(sig, sigma_action_residual(qn, f, theta, phi(rng)));
        }
        for (HalfInt a : projections(j)) {
          for (HalfInt b : projections(j)) {
            double dot = 0.0;
            for (HalfInt k : projections(j)) dot += wigner_small_d(j, a, k, theta) * wigner_small_d(j, b, k, theta);
            uni = std::max(uni, std::abs(dot - (a == b ? 1.0 : 0.0)));
            uni = std::max(uni, std::abs(wigner_small_d(j, a, b, theta) - wigner_small_d(j, -b, -a, theta)));
          }
        }
      }
    }
  }
  return {rec < 1e-7 && par < 1e-12 && sig < 1e-7 && uni < 1e-12,
          "recurrence " + fmt("%.2e", rec) + ", parity " + fmt("%.2e", par) + ", sigma " + fmt("%.2e", sig) +
              ", unitarity/symmetry " + fmt("%.2e", uni)};
}

Verdict stationary_density() {
  double worst = 0.0;
  const Model ds = Model::expanding_ds(1.0), ads = Model::oscillating_ads(1.0);
  const Grid ds_grid = Grid::uniform(ds, 10, 3), ads_grid = Grid::uniform(ads, 10, 3);
  for (int tj = 1; tj <= 7; tj += 2) {
    for (int delta : {1, -1}) {
      for (int n = 0; n <= 3; ++n)
        worst = std::max(worst, density_stationarity(RadialMode::expanding_ds(ds, {h(tj), kHalf, n, delta}), ds_grid, 100));
      if (tj <= 3)
        for (double e : {0.5, 1.0, 4.0})
          worst = std::max(
              worst, density_stationarity(RadialMode::oscillating_ads(ads, {h(tj), kHalf, 0, delta}, e), ads_grid, 100));
    }
  }
  return {worst < 1e-12, "max |d density| " + fmt("%.2e", worst)};
}

Verdict orthogonality() {
  double worst = 0.0;
  for (int tj = 1; tj <= 7; tj += 2) {
    for (int delta : {1, -1}) {
      const auto g = orthogonality_gram(h(tj), delta, 3);
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) worst = std::max(worst, std::abs(g[a][b] - (a == b ? 1.0 : 0.0)));
    }
  }
  const double integral = GaussLegendreRule(64).integrate(
      [](double r) { return std::pow(std::sin(r / 2), 4) * std::pow(std::cos(r / 2), 2); }, 0.0, std::numbers::pi);
  const double closed = std::abs(integral - std::numbers::pi / 16);
  return {worst < 1e-8 && closed < 1e-12, "max |G - I| " + fmt("%.2e", worst) + ", closed-form integral err " + fmt("%.2e", closed)};
}

Verdict special_functions() {
  double pfaff = 0.0, poly = 0.0, deriv = 0.0;
  for (int k = 1; k <= 50; ++k) {
    const double y = -0.45 * k / 51.0;
    for (double j : {0.5, 1.5, 3.5}) {
      const HypParams p(cplx(1 + j, -1.0), cplx(1 + j, 1.0), j + 2);
      pfaff = std::max(pfaff, std::abs(hyp2f1_route::pfaff(p, y) - hyp2f1_route::series(p, y)));
    }
  }
  for (int n = 0; n <= 6; ++n) {
    for (double y : {-0.9, -0.3, 0.2, 0.6, 0.95}) {
      const double b = n + 2.5, c = 1.5;
      long double sum = 0.0L, term = 1.0L;
      for (int k = 0; k <= n; ++k) {
        sum += term;
        term *= static_cast<long double>(-n + k) * (b + k) / ((c + k) * (k + 1)) * y;
      }
      poly = std::max(poly, static_cast<double>(std::abs(hyp2f1(HypParams(-n, b, c), y).real() - sum) /
                                                std::max(1.0L, std::abs(sum))));
    }
  }
  const HypParams p(cplx(1.5, -1.0), cplx(1.5, 1.0), 2.5);
  const double step = 1e-4;
  for (double y : {-2.0, -0.4, 0.1, 0.45}) {
    const cplx fd = (-hyp2f1(p, y + 2 * step) + 8.0 * hyp2f1(p, y + step) - 8.0 * hyp2f1(p, y - step) +
                     hyp2f1(p, y - 2 * step)) /
                    (12 * step);
    deriv = std::max(deriv, std::abs(hyp2f1_deriv(p, y) - fd));
  }
  return {pfaff < 1e-12 && poly < 1e-14 && deriv < 1e-7,
          "pfaff/direct " + fmt("%.2e", pfaff) + ", polynomial " + fmt("%.2e", poly) + ", derivative " + fmt("%.2e", deriv)};
}

Verdict cli_contract() {
  auto invoke = [](std::vector<std::string> args, std::string& out) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    out = o.str();
    return code;
  };
  std::string out;
  const int default_code = invoke({"verify"}, out);
  bool pass = default_code == 0 && nlohmann::json::parse(out)["pass"] == true;

  struct Injection {
    std::vector<std::string> args;
    std::string flagged;
  };
  const Injection injections[] = {
      {{"verify", "--model", "ds", "--inject-error", "e-perturb=0.01"}, "RadialODE"},
      {{"verify", "--model", "ads", "--inject-error", "time-profile=swap"}, "AdSPDE"},
      {{"verify", "--model", "ds", "--inject-error", "small=zero"}, "ReducedSystem"},
  };
  int flagged = 0;
  for (const auto& inj : injections) {
    if (invoke(inj.args, out) != 1) continue;
    const auto doc = nlohmann::json::parse(out);
    for (const auto& f : doc["failures"])
      if (f["equation_id"] == inj.flagged) {
        ++flagged;
        break;
      }
  }
  pass = pass && flagged == 3;

  const std::vector<std::string> base = {"eval", "--model", "ads", "--energy", "1", "--grid-r", "7", "--grid-t", "3"};
  std::string csv, js;
  auto csv_args = base, js_args = base;
  csv_args.insert(csv_args.end(), {"--format", "csv"});
  js_args.insert(js_args.end(), {"--format", "json"});
  invoke(csv_args, csv);
  invoke(js_args, js);
  const auto doc = nlohmann::json::parse(js);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);
  std::vector<std::string> header;
  for (std::istringstream hs(line); std::getline(hs, line, ',');) header.push_back(line);
  std::size_t row = 0, mismatches = 0;
  while (std::getline(lines, line)) {
    std::istringstream cells(line);
    std::string cell;
    for (std::size_t c = 0; std::getline(cells, cell, ','); ++c)
      if (std::strtod(cell.c_str(), nullptr) != doc["rows"][row][header[c]].get<double>()) ++mismatches;
    ++row;
  }
  pass = pass && mismatches == 0 && row == doc["rows"].size() && row > 0;
  return {pass, "default exit " + std::to_string(default_code) + ", injections flagged " + std::to_string(flagged) +
                    "/3, csv/json mismatches " + std::to_string(mismatches)};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"quantization reproduction", quantization},
      {"exact-solution residuals", exact_residuals},
      {"nonrelativistic-limit scaling", limit_scaling},
      {"angular identities", angular_identities},
      {"stationary density", stationary_density},
      {"orthogonality", orthogonality},
      {"special-function cross-checks", special_functions},
      {"CLI contract", cli_contract},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %d. %s: %s\n", v.pass ? "PASS" : "FAIL", ++index, name, v.detail.c_str());
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
