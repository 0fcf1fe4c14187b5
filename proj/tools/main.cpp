#include <chrono>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fourport/circuit.hpp"
#include "fourport/reports.hpp"
#include "fourport/verify.hpp"

namespace {

using namespace fourport;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigInvalid = 2;
constexpr int kExitCutoff = 3;

struct CommonOpts {
  std::string out;
  std::string format = "csv";
  std::optional<int> cutoff;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

CircuitSpec load_circuit(const std::string& preset_name,
                         const std::string& circuit_file,
                         const std::optional<int>& cutoff) {
  CircuitSpec spec;
  if (!circuit_file.empty()) {
    std::ifstream f(circuit_file);
    if (!f) throw CircuitParseError("cannot read circuit file: " + circuit_file);
    std::stringstream ss;
    ss << f.rdbuf();
    spec = parse_circuit(ss.str());
  } else {
    spec = preset(preset_name);
  }
  if (cutoff) spec.cutoff = *cutoff;
  return spec;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> v;
  if (steps < 2) {
    v.push_back(lo);
    return v;
  }
  for (int i = 0; i < steps; ++i)
    v.push_back(lo + (hi - lo) * i / (steps - 1));
  return v;
}

OutputFormat parse_format(const std::string& f) {
  return f == "json" ? OutputFormat::json : OutputFormat::csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum interference of a single photon and a coherent state "
               "at passive lossless optical four-ports"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--out", common.out, "Output path ('-' for stdout)")
      ->capture_default_str();
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  int cutoff_flag = -1;
  app.add_option("--cutoff", cutoff_flag, "Fock cutoff override (n_max)");

  // wigner
  auto* wig = app.add_subcommand("wigner", "Wigner surface at one output port");
  std::string preset_name = "fig2a", circuit_file, port_name = "lower";
  wig->add_option("--preset", preset_name, "Named setup")
      ->check(CLI::IsMember(preset_names()))
      ->capture_default_str();
  wig->add_option("--circuit", circuit_file, "Circuit JSON file");
  wig->add_option("--port", port_name, "Output port")
      ->check(CLI::IsMember({"upper", "lower"}))
      ->capture_default_str();
  double qmin = -8, qmax = 8, pmin = -8, pmax = 8;
  int nq = 200, np = 200;
  bool times_pi = false;
  wig->add_option("--qmin", qmin)->capture_default_str();
  wig->add_option("--qmax", qmax)->capture_default_str();
  wig->add_option("--pmin", pmin)->capture_default_str();
  wig->add_option("--pmax", pmax)->capture_default_str();
  wig->add_option("--nq", nq, "q cells")->capture_default_str();
  wig->add_option("--np", np, "p cells")->capture_default_str();
  wig->add_flag("--times-pi", times_pi, "Emit pi * W instead of W");

  // stats
  auto* stats = app.add_subcommand(
      "stats", "Photon mean / mean-square-deviation sweep over theta");
  std::string stats_preset = "balanced-mzi", stats_circuit;
  std::vector<double> alpha_mags = {0.0, 1.0, 2.0};
  double theta_min = 0.0, theta_max = 2.0 * std::numbers::pi;
  int theta_steps = 65;
  bool with_numeric = false;
  stats->add_option("--preset", stats_preset)
      ->check(CLI::IsMember(preset_names()))
      ->capture_default_str();
  stats->add_option("--circuit", stats_circuit, "Circuit JSON file");
  stats->add_option("--alpha", alpha_mags, "Coherent amplitude magnitudes")
      ->capture_default_str();
  stats->add_option("--theta-min", theta_min)->capture_default_str();
  stats->add_option("--theta-max", theta_max)->capture_default_str();
  stats->add_option("--theta-steps", theta_steps)->capture_default_str();
  stats->add_flag("--numeric", with_numeric,
                  "Append full-simulation columns");

  // hom
  auto* hom = app.add_subcommand(
      "hom", "Two-photon interference probabilities through a balanced MZI");
  double hom_min = 0.0, hom_max = 2.0 * std::numbers::pi;
  int hom_steps = 65;
  hom->add_option("--theta-min", hom_min)->capture_default_str();
  hom->add_option("--theta-max", hom_max)->capture_default_str();
  hom->add_option("--theta-steps", hom_steps)->capture_default_str();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Oracle-vs-simulation verification report");
  double tol_override = -1.0;
  std::string only;
  verify->add_option("--tolerance", tol_override,
                     "Override every check tolerance");
  verify->add_option("--only", only, "Run only checks whose name contains this");

  CLI11_PARSE(app, argc, argv);
  if (cutoff_flag > 0) common.cutoff = cutoff_flag;

  try {
    if (wig->parsed()) {
      const CircuitSpec spec = load_circuit(preset_name, circuit_file,
                                            common.cutoff);
      const Port port = port_name == "upper" ? Port::upper : Port::lower;
      const GridSpec grid(qmin, qmax, pmin, pmax, nq, np);
      const WignerReport report = run_wigner(spec, port, grid);
      write_output(common.out,
                   wigner_table(report.field, times_pi, parse_format(common.format)));
      if (!common.out.empty() && common.out != "-")
        write_output(common.out + ".meta.json",
                     wigner_sidecar(report, times_pi));
      return kExitOk;
    }
    if (stats->parsed()) {
      const CircuitSpec spec = load_circuit(stats_preset, stats_circuit,
                                            common.cutoff);
      const auto thetas = linspace(theta_min, theta_max, theta_steps);
      const auto rows = run_stats_sweep(spec, alpha_mags, thetas);
      std::optional<std::vector<StatsRow>> numeric;
      if (with_numeric)
        numeric = run_stats_sweep_numeric(spec, alpha_mags, thetas);
      write_output(common.out,
                   stats_table(rows, numeric ? &*numeric : nullptr,
                               parse_format(common.format)));
      return kExitOk;
    }
    if (hom->parsed()) {
      write_output(common.out, hom_table(linspace(hom_min, hom_max, hom_steps),
                                         parse_format(common.format)));
      return kExitOk;
    }
    if (verify->parsed()) {
      std::optional<double> tol;
      if (tol_override > 0.0) tol = tol_override;
      const auto results = run_verification(tol, only);
      std::cout << verification_report_json(results);
      for (const auto& r : results)
        if (!r.pass) return kExitVerifyFailed;
      return kExitOk;
    }
  } catch (const ReciprocityError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitConfigInvalid;
  } catch (const CircuitParseError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitConfigInvalid;
  } catch (const CutoffError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitCutoff;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitConfigInvalid;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitConfigInvalid;
  }
  return kExitOk;
}
