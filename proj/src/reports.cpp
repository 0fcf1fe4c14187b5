#include "fourport/reports.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace fourport {

namespace {
using json = nlohmann::ordered_json;

bool is_fock1_coherent(const CircuitSpec& spec, complexd& alpha_out) {
  const auto* f = std::get_if<FockInput>(&spec.input0.kind);
  const auto* c = std::get_if<CoherentInput>(&spec.input1.kind);
  if (f && f->n == 1 && c) {
    alpha_out = c->alpha;
    return true;
  }
  return false;
}

std::string rows_to_csv(const std::vector<std::string>& columns,
                        const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (size_t i = 0; i < columns.size(); ++i) {
    if (i) out += ',';
    out += columns[i];
  }
  out += '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string rows_to_json(const std::vector<std::string>& columns,
                         const std::vector<std::vector<double>>& rows) {
  json j;
  j["columns"] = columns;
  json jr = json::array();
  for (const auto& row : rows) jr.push_back(row);
  j["rows"] = jr;
  return j.dump(2) + "\n";
}

std::string emit(const std::vector<std::string>& columns,
                 const std::vector<std::vector<double>>& rows,
                 OutputFormat format) {
  return format == OutputFormat::csv ? rows_to_csv(columns, rows)
                                     : rows_to_json(columns, rows);
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

WignerReport run_wigner(const CircuitSpec& spec, Port port,
                        const GridSpec& grid) {
  const ScatteringMatrix S = build_scattering(spec);
  complexd alpha;
  if (is_fock1_coherent(spec, alpha)) {
    const MixtureOutput m = output_mixture(S, alpha, port);
    return {wigner_mixture(m, grid), m, true};
  }
  const DensityMatrix rho =
      reduced_output(S, spec.input0, spec.input1, port, choose_cutoff(spec));
  return {wigner_numeric(rho, grid), std::nullopt, false};
}

std::string wigner_table(const WignerField& field, bool times_pi,
                         OutputFormat format) {
  const double scale = times_pi ? std::numbers::pi : 1.0;
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(field.grid.nq) * field.grid.np);
  for (int i = 0; i < field.grid.nq; ++i)
    for (int j = 0; j < field.grid.np; ++j)
      rows.push_back({field.grid.q_at(i), field.grid.p_at(j),
                      scale * field.values(i, j)});
  return emit({"q", "p", "w"}, rows, format);
}

std::string wigner_sidecar(const WignerReport& report, bool times_pi) {
  json j;
  j["convention"] = {{"hbar", 1.0},
                     {"omega", 1.0},
                     {"q0", 1.0},
                     {"times_pi", times_pi},
                     {"sample_points", "cell centers, q-major"}};
  j["analytic"] = report.analytic;
  if (report.mixture) {
    j["weight_coherent"] = report.mixture->weight_coherent;
    j["weight_displaced_fock"] = report.mixture->weight_displaced_fock;
    j["displacement_re"] = report.mixture->displacement.real();
    j["displacement_im"] = report.mixture->displacement.imag();
  }
  const auto& g = report.field.grid;
  j["grid"] = {{"q_min", g.q_min}, {"q_max", g.q_max}, {"p_min", g.p_min},
               {"p_max", g.p_max}, {"nq", g.nq},       {"np", g.np}};
  return j.dump(2) + "\n";
}

namespace {

// Replace the amplitude of the coherent input (port 1) and the first phase
// element; used by the sweep drivers.
CircuitSpec with_sweep_point(const CircuitSpec& spec, double alpha_mag,
                             double theta) {
  CircuitSpec s = spec;
  complexd old_alpha(1.0, 0.0);
  if (const auto* c = std::get_if<CoherentInput>(&s.input1.kind))
    old_alpha = c->alpha;
  const complexd phase = std::abs(old_alpha) > 0
                             ? old_alpha / std::abs(old_alpha)
                             : complexd(1.0, 0.0);
  s.input1 = InputSpec::coherent(alpha_mag * phase);
  for (auto& e : s.elements)
    if (e.kind == CircuitElement::Kind::phase) {
      e.theta = theta;
      break;
    }
  return s;
}

}  // namespace

std::vector<StatsRow> run_stats_sweep(const CircuitSpec& spec,
                                      const std::vector<double>& alpha_mags,
                                      const std::vector<double>& thetas) {
  std::vector<StatsRow> rows;
  for (double a : alpha_mags)
    for (double th : thetas) {
      const CircuitSpec s = with_sweep_point(spec, a, th);
      const ScatteringMatrix S = build_scattering(s);
      const auto* c = std::get_if<CoherentInput>(&s.input1.kind);
      rows.push_back({th, a, mean_photon_analytic(S, c->alpha, Port::upper),
                      mean_photon_analytic(S, c->alpha, Port::lower)});
    }
  return rows;
}

std::vector<StatsRow> run_stats_sweep_numeric(
    const CircuitSpec& spec, const std::vector<double>& alpha_mags,
    const std::vector<double>& thetas) {
  std::vector<StatsRow> rows;
  for (double a : alpha_mags)
    for (double th : thetas) {
      const CircuitSpec s = with_sweep_point(spec, a, th);
      const ScatteringMatrix S = build_scattering(s);
      const Cutoff cut = choose_cutoff(s);
      rows.push_back(
          {th, a,
           photon_stats(reduced_output(S, s.input0, s.input1, Port::upper, cut)),
           photon_stats(reduced_output(S, s.input0, s.input1, Port::lower, cut))});
    }
  return rows;
}

std::string stats_table(const std::vector<StatsRow>& analytic,
                        const std::vector<StatsRow>* numeric,
                        OutputFormat format) {
  std::vector<std::string> columns = {"theta",      "alpha_mag", "mean_upper",
                                      "mean_lower", "msd_upper", "msd_lower"};
  if (numeric) {
    if (numeric->size() != analytic.size())
      throw std::invalid_argument("stats_table: row count mismatch");
    for (const char* c : {"mean_upper_numeric", "mean_lower_numeric",
                          "msd_upper_numeric", "msd_lower_numeric"})
      columns.push_back(c);
  }
  std::vector<std::vector<double>> rows;
  for (size_t i = 0; i < analytic.size(); ++i) {
    const auto& r = analytic[i];
    std::vector<double> row = {r.theta,      r.alpha_mag, r.upper.mean,
                               r.lower.mean, r.upper.msd, r.lower.msd};
    if (numeric) {
      const auto& n = (*numeric)[i];
      row.insert(row.end(),
                 {n.upper.mean, n.lower.mean, n.upper.msd, n.lower.msd});
    }
    rows.push_back(std::move(row));
  }
  return emit(columns, rows, format);
}

std::string hom_table(const std::vector<double>& thetas, OutputFormat format) {
  std::vector<std::vector<double>> rows;
  for (double th : thetas) {
    const HomOutput h = hom_mzi_output(th);
    const double mean_upper = h.w_coincidence + 2.0 * h.w_20;
    const double mean_lower = h.w_coincidence + 2.0 * h.w_02;
    rows.push_back({th, h.w_coincidence, h.w_20, h.w_02, mean_upper, mean_lower});
  }
  return emit({"theta", "w_coincidence", "w_20", "w_02", "mean_upper",
               "mean_lower"},
              rows, format);
}

}  // namespace fourport
