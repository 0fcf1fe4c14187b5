#ifndef FOURPORT_REPORTS_HPP
#define FOURPORT_REPORTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fourport/circuit.hpp"
#include "fourport/wigner.hpp"

namespace fourport {

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

enum class OutputFormat { csv, json };

struct WignerReport {
  WignerField field;
  std::optional<MixtureOutput> mixture;  // present on the analytic path
  bool analytic;  // closed-form mixture vs numeric kernel transform
};

/// Wigner surface for a circuit. Uses the analytic mixture when the inputs
/// are fock(1) and coherent, the numeric kernel engine otherwise.
WignerReport run_wigner(const CircuitSpec& spec, Port port,
                        const GridSpec& grid);

std::string wigner_table(const WignerField& field, bool times_pi,
                         OutputFormat format);
/// JSON sidecar: convention, weights, displacement.
std::string wigner_sidecar(const WignerReport& report, bool times_pi);

struct StatsRow {
  double theta;
  double alpha_mag;
  PhotonStats upper, lower;
};

std::vector<StatsRow> run_stats_sweep(const CircuitSpec& spec,
                                      const std::vector<double>& alpha_mags,
                                      const std::vector<double>& thetas);
/// Numeric (full-simulation) counterpart of run_stats_sweep.
std::vector<StatsRow> run_stats_sweep_numeric(
    const CircuitSpec& spec, const std::vector<double>& alpha_mags,
    const std::vector<double>& thetas);

std::string stats_table(const std::vector<StatsRow>& analytic,
                        const std::vector<StatsRow>* numeric,
                        OutputFormat format);

std::string hom_table(const std::vector<double>& thetas, OutputFormat format);

}  // namespace fourport

#endif
