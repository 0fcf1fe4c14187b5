#ifndef FOURPORT_VERIFY_HPP
#define FOURPORT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

namespace fourport {

struct CheckResult {
  std::string name;
  double max_error;
  double tolerance;
  bool pass;
};

/// Cross-checks the closed-form oracle against the full numerical simulation
/// and the Wigner engines. Deterministic (fixed seed). tolerance_override
/// replaces every per-check tolerance; only_filter keeps checks whose name
/// contains the filter string.
std::vector<CheckResult> run_verification(
    std::optional<double> tolerance_override = std::nullopt,
    const std::string& only_filter = "");

std::string verification_report_json(const std::vector<CheckResult>& results);

}  // namespace fourport

#endif
