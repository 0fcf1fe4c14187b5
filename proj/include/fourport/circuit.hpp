#ifndef FOURPORT_CIRCUIT_HPP
#define FOURPORT_CIRCUIT_HPP

#include <optional>
#include <string>
#include <vector>

#include "fourport/scattering.hpp"
#include "fourport/simulate.hpp"

namespace fourport {

/// One optical element in traversal order.
struct CircuitElement {
  enum class Kind { bs_dielectric, bs_general, phase };
  Kind kind;
  double t_mag = 0.0;                      // bs_dielectric
  complexd t_prime, r, r_prime, t;         // bs_general
  double theta = 0.0;                      // phase
};

/// Serialized experiment description: element list, the two input states
/// (input0 enters the upper port, input1 the lower), optional cutoff override.
struct CircuitSpec {
  std::vector<CircuitElement> elements;
  InputSpec input0 = InputSpec::fock(1);
  InputSpec input1 = InputSpec::vacuum();
  std::optional<int> cutoff;
};

class CircuitParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// JSON text <-> CircuitSpec. serialize_circuit is canonical: parsing its
/// output and serializing again is byte-identical.
CircuitSpec parse_circuit(const std::string& json_text);
std::string serialize_circuit(const CircuitSpec& spec);

/// Named setups: "fig2a", "fig2b", "fig4", "hom", "vacuum".
CircuitSpec preset(const std::string& name);
std::vector<std::string> preset_names();

/// Composed scattering matrix of the element list (validated).
ScatteringMatrix build_scattering(const CircuitSpec& spec);

/// Cutoff for running the circuit: the override if present, otherwise the
/// adaptive rule applied to the largest coherent amplitude among the inputs.
Cutoff choose_cutoff(const CircuitSpec& spec);

}  // namespace fourport

#endif
