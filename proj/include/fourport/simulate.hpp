#ifndef FOURPORT_SIMULATE_HPP
#define FOURPORT_SIMULATE_HPP

#include <variant>
#include <vector>

#include "fourport/fock.hpp"
#include "fourport/scattering.hpp"

namespace fourport {

/// Output port selector; upper is the first scattering-matrix row
/// (port 2 of a beam splitter, port 4 of an MZI), lower the second
/// (port 3 / port 5).
enum class Port { upper, lower };

struct FockInput {
  int n;
};
struct CoherentInput {
  complexd alpha;
};
struct GeneralInput {
  Eigen::VectorXcd coeffs;  // must be normalized within 1e-12
};

struct InputSpec {
  std::variant<FockInput, CoherentInput, GeneralInput> kind;

  static InputSpec fock(int n) { return {FockInput{n}}; }
  static InputSpec coherent(complexd alpha) { return {CoherentInput{alpha}}; }
  static InputSpec vacuum() { return {FockInput{0}}; }
  static InputSpec general(Eigen::VectorXcd c);
};

struct PhotonStats {
  double mean;  // photons
  double msd;   // photons^2, <(dn)^2>
};

class CutoffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SingleModeState prepare(const InputSpec& spec, Cutoff cutoff);

/// Fock matrix elements <m|D(alpha)|n> on the truncated basis, evaluated
/// through the associated-Laguerre closed form with log-space prefactors.
Eigen::MatrixXcd displacement_operator(complexd alpha, Cutoff cutoff);

/// Two-mode Schroedinger-picture unitary of a passive four-port, as a dense
/// dim^2 x dim^2 matrix with composite index I = m * dim + n.
/// Block diagonal in total photon number; maps |0,0> to |0,0>.
Eigen::MatrixXcd lift(const ScatteringMatrix& S, Cutoff cutoff);

/// lift(S) applied to a two-mode state without forming the dense matrix.
TwoModeState apply_scattering(const ScatteringMatrix& S,
                              const TwoModeState& psi);

TwoModeState simulate_fourport(const ScatteringMatrix& S, const InputSpec& in0,
                               const InputSpec& in1, Cutoff cutoff);

DensityMatrix reduced_output(const ScatteringMatrix& S, const InputSpec& in0,
                             const InputSpec& in1, Port port, Cutoff cutoff);

PhotonStats photon_stats(const DensityMatrix& rho);

}  // namespace fourport

#endif
