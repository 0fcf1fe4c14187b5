#ifndef FOURPORT_ORACLE_HPP
#define FOURPORT_ORACLE_HPP

#include <utility>

#include "fourport/fock.hpp"
#include "fourport/scattering.hpp"
#include "fourport/simulate.hpp"

namespace fourport {

/// Closed-form reduced output of |1> x |alpha> at one port: a convex
/// combination of the coherent state |displacement> and the displaced
/// Fock state D(displacement)|1>.
struct MixtureOutput {
  double weight_coherent;
  double weight_displaced_fock;
  complexd displacement;
};

MixtureOutput output_mixture(const ScatteringMatrix& S, complexd alpha,
                             Port port);

DensityMatrix mixture_to_density(const MixtureOutput& m, Cutoff cutoff);

PhotonStats mean_photon_analytic(const ScatteringMatrix& S, complexd alpha,
                                 Port port);

/// Balanced-dielectric MZI closed forms as functions of theta and |alpha|.
/// Returns (upper, lower).
std::pair<PhotonStats, PhotonStats> balanced_mzi_stats(double theta,
                                                       double alpha_mag);

/// |1,1> through a balanced-dielectric MZI: output state and outcome
/// probabilities.
struct HomOutput {
  TwoModeState state;
  double w_coincidence;  // one photon at each port
  double w_20;           // both photons at the upper port
  double w_02;           // both photons at the lower port
};

HomOutput hom_mzi_output(double theta);

}  // namespace fourport

#endif
