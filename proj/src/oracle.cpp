#include "fourport/oracle.hpp"

#include <cmath>

namespace fourport {

MixtureOutput output_mixture(const ScatteringMatrix& S, complexd alpha,
                             Port port) {
  const double t2 = std::norm(S.t());
  const double r2 = std::norm(S.r());
  // Stokes relations make |t'|^2, |r'|^2 interchangeable with |t|^2, |r|^2;
  // assert the equality instead of picking a convention.
  if (std::abs(t2 - std::norm(S.t_prime())) > 1e-9 ||
      std::abs(r2 - std::norm(S.r_prime())) > 1e-9)
    throw std::invalid_argument("output_mixture: reciprocity-violating matrix");
  if (port == Port::lower)
    return {t2, r2, S.t() * alpha};
  return {r2, t2, S.r() * alpha};
}

DensityMatrix mixture_to_density(const MixtureOutput& m, Cutoff cutoff) {
  const Eigen::MatrixXcd D = displacement_operator(m.displacement, cutoff);
  const int dim = cutoff.dim();
  const Eigen::VectorXcd coh = D.col(0);  // D|0>
  const Eigen::VectorXcd dfock = D.col(1);
  const double tail = std::norm(coh[dim - 1]) + std::norm(dfock[dim - 1]);
  if (tail > kTruncTol)
    throw CutoffError("mixture_to_density: cutoff too small for displacement");
  Eigen::MatrixXcd rho = m.weight_coherent * (coh * coh.adjoint()) +
                         m.weight_displaced_fock * (dfock * dfock.adjoint());
  return DensityMatrix(cutoff, std::move(rho));
}

PhotonStats mean_photon_analytic(const ScatteringMatrix& S, complexd alpha,
                                 Port port) {
  const double t2 = std::norm(S.t());
  const double r2 = std::norm(S.r());
  const double a2 = std::norm(alpha);
  if (port == Port::lower) {
    const double mean = r2 + t2 * a2;
    const double msd = t2 * a2 * (1.0 + 2.0 * r2) + r2 * t2;
    return {mean, msd};
  }
  const double mean = t2 + r2 * a2;
  const double msd = r2 * a2 * (1.0 + 2.0 * t2) + r2 * t2;
  return {mean, msd};
}

std::pair<PhotonStats, PhotonStats> balanced_mzi_stats(double theta,
                                                       double alpha_mag) {
  const double s2 = std::sin(theta / 2) * std::sin(theta / 2);  // |t_M|^2
  const double c2 = std::cos(theta / 2) * std::cos(theta / 2);  // |r_M|^2
  const double sin2 = std::sin(theta) * std::sin(theta);
  const double a2 = alpha_mag * alpha_mag;
  PhotonStats upper{s2 + a2 * c2, 0.25 * sin2 + a2 * (c2 + 0.5 * sin2)};
  PhotonStats lower{c2 + a2 * s2, 0.25 * sin2 + a2 * (s2 + 0.5 * sin2)};
  return {upper, lower};
}

HomOutput hom_mzi_output(double theta) {
  const complexd e2 = std::polar(1.0, 2.0 * theta);
  const double inv2s2 = 1.0 / (2.0 * std::sqrt(2.0));
  const complexd i(0.0, 1.0);
  // The |2,0>/|0,2> components carry a relative phase i with respect to
  // |1,1> under the dielectric splitter convention (r purely imaginary);
  // the global phase is fixed so theta = 0 gives +|1,1>.
  Eigen::MatrixXcd amp = Eigen::MatrixXcd::Zero(3, 3);
  amp(0, 2) = i * (1.0 - e2) * inv2s2;
  amp(2, 0) = -i * (1.0 - e2) * inv2s2;
  amp(1, 1) = (1.0 + e2) * 0.5;
  TwoModeState state(Cutoff(2), Cutoff(2), std::move(amp));
  return {state, std::norm(state.amp(1, 1)), std::norm(state.amp(2, 0)),
          std::norm(state.amp(0, 2))};
}

}  // namespace fourport
