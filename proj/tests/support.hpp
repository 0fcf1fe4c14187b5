#ifndef FOURPORT_TESTS_SUPPORT_HPP
#define FOURPORT_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "fourport/fock.hpp"
#include "fourport/scattering.hpp"

namespace fourport::test {

inline std::mt19937_64 rng(uint64_t seed = 42) { return std::mt19937_64(seed); }

inline ScatteringMatrix random_scattering(std::mt19937_64& g) {
  std::normal_distribution<double> gauss;
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = complexd(gauss(g), gauss(g));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(m);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return ScatteringMatrix::from_matrix(q);
}

inline complexd random_alpha(std::mt19937_64& g, double max_mag) {
  std::uniform_real_distribution<double> mag(0.0, max_mag);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
  return std::polar(mag(g), ph(g));
}

/// Independent evaluation of the coherent expansion via lgamma,
/// e^{-|a|^2/2} a^n / sqrt(n!).
inline complexd coherent_amplitude(complexd alpha, int n) {
  if (alpha == complexd(0, 0)) return n == 0 ? 1.0 : 0.0;
  const double lg = -0.5 * std::norm(alpha) + n * std::log(std::abs(alpha)) -
                    0.5 * std::lgamma(n + 1.0);
  return std::polar(std::exp(lg), n * std::arg(alpha));
}

/// Matrix-exponential displacement oracle, independent of the
/// Laguerre closed form: exp(alpha a+ - alpha* a) on the truncated basis.
inline Eigen::MatrixXcd displacement_expm(complexd alpha, Cutoff c) {
  const int d = c.dim();
  Eigen::MatrixXcd adag = Eigen::MatrixXcd::Zero(d, d);
  for (int n = 0; n + 1 < d; ++n) adag(n + 1, n) = std::sqrt(n + 1.0);
  const Eigen::MatrixXcd G = alpha * adag - std::conj(alpha) * adag.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(complexd(0, -1) * G);
  Eigen::VectorXcd ph(d);
  for (int i = 0; i < d; ++i) ph[i] = std::polar(1.0, es.eigenvalues()[i]);
  return es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
}

/// Rotate b by a global phase so that its largest-|a| entry matches a's phase.
inline Eigen::MatrixXcd align_global_phase(const Eigen::MatrixXcd& reference,
                                           const Eigen::MatrixXcd& b) {
  Eigen::Index i = 0, j = 0;
  reference.cwiseAbs().maxCoeff(&i, &j);
  complexd ph = reference(i, j) / b(i, j);
  ph /= std::abs(ph);
  return ph * b;
}

}  // namespace fourport::test

#endif
