#include "fourport/fock.hpp"

#include <cmath>

namespace fourport {

Cutoff adaptive_cutoff(double alpha_mag) {
  const double a = std::abs(alpha_mag);
  const int n = static_cast<int>(std::ceil(a * a + 6.0 * a + 10.0));
  return Cutoff(std::max(n, 16));
}

SingleModeState::SingleModeState(Cutoff c, Eigen::VectorXcd a)
    : cutoff(c), amp(std::move(a)) {
  if (amp.size() != cutoff.dim())
    throw std::invalid_argument("SingleModeState: amplitude length mismatch");
}

TwoModeState::TwoModeState(Cutoff ca, Cutoff cb, Eigen::MatrixXcd a)
    : cutoff_a(ca), cutoff_b(cb), amp(std::move(a)) {
  if (amp.rows() != cutoff_a.dim() || amp.cols() != cutoff_b.dim())
    throw std::invalid_argument("TwoModeState: amplitude shape mismatch");
}

DensityMatrix::DensityMatrix(Cutoff c, Eigen::MatrixXcd m)
    : cutoff(c), elements(std::move(m)) {
  if (elements.rows() != cutoff.dim() || elements.cols() != cutoff.dim())
    throw std::invalid_argument("DensityMatrix: shape mismatch");
  const double herm = (elements - elements.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian, deviation " +
                                std::to_string(herm));
}

TwoModeDensity::TwoModeDensity(Cutoff ca, Cutoff cb, Eigen::MatrixXcd m)
    : cutoff_a(ca), cutoff_b(cb), elements(std::move(m)) {
  const int d = cutoff_a.dim() * cutoff_b.dim();
  if (elements.rows() != d || elements.cols() != d)
    throw std::invalid_argument("TwoModeDensity: shape mismatch");
}

TwoModeState tensor(const SingleModeState& a, const SingleModeState& b) {
  if (!(a.cutoff == b.cutoff))
    throw std::invalid_argument("tensor: cutoff mismatch");
  return TwoModeState(a.cutoff, b.cutoff, a.amp * b.amp.transpose());
}

DensityMatrix density_from_state(const SingleModeState& psi) {
  return DensityMatrix(psi.cutoff, psi.amp * psi.amp.adjoint());
}

TwoModeDensity density_from_state(const TwoModeState& psi) {
  const Eigen::VectorXcd flat =
      psi.amp.transpose().reshaped();  // I = m * dim_b + n
  return TwoModeDensity(psi.cutoff_a, psi.cutoff_b, flat * flat.adjoint());
}

DensityMatrix partial_trace(const TwoModeDensity& rho2, Mode keep) {
  const int da = rho2.cutoff_a.dim();
  const int db = rho2.cutoff_b.dim();
  if (keep == Mode::b) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(db, db);
    for (int m = 0; m < da; ++m)
      out += rho2.elements.block(m * db, m * db, db, db);
    return DensityMatrix(rho2.cutoff_b, std::move(out));
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da, da);
  for (int m = 0; m < da; ++m)
    for (int mp = 0; mp < da; ++mp)
      for (int n = 0; n < db; ++n)
        out(m, mp) += rho2.elements(m * db + n, mp * db + n);
  return DensityMatrix(rho2.cutoff_a, std::move(out));
}

double purity(const DensityMatrix& rho) {
  return (rho.elements * rho.elements).trace().real();
}

}  // namespace fourport
