#include "fourport/scattering.hpp"

#include <cmath>
#include <sstream>

namespace fourport {

namespace {

std::string fmt_cd(complexd z) {
  std::ostringstream os;
  os << "(" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)";
  return os.str();
}

}  // namespace

std::vector<std::string> reciprocity_violations(const Eigen::Matrix2cd& m,
                                                double tol) {
  const complexd tp = m(0, 0), r = m(0, 1), rp = m(1, 0), t = m(1, 1);
  std::vector<std::string> bad;
  auto report = [&](const char* what, double err) {
    if (err > tol) {
      std::ostringstream os;
      os << what << " violated by " << err;
      bad.push_back(os.str());
    }
  };
  report("|r'| = |r|", std::abs(std::abs(rp) - std::abs(r)));
  report("|t| = |t'|", std::abs(std::abs(t) - std::abs(tp)));
  report("|r|^2 + |t|^2 = 1", std::abs(std::norm(r) + std::norm(t) - 1.0));
  report("r* t' + r' t* = 0", std::abs(std::conj(r) * tp + rp * std::conj(t)));
  return bad;
}

ScatteringMatrix ScatteringMatrix::from_matrix(const Eigen::Matrix2cd& m) {
  auto bad = reciprocity_violations(m);
  if (!bad.empty()) {
    std::ostringstream os;
    os << "scattering matrix (t'=" << fmt_cd(m(0, 0)) << ", r=" << fmt_cd(m(0, 1))
       << ", r'=" << fmt_cd(m(1, 0)) << ", t=" << fmt_cd(m(1, 1))
       << ") fails reciprocity: ";
    for (size_t i = 0; i < bad.size(); ++i) os << (i ? "; " : "") << bad[i];
    throw ReciprocityError(os.str());
  }
  return ScatteringMatrix(m);
}

ScatteringMatrix ScatteringMatrix::from_entries(complexd t_prime, complexd r,
                                                complexd r_prime, complexd t) {
  Eigen::Matrix2cd m;
  m << t_prime, r, r_prime, t;
  return from_matrix(m);
}

ScatteringMatrix ScatteringMatrix::identity() {
  return ScatteringMatrix(Eigen::Matrix2cd::Identity());
}

bool ScatteringMatrix::is_unitary(double tol) const {
  return (m_.adjoint() * m_ - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <=
         tol;
}

ScatteringMatrix bs_dielectric(double t_mag) {
  if (!(t_mag >= 0.0 && t_mag <= 1.0))
    throw std::invalid_argument("bs_dielectric: t_mag must lie in [0,1]");
  const double r_mag = std::sqrt(1.0 - t_mag * t_mag);
  Eigen::Matrix2cd m;
  m << complexd(t_mag, 0), complexd(0, r_mag), complexd(0, r_mag),
      complexd(t_mag, 0);
  return ScatteringMatrix::from_matrix(m);
}

ScatteringMatrix bs_general(complexd t_prime, complexd r, complexd r_prime,
                            complexd t) {
  return ScatteringMatrix::from_entries(t_prime, r, r_prime, t);
}

ScatteringMatrix phase_matrix(PhaseShift theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
  m(1, 1) = std::polar(1.0, theta.theta);
  return ScatteringMatrix::from_matrix(m);
}

ScatteringMatrix compose(std::span<const ScatteringMatrix> sequence) {
  if (sequence.empty()) throw std::invalid_argument("compose: empty sequence");
  Eigen::Matrix2cd acc = Eigen::Matrix2cd::Identity();
  for (const auto& s : sequence) acc = s.matrix() * acc;  // first acts first
  return ScatteringMatrix::from_matrix(acc);
}

ScatteringMatrix compose(std::initializer_list<ScatteringMatrix> sequence) {
  return compose(std::span<const ScatteringMatrix>(sequence.begin(),
                                                   sequence.size()));
}

ScatteringMatrix mzi(const ScatteringMatrix& bs1, PhaseShift theta,
                     const ScatteringMatrix& bs2) {
  // The internal paths cross, so the second splitter is traversed with its
  // ports exchanged: both rows and columns of its matrix swap.
  Eigen::Matrix2cd swapped = bs2.matrix();
  swapped.row(0).swap(swapped.row(1));
  swapped.col(0).swap(swapped.col(1));
  return compose({bs1, phase_matrix(theta),
                  ScatteringMatrix::from_matrix(swapped)});
}

}  // namespace fourport
