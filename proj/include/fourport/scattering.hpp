#ifndef FOURPORT_SCATTERING_HPP
#define FOURPORT_SCATTERING_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fourport/fock.hpp"

namespace fourport {

/// Entries laid out as  (a_out_upper)   (t'  r ) (a_in_upper)
///                      (a_out_lower) = (r'  t ) (a_in_lower)
/// Lossless devices must satisfy the Stokes reciprocity relations:
/// |r'| = |r|, |t| = |t'|, |r|^2 + |t|^2 = 1, r* t' + r' t* = 0.
class ScatteringMatrix {
 public:
  static ScatteringMatrix from_entries(complexd t_prime, complexd r,
                                       complexd r_prime, complexd t);
  static ScatteringMatrix from_matrix(const Eigen::Matrix2cd& m);
  static ScatteringMatrix identity();

  complexd t_prime() const { return m_(0, 0); }
  complexd r() const { return m_(0, 1); }
  complexd r_prime() const { return m_(1, 0); }
  complexd t() const { return m_(1, 1); }
  const Eigen::Matrix2cd& matrix() const { return m_; }

  bool is_unitary(double tol = 1e-10) const;

 private:
  explicit ScatteringMatrix(const Eigen::Matrix2cd& m) : m_(m) {}
  Eigen::Matrix2cd m_;
};

struct PhaseShift {
  double theta;  // radians, any real
};

class ReciprocityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Human-readable list of violated reciprocity relations with magnitudes;
/// empty when the matrix is valid within tol.
std::vector<std::string> reciprocity_violations(const Eigen::Matrix2cd& m,
                                                double tol = 1e-10);

/// Dielectric-layer beam splitter: t = t' = t_mag, r = r' = i sqrt(1 - t_mag^2).
ScatteringMatrix bs_dielectric(double t_mag);

ScatteringMatrix bs_general(complexd t_prime, complexd r, complexd r_prime,
                            complexd t);

/// diag(1, e^{i theta}).
ScatteringMatrix phase_matrix(PhaseShift theta);

/// Product of devices applied in traversal order (first element acts first).
ScatteringMatrix compose(std::span<const ScatteringMatrix> sequence);
ScatteringMatrix compose(std::initializer_list<ScatteringMatrix> sequence);

/// Mach-Zehnder interferometer: bs2 * phase(theta) * bs1.
ScatteringMatrix mzi(const ScatteringMatrix& bs1, PhaseShift theta,
                     const ScatteringMatrix& bs2);

}  // namespace fourport

#endif
