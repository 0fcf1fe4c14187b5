#ifndef FOURPORT_WIGNER_HPP
#define FOURPORT_WIGNER_HPP

#include "fourport/fock.hpp"
#include "fourport/oracle.hpp"
#include "fourport/simulate.hpp"

namespace fourport {

// Phase-space conventions: hbar = omega = 1, so q0 = 1 and the displacement
// D(beta) shifts the quadratures by (sqrt(2) Re beta, sqrt(2) Im beta).

/// Rectangular phase-space grid; sample points are cell centers.
struct GridSpec {
  double q_min, q_max;
  double p_min, p_max;
  int nq, np;

  GridSpec(double qmin, double qmax, double pmin, double pmax, int nq_,
           int np_);

  double dq() const { return (q_max - q_min) / nq; }
  double dp() const { return (p_max - p_min) / np; }
  double q_at(int i) const { return q_min + (i + 0.5) * dq(); }
  double p_at(int j) const { return p_min + (j + 0.5) * dp(); }

  /// [-8, 8]^2 with 200 cells per axis; cell centers land on multiples
  /// of 0.04, so integer (q,p) coordinates are exact sample points.
  static GridSpec default_grid();

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Wigner samples values(iq, ip) on a grid (q-major, row-major).
struct WignerField {
  GridSpec grid;
  Eigen::MatrixXd values;

  WignerField(GridSpec g, Eigen::MatrixXd v);

  /// Riemann sum of W dq dp over the grid.
  double integral() const { return values.sum() * grid.dq() * grid.dp(); }
};

// Exact point evaluators.
double wigner_point_coherent(complexd beta, double q, double p);
double wigner_point_displaced_fock1(complexd beta, double q, double p);

WignerField wigner_coherent(complexd beta, const GridSpec& grid);
WignerField wigner_displaced_fock1(complexd beta, const GridSpec& grid);

WignerField wigner_mixture(const MixtureOutput& m, const GridSpec& grid);
WignerField wigner_mixture(const ScatteringMatrix& S, complexd alpha, Port port,
                           const GridSpec& grid);
double wigner_point_mixture(const MixtureOutput& m, double q, double p);

/// Wigner transform of an arbitrary truncated density matrix via Fock-basis
/// Laguerre kernels.
WignerField wigner_numeric(const DensityMatrix& rho, const GridSpec& grid);
double wigner_point_numeric(const DensityMatrix& rho, double q, double p);

/// True when the top Fock population of rho suggests the cutoff clips the
/// state (rho_{n_max,n_max} > 1e-8); wigner_numeric results are then suspect.
bool truncation_tail_warning(const DensityMatrix& rho);

}  // namespace fourport

#endif
