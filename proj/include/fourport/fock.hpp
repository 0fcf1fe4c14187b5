#ifndef FOURPORT_FOCK_HPP
#define FOURPORT_FOCK_HPP

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>

namespace fourport {

using complexd = std::complex<double>;

// Tolerances shared across the library.
inline constexpr double kTruncTol = 1e-8;
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdTol = 1e-8;

/// Highest Fock occupation retained; basis dimension is n_max + 1.
struct Cutoff {
  int n_max;

  explicit Cutoff(int n) : n_max(n) {
    if (n < 1) throw std::invalid_argument("Cutoff: n_max must be >= 1");
  }
  int dim() const { return n_max + 1; }

  friend bool operator==(const Cutoff&, const Cutoff&) = default;
};

/// Cutoff large enough to keep the coherent-state tail mass below ~1e-10
/// for |alpha| <= 3: ceil(|alpha|^2 + 6|alpha| + 10), at least 16.
Cutoff adaptive_cutoff(double alpha_mag);

/// Amplitudes over the truncated Fock basis |0>..|n_max> of one mode.
struct SingleModeState {
  Cutoff cutoff;
  Eigen::VectorXcd amp;

  SingleModeState(Cutoff c, Eigen::VectorXcd a);
  double norm2() const { return amp.squaredNorm(); }
};

/// Amplitudes amp(m, n) of |m>_A |n>_B on the truncated two-mode space.
struct TwoModeState {
  Cutoff cutoff_a;
  Cutoff cutoff_b;
  Eigen::MatrixXcd amp;

  TwoModeState(Cutoff ca, Cutoff cb, Eigen::MatrixXcd a);
  double norm2() const { return amp.squaredNorm(); }
};

/// Single-mode density matrix rho_{mn} on the truncated Fock basis.
struct DensityMatrix {
  Cutoff cutoff;
  Eigen::MatrixXcd elements;

  DensityMatrix(Cutoff c, Eigen::MatrixXcd m);
  double trace_real() const { return elements.trace().real(); }
};

/// Two-mode density matrix; composite index I = m * dim_b + n for |m>_A |n>_B
/// (mode A major, row-major).
struct TwoModeDensity {
  Cutoff cutoff_a;
  Cutoff cutoff_b;
  Eigen::MatrixXcd elements;

  TwoModeDensity(Cutoff ca, Cutoff cb, Eigen::MatrixXcd m);
  double trace_real() const { return elements.trace().real(); }
};

enum class Mode { a, b };

TwoModeState tensor(const SingleModeState& a, const SingleModeState& b);

DensityMatrix density_from_state(const SingleModeState& psi);
TwoModeDensity density_from_state(const TwoModeState& psi);

/// Reduced density matrix of the kept mode.
DensityMatrix partial_trace(const TwoModeDensity& rho2, Mode keep);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

}  // namespace fourport

#endif
