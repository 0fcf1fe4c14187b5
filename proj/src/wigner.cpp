#include "fourport/wigner.hpp"

#include <cmath>
#include <numbers>

namespace fourport {

namespace {
constexpr double kInvPi = std::numbers::inv_pi;

void shifted(complexd beta, double q, double p, double& qs, double& ps) {
  qs = q - std::numbers::sqrt2 * beta.real();
  ps = p - std::numbers::sqrt2 * beta.imag();
}
}  // namespace

GridSpec::GridSpec(double qmin, double qmax, double pmin, double pmax, int nq_,
                   int np_)
    : q_min(qmin), q_max(qmax), p_min(pmin), p_max(pmax), nq(nq_), np(np_) {
  if (!(q_min < q_max && p_min < p_max))
    throw std::invalid_argument("GridSpec: empty extent");
  if (nq < 2 || np < 2)
    throw std::invalid_argument("GridSpec: need at least 2 cells per axis");
}

GridSpec GridSpec::default_grid() { return GridSpec(-8, 8, -8, 8, 200, 200); }

WignerField::WignerField(GridSpec g, Eigen::MatrixXd v)
    : grid(g), values(std::move(v)) {
  if (values.rows() != grid.nq || values.cols() != grid.np)
    throw std::invalid_argument("WignerField: shape mismatch");
}

double wigner_point_coherent(complexd beta, double q, double p) {
  double qs, ps;
  shifted(beta, q, p, qs, ps);
  return kInvPi * std::exp(-qs * qs - ps * ps);
}

double wigner_point_displaced_fock1(complexd beta, double q, double p) {
  double qs, ps;
  shifted(beta, q, p, qs, ps);
  const double r2 = qs * qs + ps * ps;
  return -kInvPi * std::exp(-r2) * (1.0 - 2.0 * r2);
}

namespace {
template <typename F>
WignerField sample(const GridSpec& grid, F&& f) {
  Eigen::MatrixXd v(grid.nq, grid.np);
  for (int i = 0; i < grid.nq; ++i)
    for (int j = 0; j < grid.np; ++j) v(i, j) = f(grid.q_at(i), grid.p_at(j));
  return WignerField(grid, std::move(v));
}
}  // namespace

WignerField wigner_coherent(complexd beta, const GridSpec& grid) {
  return sample(grid,
                [&](double q, double p) { return wigner_point_coherent(beta, q, p); });
}

WignerField wigner_displaced_fock1(complexd beta, const GridSpec& grid) {
  return sample(grid, [&](double q, double p) {
    return wigner_point_displaced_fock1(beta, q, p);
  });
}

double wigner_point_mixture(const MixtureOutput& m, double q, double p) {
  return m.weight_coherent * wigner_point_coherent(m.displacement, q, p) +
         m.weight_displaced_fock *
             wigner_point_displaced_fock1(m.displacement, q, p);
}

WignerField wigner_mixture(const MixtureOutput& m, const GridSpec& grid) {
  return sample(grid,
                [&](double q, double p) { return wigner_point_mixture(m, q, p); });
}

WignerField wigner_mixture(const ScatteringMatrix& S, complexd alpha, Port port,
                           const GridSpec& grid) {
  return wigner_mixture(output_mixture(S, alpha, port), grid);
}

double wigner_point_numeric(const DensityMatrix& rho, double q, double p) {
  // W(q,p) = sum_n rho_nn (-1)^n e^{-r^2} L_n(2 r^2) / pi
  //        + sum_{m>n} 2 Re[rho_mn (q-ip)^{m-n} K_{mn}(r^2)],
  // K_{mn} = (-1)^n sqrt(2)^{m-n} sqrt(n!/m!) e^{-r^2} L_n^{(m-n)}(2 r^2) / pi.
  const int dim = rho.cutoff.dim();
  const double r2 = q * q + p * p;
  const double x = 2.0 * r2;
  const double expf = std::exp(-r2) * kInvPi;
  const complexd zbar(q, -p);

  double total = 0.0;
  complexd zpow = 1.0;     // zbar^k
  double sqrt2k = 1.0;     // sqrt(2)^k
  for (int k = 0; k < dim; ++k) {
    // march L_n^{(k)}(x) upward in n, accumulating the diagonal k = m - n
    double lm2 = 0.0, lm1 = 0.0;
    double ratio = 1.0;  // sqrt(n!/(n+k)!)
    for (int n = 0; n + k < dim; ++n) {
      double L;
      if (n == 0)
        L = 1.0;
      else if (n == 1)
        L = 1.0 + k - x;
      else
        L = ((2.0 * n - 1.0 + k - x) * lm1 - (n - 1.0 + k) * lm2) / n;
      lm2 = lm1;
      lm1 = L;
      if (n > 0) ratio *= std::sqrt(double(n) / (n + k));
      else if (k > 0) {
        ratio = 1.0;
        for (int j = 1; j <= k; ++j) ratio /= std::sqrt(double(j));
      }
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      const double kern = sign * sqrt2k * ratio * expf * L;
      if (k == 0)
        total += rho.elements(n, n).real() * kern;
      else
        total += 2.0 * (rho.elements(n + k, n) * zpow).real() * kern;
    }
    zpow *= zbar;
    sqrt2k *= std::numbers::sqrt2;
  }
  return total;
}

WignerField wigner_numeric(const DensityMatrix& rho, const GridSpec& grid) {
  return sample(grid, [&](double q, double p) {
    return wigner_point_numeric(rho, q, p);
  });
}

bool truncation_tail_warning(const DensityMatrix& rho) {
  const int d = rho.cutoff.dim();
  return rho.elements(d - 1, d - 1).real() > 1e-8;
}

}  // namespace fourport
