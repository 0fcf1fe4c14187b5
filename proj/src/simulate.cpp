#include "fourport/simulate.hpp"

#include <cmath>

namespace fourport {

InputSpec InputSpec::general(Eigen::VectorXcd c) {
  const double n2 = c.squaredNorm();
  if (std::abs(n2 - 1.0) > 1e-12)
    throw std::invalid_argument(
        "InputSpec::general: coefficients must be normalized (|psi|^2 = " +
        std::to_string(n2) + ")");
  return {GeneralInput{std::move(c)}};
}

SingleModeState prepare(const InputSpec& spec, Cutoff cutoff) {
  const int dim = cutoff.dim();
  Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(dim);
  if (const auto* f = std::get_if<FockInput>(&spec.kind)) {
    if (f->n < 0 || f->n > cutoff.n_max)
      throw CutoffError("prepare: Fock occupation " + std::to_string(f->n) +
                        " exceeds cutoff " + std::to_string(cutoff.n_max));
    amp[f->n] = 1.0;
  } else if (const auto* c = std::get_if<CoherentInput>(&spec.kind)) {
    // c_n = e^{-|a|^2/2} a^n / sqrt(n!), built by the stable ratio recurrence.
    amp[0] = std::exp(-0.5 * std::norm(c->alpha));
    for (int n = 1; n < dim; ++n) amp[n] = amp[n - 1] * c->alpha / std::sqrt(n);
    const double tail = 1.0 - amp.squaredNorm();
    if (tail > kTruncTol)
      throw CutoffError("prepare: coherent tail mass " + std::to_string(tail) +
                        " exceeds trunc_tol at n_max " +
                        std::to_string(cutoff.n_max));
  } else {
    const auto& g = std::get<GeneralInput>(spec.kind);
    if (g.coeffs.size() > dim)
      throw CutoffError("prepare: general state support exceeds cutoff");
    amp.head(g.coeffs.size()) = g.coeffs;
  }
  return SingleModeState(cutoff, std::move(amp));
}

Eigen::MatrixXcd displacement_operator(complexd alpha, Cutoff cutoff) {
  const int dim = cutoff.dim();
  if (alpha == complexd(0.0, 0.0)) return Eigen::MatrixXcd::Identity(dim, dim);

  const double x = std::norm(alpha);      // |alpha|^2
  const double la = std::log(std::abs(alpha));
  const complexd phase = alpha / std::abs(alpha);

  Eigen::MatrixXcd D(dim, dim);
  for (int n = 0; n < dim; ++n) {
    complexd ph_up = 1.0;   // phase^k
    complexd ph_dn = 1.0;   // (-conj(phase))^k
    for (int m = n; m < dim; ++m) {
      const int k = m - n;
      // L_n^{(k)}(x) by the three-term recurrence.
      double lm2 = 1.0;                 // L_0
      double lm1 = 1.0 + k - x;         // L_1
      double L = (n == 0) ? lm2 : lm1;
      for (int j = 2; j <= n; ++j) {
        L = ((2.0 * j - 1.0 + k - x) * lm1 - (j - 1.0 + k) * lm2) / j;
        lm2 = lm1;
        lm1 = L;
      }
      // signed magnitude e^{-x/2} |alpha|^k sqrt(n!/m!) L, in log space
      double mag = 0.0;
      if (L != 0.0) {
        const double lg = -0.5 * x + k * la +
                          0.5 * (std::lgamma(n + 1.0) - std::lgamma(m + 1.0)) +
                          std::log(std::abs(L));
        mag = std::copysign(std::exp(lg), L);
      }
      D(m, n) = ph_up * mag;
      D(n, m) = ph_dn * mag;
      ph_up *= phase;
      ph_dn *= -std::conj(phase);
    }
  }
  return D;
}

namespace {

// Hermitian generator H with S = exp(iH), from the eigendecomposition of S.
Eigen::Matrix2cd hermitian_generator(const ScatteringMatrix& S) {
  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> es(S.matrix());
  const auto& V = es.eigenvectors();
  Eigen::Vector2cd largs;
  for (int i = 0; i < 2; ++i) largs[i] = std::arg(es.eigenvalues()[i]);
  Eigen::Matrix2cd H = V * largs.asDiagonal() * V.inverse();
  return 0.5 * (H + H.adjoint());  // symmetrize away eigensolver noise
}

// Unitary block for total photon number N restricted to occupations
// k in [k_lo, k_hi] of mode A (state |k, N-k>).
Eigen::MatrixXcd number_block(const Eigen::Matrix2cd& H, int N, int k_lo,
                              int k_hi) {
  const int sz = k_hi - k_lo + 1;
  Eigen::MatrixXcd Hb = Eigen::MatrixXcd::Zero(sz, sz);
  for (int k = k_lo; k <= k_hi; ++k) {
    const int i = k - k_lo;
    Hb(i, i) = H(0, 0) * double(k) + H(1, 1) * double(N - k);
    if (k + 1 <= k_hi)
      Hb(i + 1, i) = H(0, 1) * std::sqrt(double(k + 1) * double(N - k));
    if (k - 1 >= k_lo)
      Hb(i - 1, i) = H(1, 0) * std::sqrt(double(k) * double(N - k + 1));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Hb);
  const auto& V = es.eigenvectors();
  Eigen::VectorXcd ph(sz);
  for (int i = 0; i < sz; ++i) ph[i] = std::polar(1.0, es.eigenvalues()[i]);
  return V * ph.asDiagonal() * V.adjoint();
}

}  // namespace

TwoModeState apply_scattering(const ScatteringMatrix& S,
                              const TwoModeState& psi) {
  const int da = psi.cutoff_a.dim();
  const int db = psi.cutoff_b.dim();
  const Eigen::Matrix2cd H = hermitian_generator(S);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(da, db);
  for (int N = 0; N <= (da - 1) + (db - 1); ++N) {
    const int k_lo = std::max(0, N - (db - 1));
    const int k_hi = std::min(da - 1, N);
    const int sz = k_hi - k_lo + 1;
    Eigen::VectorXcd v(sz);
    for (int k = k_lo; k <= k_hi; ++k) v[k - k_lo] = psi.amp(k, N - k);
    if (v.isZero(0.0)) continue;
    const Eigen::VectorXcd w = number_block(H, N, k_lo, k_hi) * v;
    for (int k = k_lo; k <= k_hi; ++k) out(k, N - k) = w[k - k_lo];
  }
  return TwoModeState(psi.cutoff_a, psi.cutoff_b, std::move(out));
}

Eigen::MatrixXcd lift(const ScatteringMatrix& S, Cutoff cutoff) {
  const int d = cutoff.dim();
  const Eigen::Matrix2cd H = hermitian_generator(S);
  Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int N = 0; N <= 2 * (d - 1); ++N) {
    const int k_lo = std::max(0, N - (d - 1));
    const int k_hi = std::min(d - 1, N);
    const Eigen::MatrixXcd Ub = number_block(H, N, k_lo, k_hi);
    for (int k = k_lo; k <= k_hi; ++k)
      for (int l = k_lo; l <= k_hi; ++l)
        U(k * d + (N - k), l * d + (N - l)) = Ub(k - k_lo, l - k_lo);
  }
  return U;
}

TwoModeState simulate_fourport(const ScatteringMatrix& S, const InputSpec& in0,
                               const InputSpec& in1, Cutoff cutoff) {
  return apply_scattering(S, tensor(prepare(in0, cutoff), prepare(in1, cutoff)));
}

DensityMatrix reduced_output(const ScatteringMatrix& S, const InputSpec& in0,
                             const InputSpec& in1, Port port, Cutoff cutoff) {
  const TwoModeState out = simulate_fourport(S, in0, in1, cutoff);
  return partial_trace(density_from_state(out),
                       port == Port::upper ? Mode::a : Mode::b);
}

PhotonStats photon_stats(const DensityMatrix& rho) {
  double mean = 0.0, second = 0.0;
  for (int n = 0; n < rho.cutoff.dim(); ++n) {
    const double pn = rho.elements(n, n).real();
    mean += n * pn;
    second += double(n) * n * pn;
  }
  return {mean, second - mean * mean};
}

}  // namespace fourport
