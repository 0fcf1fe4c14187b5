#include "fourport/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include <nlohmann/json.hpp>

#include "fourport/circuit.hpp"
#include "fourport/oracle.hpp"
#include "fourport/reports.hpp"
#include "fourport/wigner.hpp"

namespace fourport {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

std::mt19937_64 make_rng() { return std::mt19937_64(0x5eed5eedULL); }

ScatteringMatrix random_scattering(std::mt19937_64& rng) {
  // Haar-distributed U(2) from the QR of a Ginibre matrix; every 2x2
  // unitary satisfies the reciprocity relations.
  std::normal_distribution<double> gauss;
  Eigen::Matrix2cd g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j) = complexd(gauss(rng), gauss(rng));
  Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
  Eigen::Matrix2cd q = qr.householderQ();
  const Eigen::Matrix2cd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < 2; ++j) q.col(j) *= r(j, j) / std::abs(r(j, j));
  return ScatteringMatrix::from_matrix(q);
}

complexd random_alpha(std::mt19937_64& rng, double max_mag) {
  std::uniform_real_distribution<double> mag(0.0, max_mag);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * std::numbers::pi);
  return std::polar(mag(rng), ph(rng));
}

double max_abs_diff(const MatrixXcd& a, const MatrixXcd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

// --- direct quadrature Wigner oracle (independent of the kernel path) ---

// Harmonic-oscillator position wavefunctions, hbar = omega = 1.
VectorXcd position_column(int dim, double x) {
  Eigen::VectorXd psi(dim);
  psi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  if (dim > 1) psi[1] = std::numbers::sqrt2 * x * psi[0];
  for (int n = 2; n < dim; ++n)
    psi[n] = x * std::sqrt(2.0 / n) * psi[n - 1] -
             std::sqrt((n - 1.0) / n) * psi[n - 2];
  return psi.cast<complexd>();
}

double wigner_quadrature(const DensityMatrix& rho, double q, double p) {
  const int dim = rho.cutoff.dim();
  const double L = 14.0;
  const int steps = 4000;  // Simpson, even count
  const double h = 2.0 * L / steps;
  complexd acc = 0.0;
  for (int i = 0; i <= steps; ++i) {
    const double y = -L + i * h;
    const VectorXcd left = position_column(dim, q - 0.5 * y);
    const VectorXcd right = position_column(dim, q + 0.5 * y);
    const complexd bra_rho_ket = (left.adjoint() * rho.elements * right)(0);
    const double w = (i == 0 || i == steps) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc += w * bra_rho_ket * std::polar(1.0, p * y);
  }
  acc *= h / 3.0;
  return (acc / (2.0 * std::numbers::pi)).real();
}

// ---------------------------------------------------------------------------

struct Collector {
  std::vector<CheckResult>& out;
  std::optional<double> tol_override;
  const std::string& filter;

  bool wanted(const std::string& name) const {
    return filter.empty() || name.find(filter) != std::string::npos;
  }
  void add(const std::string& name, double max_error, double tolerance) {
    if (!wanted(name)) return;
    const double tol = tol_override.value_or(tolerance);
    out.push_back({name, max_error, tol, max_error <= tol});
  }
  // Checks are skipped entirely when filtered out; the callable computes
  // the max error.
  template <typename F>
  void run(const std::string& name, double tolerance, F&& f) {
    if (!wanted(name)) return;
    add(name, f(), tolerance);
  }
};

void check_mixed_state_theorem(Collector& c) {
  c.run("mixed-state-theorem", 1e-8, [] {
    auto rng = make_rng();
    const Cutoff cut(40);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const ScatteringMatrix S = random_scattering(rng);
      const complexd alpha = random_alpha(rng, 2.0);
      for (Port port : {Port::upper, Port::lower}) {
        const DensityMatrix numeric = reduced_output(
            S, InputSpec::fock(1), InputSpec::coherent(alpha), port, cut);
        const DensityMatrix analytic =
            mixture_to_density(output_mixture(S, alpha, port), cut);
        worst = std::max(worst,
                         max_abs_diff(numeric.elements, analytic.elements));
      }
    }
    return worst;
  });
}

void check_fig2a(Collector& c) {
  const CircuitSpec spec = preset("fig2a");
  const ScatteringMatrix S = build_scattering(spec);
  const auto& alpha = std::get<CoherentInput>(spec.input1.kind).alpha;
  const MixtureOutput m = output_mixture(S, alpha, Port::lower);

  c.run("fig2a-center-value", 1e-6, [&] {
    return std::abs(std::numbers::pi * wigner_point_mixture(m, 1.0, 1.0));
  });
  c.run("fig2a-nonnegative-and-min-location", 1e-9, [&] {
    const WignerField field = wigner_mixture(m, GridSpec::default_grid());
    int iq = 0, ip = 0;
    const double min = field.values.minCoeff(&iq, &ip);
    double err = std::max(0.0, -min);  // negativity is the error
    const double cell = std::hypot(field.grid.q_at(iq) - 1.0,
                                   field.grid.p_at(ip) - 1.0);
    const double diag = std::hypot(field.grid.dq(), field.grid.dp());
    if (cell > diag) err = std::max(err, cell);  // argmin far from (1,1)
    return err;
  });
}

void check_fig2b(Collector& c) {
  c.run("fig2b-center-value", 1e-9, [] {
    const CircuitSpec spec = preset("fig2b");
    const auto& alpha = std::get<CoherentInput>(spec.input1.kind).alpha;
    const MixtureOutput m =
        output_mixture(build_scattering(spec), alpha, Port::lower);
    const double q = std::numbers::sqrt2 * m.displacement.real();
    const double p = std::numbers::sqrt2 * m.displacement.imag();
    return std::abs(std::numbers::pi * wigner_point_mixture(m, q, p) + 0.98);
  });
}

void check_photon_conservation(Collector& c) {
  auto rng = make_rng();
  std::vector<std::pair<ScatteringMatrix, complexd>> cases;
  for (int i = 0; i < 10; ++i)
    cases.emplace_back(random_scattering(rng), random_alpha(rng, 2.0));

  c.run("photon-conservation-analytic", 1e-12, [&] {
    double worst = 0.0;
    for (const auto& [S, alpha] : cases) {
      const double total = mean_photon_analytic(S, alpha, Port::upper).mean +
                           mean_photon_analytic(S, alpha, Port::lower).mean;
      worst = std::max(worst, std::abs(total - 1.0 - std::norm(alpha)));
    }
    return worst;
  });
  c.run("photon-conservation-numeric", 1e-6, [&] {
    const Cutoff cut(40);
    double worst = 0.0;
    for (const auto& [S, alpha] : cases) {
      const InputSpec in0 = InputSpec::fock(1);
      const InputSpec in1 = InputSpec::coherent(alpha);
      const double total =
          photon_stats(reduced_output(S, in0, in1, Port::upper, cut)).mean +
          photon_stats(reduced_output(S, in0, in1, Port::lower, cut)).mean;
      worst = std::max(worst, std::abs(total - 1.0 - std::norm(alpha)));
    }
    return worst;
  });
}

void check_fig4_sweep(Collector& c) {
  std::vector<double> thetas;
  for (int i = 0; i <= 16; ++i)
    thetas.push_back(2.0 * std::numbers::pi * i / 16.0);

  c.run("fig4-balanced-mzi-analytic", 1e-12, [&] {
    double worst = 0.0;
    for (double a : {0.0, 1.0, 2.0})
      for (double th : thetas) {
        const auto [upper, lower] = balanced_mzi_stats(th, a);
        const double s2 = std::sin(th / 2) * std::sin(th / 2);
        const double c2 = std::cos(th / 2) * std::cos(th / 2);
        worst = std::max(worst,
                         std::abs(upper.mean - (s2 + a * a * c2)));
        worst = std::max(worst,
                         std::abs(lower.mean - (c2 + a * a * s2)));
        // cross-check against the composed-matrix oracle
        const ScatteringMatrix M = mzi(bs_dielectric(1.0 / std::numbers::sqrt2),
                                       {th},
                                       bs_dielectric(1.0 / std::numbers::sqrt2));
        worst = std::max(worst, std::abs(upper.mean -
                                         mean_photon_analytic(M, a, Port::upper).mean));
        worst = std::max(worst, std::abs(lower.mean -
                                         mean_photon_analytic(M, a, Port::lower).mean));
        if (a == 1.0) {
          worst = std::max(worst, std::abs(upper.mean - 1.0));
          worst = std::max(worst, std::abs(lower.mean - 1.0));
        }
      }
    return worst;
  });

  c.run("fig4-balanced-mzi-numeric", 1e-6, [&] {
    const Cutoff cut(40);
    double worst = 0.0;
    for (double a : {0.0, 1.0, 2.0})
      for (double th : thetas) {
        const ScatteringMatrix M = mzi(bs_dielectric(1.0 / std::numbers::sqrt2),
                                       {th},
                                       bs_dielectric(1.0 / std::numbers::sqrt2));
        const auto [upper, lower] = balanced_mzi_stats(th, a);
        const InputSpec in0 = InputSpec::fock(1);
        const InputSpec in1 = InputSpec::coherent(a);
        worst = std::max(
            worst, std::abs(photon_stats(reduced_output(M, in0, in1, Port::upper,
                                                        cut)).mean -
                            upper.mean));
        worst = std::max(
            worst, std::abs(photon_stats(reduced_output(M, in0, in1, Port::lower,
                                                        cut)).mean -
                            lower.mean));
      }
    return worst;
  });
}

void check_variance(Collector& c) {
  c.run("variance-identities-numeric", 1e-6, [] {
    auto rng = make_rng();
    const Cutoff cut(40);
    double worst = 0.0;
    for (int i = 0; i < 8; ++i) {
      const ScatteringMatrix S = random_scattering(rng);
      const complexd alpha = random_alpha(rng, 2.0);
      for (Port port : {Port::upper, Port::lower}) {
        const PhotonStats numeric = photon_stats(reduced_output(
            S, InputSpec::fock(1), InputSpec::coherent(alpha), port, cut));
        const PhotonStats analytic = mean_photon_analytic(S, alpha, port);
        worst = std::max(worst, std::abs(numeric.msd - analytic.msd));
      }
    }
    return worst;
  });
  c.run("variance-msd-difference", 1e-10, [] {
    double worst = 0.0;
    for (double a : {0.0, 0.7, 1.0, 2.0})
      for (int i = 0; i <= 24; ++i) {
        const double th = 2.0 * std::numbers::pi * i / 24.0;
        const auto [upper, lower] = balanced_mzi_stats(th, a);
        worst = std::max(worst, std::abs(upper.msd - lower.msd -
                                         a * a * std::cos(th)));
      }
    return worst;
  });
}

void check_displacement_theorem(Collector& c) {
  c.run("displacement-theorem", 1e-7, [] {
    auto rng = make_rng();
    const Cutoff cut(32);
    std::normal_distribution<double> gauss;
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      VectorXcd coeffs(5);  // support <= 4 photons
      for (int n = 0; n < 5; ++n) coeffs[n] = complexd(gauss(rng), gauss(rng));
      coeffs /= std::sqrt(coeffs.squaredNorm());
      const InputSpec psi = InputSpec::general(coeffs);
      const ScatteringMatrix S = random_scattering(rng);
      const complexd alpha = random_alpha(rng, 1.5);

      const DensityMatrix with_coherent = reduced_output(
          S, psi, InputSpec::coherent(alpha), Port::lower, cut);
      const DensityMatrix with_vacuum =
          reduced_output(S, psi, InputSpec::vacuum(), Port::lower, cut);
      const MatrixXcd D = displacement_operator(S.t() * alpha, cut);
      worst = std::max(worst, max_abs_diff(with_coherent.elements,
                                           D * with_vacuum.elements * D.adjoint()));
    }
    return worst;
  });
}

void check_hom(Collector& c) {
  c.run("hom-probabilities", 1e-8, [] {
    const Cutoff cut(6);
    const ScatteringMatrix bs = bs_dielectric(1.0 / std::numbers::sqrt2);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
      const double th = 2.0 * std::numbers::pi * i / 24.0;
      const TwoModeState out = simulate_fourport(
          mzi(bs, {th}, bs), InputSpec::fock(1), InputSpec::fock(1), cut);
      const double w11 = std::norm(out.amp(1, 1));
      const double w20 = std::norm(out.amp(2, 0));
      const double w02 = std::norm(out.amp(0, 2));
      const double s2 = std::sin(th) * std::sin(th);
      worst = std::max(worst, std::abs(w11 - std::cos(th) * std::cos(th)));
      worst = std::max(worst, std::abs(w20 - 0.5 * s2));
      worst = std::max(worst, std::abs(w02 - 0.5 * s2));
      for (Mode keep : {Mode::a, Mode::b}) {
        const double mean =
            photon_stats(partial_trace(density_from_state(out), keep)).mean;
        worst = std::max(worst, std::abs(mean - 1.0));
      }
    }
    return worst;
  });
}

void check_wigner_engine(Collector& c) {
  c.run("wigner-kernel-vs-quadrature", 1e-6, [] {
    auto rng = make_rng();
    const Cutoff cut(24);
    const ScatteringMatrix S = random_scattering(rng);
    const complexd alpha = random_alpha(rng, 1.5);
    const DensityMatrix rho = reduced_output(
        S, InputSpec::fock(1), InputSpec::coherent(alpha), Port::lower, cut);
    const double pts[5][2] = {
        {0.0, 0.0}, {0.9, -0.4}, {-1.3, 0.7}, {0.5, 1.8}, {-0.2, -1.1}};
    double worst = 0.0;
    for (const auto& qp : pts)
      worst = std::max(worst, std::abs(wigner_point_numeric(rho, qp[0], qp[1]) -
                                       wigner_quadrature(rho, qp[0], qp[1])));
    return worst;
  });

  c.run("wigner-normalization", 1e-4, [] {
    auto rng = make_rng();
    const GridSpec grid = GridSpec::default_grid();
    double worst = 0.0;
    for (const complexd beta : {complexd(0, 0), complexd(0.8, -0.5),
                                random_alpha(rng, 1.5)}) {
      worst = std::max(worst,
                       std::abs(wigner_coherent(beta, grid).integral() - 1.0));
      worst = std::max(
          worst, std::abs(wigner_displaced_fock1(beta, grid).integral() - 1.0));
    }
    const DensityMatrix fock2(
        Cutoff(8), [] {
          MatrixXcd m = MatrixXcd::Zero(9, 9);
          m(2, 2) = 1.0;
          return m;
        }());
    worst = std::max(worst,
                     std::abs(wigner_numeric(fock2, grid).integral() - 1.0));
    return worst;
  });

  c.run("wigner-displacement-covariance", 1e-6, [] {
    const Cutoff cut(24);
    // shift by 10 cells in q and -5 in p on the default grid
    const GridSpec grid = GridSpec::default_grid();
    const complexd beta(10 * grid.dq() / std::numbers::sqrt2,
                        -5 * grid.dp() / std::numbers::sqrt2);
    MatrixXcd m = MatrixXcd::Zero(cut.dim(), cut.dim());
    m(0, 0) = 0.25;
    m(1, 1) = 0.5;
    m(2, 2) = 0.25;
    m(0, 1) = m(1, 0) = 0.2;
    const DensityMatrix rho(cut, m);
    const MatrixXcd D = displacement_operator(beta, cut);
    const DensityMatrix shifted_rho(cut, D * rho.elements * D.adjoint());
    const WignerField base = wigner_numeric(rho, grid);
    const WignerField shifted_field = wigner_numeric(shifted_rho, grid);
    double worst = 0.0;
    for (int i = 10; i < grid.nq; ++i)
      for (int j = 0; j < grid.np - 5; ++j)
        worst = std::max(worst, std::abs(shifted_field.values(i, j) -
                                         base.values(i - 10, j + 5)));
    return worst;
  });
}

}  // namespace

std::vector<CheckResult> run_verification(std::optional<double> tolerance_override,
                                          const std::string& only_filter) {
  std::vector<CheckResult> results;
  Collector c{results, tolerance_override, only_filter};
  check_mixed_state_theorem(c);
  check_fig2a(c);
  check_fig2b(c);
  check_photon_conservation(c);
  check_fig4_sweep(c);
  check_variance(c);
  check_displacement_theorem(c);
  check_hom(c);
  check_wigner_engine(c);
  return results;
}

std::string verification_report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json j;
  j["checks"] = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    j["checks"].push_back({{"name", r.name},
                           {"max_error", r.max_error},
                           {"tolerance", r.tolerance},
                           {"pass", r.pass}});
    all = all && r.pass;
  }
  j["all_pass"] = all;
  return j.dump(2) + "\n";
}

}  // namespace fourport
