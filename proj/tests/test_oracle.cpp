#include <doctest.h>

#include <numbers>

#include "fourport/oracle.hpp"
#include "support.hpp"

using namespace fourport;
using std::numbers::pi;
using std::numbers::sqrt2;

TEST_CASE("output mixture weights and displacement") {
  const complexd alpha = std::polar(sqrt2, pi / 4);
  const MixtureOutput bal =
      output_mixture(bs_dielectric(1.0 / sqrt2), alpha, Port::lower);
  CHECK(bal.weight_coherent == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(bal.weight_displaced_fock == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(bal.displacement - std::polar(1.0, pi / 4)) < 1e-12);

  const MixtureOutput refl = output_mixture(
      bs_dielectric(0.1), std::polar(10.0, pi / 4), Port::lower);
  CHECK(refl.weight_coherent == doctest::Approx(0.01).epsilon(1e-12));
  CHECK(refl.weight_displaced_fock == doctest::Approx(0.99).epsilon(1e-12));
  CHECK(std::abs(refl.displacement - std::polar(1.0, pi / 4)) < 1e-12);

  // pass-through device: the Fock photon leaves by the upper port, the
  // lower port carries the untouched coherent state
  const MixtureOutput id =
      output_mixture(ScatteringMatrix::identity(), alpha, Port::lower);
  CHECK(id.weight_coherent == doctest::Approx(1.0));
  CHECK(id.weight_displaced_fock == doctest::Approx(0.0));
  CHECK(std::abs(id.displacement - alpha) < 1e-15);

  const MixtureOutput upper =
      output_mixture(bs_dielectric(0.6), alpha, Port::upper);
  CHECK(upper.weight_coherent == doctest::Approx(1.0 - 0.36).epsilon(1e-12));
  CHECK(std::abs(upper.displacement - bs_dielectric(0.6).r() * alpha) < 1e-14);
}

TEST_CASE("mixture weights sum to one for random devices") {
  auto g = test::rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    const MixtureOutput m = output_mixture(test::random_scattering(g),
                                           test::random_alpha(g, 2.0),
                                           iter % 2 ? Port::upper : Port::lower);
    CHECK(m.weight_coherent + m.weight_displaced_fock ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("mixture_to_density special cases") {
  const Cutoff c(20);
  const DensityMatrix vac = mixture_to_density({1.0, 0.0, 0.0}, c);
  CHECK(std::abs(vac.elements(0, 0) - 1.0) < 1e-14);
  CHECK(vac.elements.cwiseAbs().sum() == doctest::Approx(1.0));

  const DensityMatrix one = mixture_to_density({0.0, 1.0, 0.0}, c);
  CHECK(std::abs(one.elements(1, 1) - 1.0) < 1e-14);

  CHECK_THROWS_AS(mixture_to_density({0.5, 0.5, complexd(6.0, 0.0)}, Cutoff(16)),
                  CutoffError);
}

TEST_CASE("mixture density trace and purity") {
  auto g = test::rng(43);
  const Cutoff c(40);
  for (int iter = 0; iter < 10; ++iter) {
    const MixtureOutput m = output_mixture(test::random_scattering(g),
                                           test::random_alpha(g, 2.0),
                                           Port::lower);
    const DensityMatrix rho = mixture_to_density(m, c);
    CHECK(std::abs(rho.trace_real() - 1.0) < kTruncTol);
    const double expect = m.weight_coherent * m.weight_coherent +
                          m.weight_displaced_fock * m.weight_displaced_fock;
    CHECK(purity(rho) == doctest::Approx(expect).epsilon(1e-8));
  }
}

TEST_CASE("analytic photon statistics") {
  auto g = test::rng(47);
  const ScatteringMatrix S = test::random_scattering(g);
  const PhotonStats dark = mean_photon_analytic(S, 0.0, Port::lower);
  CHECK(dark.mean == doctest::Approx(std::norm(S.r())).epsilon(1e-12));
  CHECK(dark.msd ==
        doctest::Approx(std::norm(S.r()) * std::norm(S.t())).epsilon(1e-12));

  const ScatteringMatrix bal = bs_dielectric(1.0 / sqrt2);
  for (double th : {0.0, 0.7, pi / 2, 2.9}) {
    const ScatteringMatrix M = mzi(bal, {th}, bal);
    for (Port port : {Port::upper, Port::lower})
      CHECK(mean_photon_analytic(M, std::polar(1.0, 0.3), port).mean ==
            doctest::Approx(1.0).epsilon(1e-12));
  }

  const ScatteringMatrix Mpi = mzi(bal, {pi}, bal);
  CHECK(mean_photon_analytic(Mpi, 2.0, Port::lower).mean ==
        doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("mean photon sum rule holds identically") {
  auto g = test::rng(53);
  for (int iter = 0; iter < 50; ++iter) {
    const ScatteringMatrix S = test::random_scattering(g);
    const complexd alpha = test::random_alpha(g, 3.0);
    const double total = mean_photon_analytic(S, alpha, Port::upper).mean +
                         mean_photon_analytic(S, alpha, Port::lower).mean;
    CHECK(total == doctest::Approx(1.0 + std::norm(alpha)).epsilon(1e-14));
  }
}

TEST_CASE("balanced MZI closed forms") {
  {
    const auto [upper, lower] = balanced_mzi_stats(0.0, 2.0);
    CHECK(upper.mean == doctest::Approx(4.0));
    CHECK(lower.mean == doctest::Approx(1.0));
  }
  {
    const auto [upper, lower] = balanced_mzi_stats(pi, 0.0);
    CHECK(upper.mean == doctest::Approx(1.0));
    CHECK(lower.mean == doctest::Approx(0.0));
  }
  for (double a : {0.0, 1.0, 2.0}) {
    const auto [upper, lower] = balanced_mzi_stats(pi / 2, a);
    CHECK(upper.msd - lower.msd == doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("balanced MZI stats agree with the general-device forms") {
  const ScatteringMatrix bal = bs_dielectric(1.0 / sqrt2);
  for (double a : {0.0, 0.5, 1.0, 2.0})
    for (int i = 0; i <= 12; ++i) {
      const double th = 2.0 * pi * i / 12.0;
      const ScatteringMatrix M = mzi(bal, {th}, bal);
      const auto [upper, lower] = balanced_mzi_stats(th, a);
      CHECK(upper.mean ==
            doctest::Approx(mean_photon_analytic(M, a, Port::upper).mean)
                .epsilon(1e-12));
      CHECK(lower.mean ==
            doctest::Approx(mean_photon_analytic(M, a, Port::lower).mean)
                .epsilon(1e-12));
      CHECK(upper.msd ==
            doctest::Approx(mean_photon_analytic(M, a, Port::upper).msd)
                .epsilon(1e-12));
      CHECK(upper.msd - lower.msd ==
            doctest::Approx(a * a * std::cos(th)).epsilon(1e-12));
    }
}

TEST_CASE("HOM output state and probabilities") {
  const HomOutput closed = hom_mzi_output(0.0);
  CHECK(closed.w_coincidence == doctest::Approx(1.0));
  CHECK(closed.w_20 == doctest::Approx(0.0));
  CHECK(std::abs(closed.state.amp(1, 1) - 1.0) < 1e-14);

  const HomOutput open = hom_mzi_output(pi / 2);
  CHECK(open.w_coincidence == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(open.w_20 == doctest::Approx(0.5));
  CHECK(open.w_02 == doctest::Approx(0.5));

  for (int i = 0; i <= 20; ++i) {
    const double th = 2.0 * pi * i / 20.0;
    const HomOutput h = hom_mzi_output(th);
    CHECK(h.w_coincidence + h.w_20 + h.w_02 ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h.w_coincidence == doctest::Approx(std::cos(th) * std::cos(th))
                                 .epsilon(1e-12));
    // per-port means are 1 for every theta
    const double mean_upper = h.w_coincidence + 2.0 * h.w_20;
    const double mean_lower = h.w_coincidence + 2.0 * h.w_02;
    CHECK(mean_upper == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(mean_lower == doctest::Approx(1.0).epsilon(1e-12));
  }
}
