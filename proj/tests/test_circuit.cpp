#include <doctest.h>

#include <numbers>

#include "fourport/circuit.hpp"
#include "fourport/reports.hpp"
#include "support.hpp"

using namespace fourport;
using std::numbers::pi;
using std::numbers::sqrt2;

TEST_CASE("circuit serialization round-trips byte-identically") {
  CircuitSpec spec;
  spec.elements = {
      {.kind = CircuitElement::Kind::bs_dielectric, .t_mag = 1 / sqrt2},
      {.kind = CircuitElement::Kind::phase, .theta = 0.123456789012345},
      {.kind = CircuitElement::Kind::bs_general,
       .t_prime = {1 / sqrt2, 0},
       .r = {1 / sqrt2, 0},
       .r_prime = {-1 / sqrt2, 0},
       .t = {1 / sqrt2, 0}}};
  spec.input0 = InputSpec::fock(1);
  spec.input1 = InputSpec::coherent(std::polar(1.7, pi / 3));
  spec.cutoff = 33;

  const std::string once = serialize_circuit(spec);
  const std::string twice = serialize_circuit(parse_circuit(once));
  CHECK(once == twice);
}

TEST_CASE("general input survives serialization") {
  Eigen::VectorXcd c(3);
  c << complexd(0.6, 0.0), complexd(0.0, 0.8), complexd(0.0, 0.0);
  CircuitSpec spec;
  spec.elements = {{.kind = CircuitElement::Kind::bs_dielectric, .t_mag = 0.5}};
  spec.input0 = InputSpec::general(c);
  const CircuitSpec back = parse_circuit(serialize_circuit(spec));
  const auto& g = std::get<GeneralInput>(back.input0.kind);
  CHECK((g.coeffs - c).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("parse errors raise CircuitParseError") {
  CHECK_THROWS_AS(parse_circuit("not json"), CircuitParseError);
  CHECK_THROWS_AS(parse_circuit("{}"), CircuitParseError);
  CHECK_THROWS_AS(
      parse_circuit(R"({"elements":[{"kind":"warp-drive"}],)"
                    R"("input0":{"kind":"fock","n":1},)"
                    R"("input1":{"kind":"fock","n":0}})"),
      CircuitParseError);
  CHECK_THROWS_AS(preset("figZZ"), CircuitParseError);
}

TEST_CASE("presets encode the published parameters") {
  const CircuitSpec a = preset("fig2a");
  CHECK(a.elements.size() == 1);
  CHECK(a.elements[0].t_mag == doctest::Approx(1 / sqrt2).epsilon(1e-15));
  CHECK(std::get<FockInput>(a.input0.kind).n == 1);
  const complexd alpha_a = std::get<CoherentInput>(a.input1.kind).alpha;
  CHECK(std::abs(alpha_a - std::polar(sqrt2, pi / 4)) < 1e-15);

  const CircuitSpec b = preset("fig2b");
  CHECK(b.elements[0].t_mag == doctest::Approx(0.1));
  CHECK(std::abs(std::get<CoherentInput>(b.input1.kind).alpha -
                 std::polar(10.0, pi / 4)) < 1e-14);

  const CircuitSpec h = preset("hom");
  CHECK(h.elements.size() == 3);
  CHECK(std::get<FockInput>(h.input1.kind).n == 1);

  const CircuitSpec f4 = preset("fig4");
  CHECK(f4.elements[1].kind == CircuitElement::Kind::phase);
}

TEST_CASE("build_scattering composes like the scattering module") {
  CircuitSpec spec = preset("fig4");
  spec.elements[1].theta = 1.1;
  const ScatteringMatrix from_circuit = build_scattering(spec);
  const ScatteringMatrix direct = mzi(bs_dielectric(1 / sqrt2), {1.1},
                                      bs_dielectric(1 / sqrt2));
  CHECK((from_circuit.matrix() - direct.matrix()).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("choose_cutoff") {
  CircuitSpec spec = preset("fig2a");
  CHECK(choose_cutoff(spec).n_max ==
        adaptive_cutoff(std::numbers::sqrt2).n_max);
  spec.cutoff = 55;
  CHECK(choose_cutoff(spec).n_max == 55);
}

TEST_CASE("format_double is shortest round-trip") {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-11, 0.0, 12345.678}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(0.0) == "0");
}

TEST_CASE("report tables are deterministic") {
  const CircuitSpec spec = preset("fig4");
  const std::vector<double> alphas = {0.0, 1.0};
  const std::vector<double> thetas = {0.0, 0.5, 1.0};
  const auto rows1 = run_stats_sweep(spec, alphas, thetas);
  const auto rows2 = run_stats_sweep(spec, alphas, thetas);
  CHECK(stats_table(rows1, nullptr, OutputFormat::csv) ==
        stats_table(rows2, nullptr, OutputFormat::csv));
  CHECK(hom_table(thetas, OutputFormat::csv) ==
        hom_table(thetas, OutputFormat::csv));

  const GridSpec grid(-2, 2, -2, 2, 11, 11);
  const WignerReport r1 = run_wigner(spec, Port::lower, grid);
  const WignerReport r2 = run_wigner(spec, Port::lower, grid);
  CHECK(wigner_table(r1.field, false, OutputFormat::csv) ==
        wigner_table(r2.field, false, OutputFormat::csv));
}

TEST_CASE("table headers are bit-exact") {
  const CircuitSpec spec = preset("fig4");
  const auto rows = run_stats_sweep(spec, {1.0}, {0.0});
  const std::string stats = stats_table(rows, nullptr, OutputFormat::csv);
  CHECK(stats.substr(0, stats.find('\n')) ==
        "theta,alpha_mag,mean_upper,mean_lower,msd_upper,msd_lower");
  const std::string hom = hom_table({0.0}, OutputFormat::csv);
  CHECK(hom.substr(0, hom.find('\n')) ==
        "theta,w_coincidence,w_20,w_02,mean_upper,mean_lower");
  const GridSpec grid(-1, 1, -1, 1, 2, 2);
  const WignerReport w = run_wigner(spec, Port::lower, grid);
  const std::string wt = wigner_table(w.field, false, OutputFormat::csv);
  CHECK(wt.substr(0, wt.find('\n')) == "q,p,w");
}

TEST_CASE("stats sweep: |alpha| = 1 rows are flat at 1") {
  const auto rows = run_stats_sweep(preset("fig4"), {1.0},
                                    {0.0, 0.7, 1.9, pi, 5.0});
  for (const auto& r : rows) {
    CHECK(r.upper.mean == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.lower.mean == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("wigner report uses the analytic path for fock(1) x coherent") {
  const GridSpec grid(-2, 2, -2, 2, 5, 5);
  const WignerReport analytic = run_wigner(preset("fig2a"), Port::lower, grid);
  CHECK(analytic.analytic);
  REQUIRE(analytic.mixture.has_value());
  CHECK(analytic.mixture->weight_coherent == doctest::Approx(0.5));

  CircuitSpec numeric_spec = preset("fig2a");
  numeric_spec.input0 = InputSpec::fock(0);
  const WignerReport numeric = run_wigner(numeric_spec, Port::lower, grid);
  CHECK_FALSE(numeric.analytic);
}
