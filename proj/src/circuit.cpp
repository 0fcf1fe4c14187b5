#include "fourport/circuit.hpp"

#include <cmath>
#include <numbers>

#include <nlohmann/json.hpp>

namespace fourport {

namespace {

using json = nlohmann::ordered_json;

json input_to_json(const InputSpec& in) {
  json j;
  if (const auto* f = std::get_if<FockInput>(&in.kind)) {
    j["kind"] = "fock";
    j["n"] = f->n;
  } else if (const auto* c = std::get_if<CoherentInput>(&in.kind)) {
    j["kind"] = "coherent";
    j["alpha_re"] = c->alpha.real();
    j["alpha_im"] = c->alpha.imag();
  } else {
    const auto& g = std::get<GeneralInput>(in.kind);
    j["kind"] = "general";
    json re = json::array(), im = json::array();
    for (Eigen::Index i = 0; i < g.coeffs.size(); ++i) {
      re.push_back(g.coeffs[i].real());
      im.push_back(g.coeffs[i].imag());
    }
    j["coeffs_re"] = re;
    j["coeffs_im"] = im;
  }
  return j;
}

InputSpec input_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "fock") return InputSpec::fock(j.at("n").get<int>());
  if (kind == "coherent")
    return InputSpec::coherent(
        complexd(j.at("alpha_re").get<double>(), j.at("alpha_im").get<double>()));
  if (kind == "general") {
    const auto& re = j.at("coeffs_re");
    const auto& im = j.at("coeffs_im");
    if (re.size() != im.size())
      throw CircuitParseError("general input: coeffs_re/coeffs_im length mismatch");
    Eigen::VectorXcd c(re.size());
    for (size_t i = 0; i < re.size(); ++i)
      c[static_cast<Eigen::Index>(i)] =
          complexd(re[i].get<double>(), im[i].get<double>());
    return InputSpec::general(std::move(c));
  }
  throw CircuitParseError("unknown input kind: " + kind);
}

json element_to_json(const CircuitElement& e) {
  json j;
  switch (e.kind) {
    case CircuitElement::Kind::bs_dielectric:
      j["kind"] = "bs_dielectric";
      j["t_mag"] = e.t_mag;
      break;
    case CircuitElement::Kind::bs_general:
      j["kind"] = "bs_general";
      j["t_prime_re"] = e.t_prime.real();
      j["t_prime_im"] = e.t_prime.imag();
      j["r_re"] = e.r.real();
      j["r_im"] = e.r.imag();
      j["r_prime_re"] = e.r_prime.real();
      j["r_prime_im"] = e.r_prime.imag();
      j["t_re"] = e.t.real();
      j["t_im"] = e.t.imag();
      break;
    case CircuitElement::Kind::phase:
      j["kind"] = "phase";
      j["theta"] = e.theta;
      break;
  }
  return j;
}

CircuitElement element_from_json(const json& j) {
  const std::string kind = j.at("kind");
  CircuitElement e;
  if (kind == "bs_dielectric") {
    e.kind = CircuitElement::Kind::bs_dielectric;
    e.t_mag = j.at("t_mag").get<double>();
  } else if (kind == "bs_general") {
    e.kind = CircuitElement::Kind::bs_general;
    e.t_prime = complexd(j.at("t_prime_re").get<double>(),
                         j.at("t_prime_im").get<double>());
    e.r = complexd(j.at("r_re").get<double>(), j.at("r_im").get<double>());
    e.r_prime = complexd(j.at("r_prime_re").get<double>(),
                         j.at("r_prime_im").get<double>());
    e.t = complexd(j.at("t_re").get<double>(), j.at("t_im").get<double>());
  } else if (kind == "phase") {
    e.kind = CircuitElement::Kind::phase;
    e.theta = j.at("theta").get<double>();
  } else {
    throw CircuitParseError("unknown element kind: " + kind);
  }
  return e;
}

}  // namespace

CircuitSpec parse_circuit(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const nlohmann::json::exception& ex) {
    throw CircuitParseError(std::string("invalid circuit JSON: ") + ex.what());
  }
  try {
    CircuitSpec spec;
    for (const auto& e : j.at("elements")) spec.elements.push_back(element_from_json(e));
    spec.input0 = input_from_json(j.at("input0"));
    spec.input1 = input_from_json(j.at("input1"));
    if (j.contains("cutoff")) spec.cutoff = j.at("cutoff").get<int>();
    return spec;
  } catch (const nlohmann::json::exception& ex) {
    throw CircuitParseError(std::string("invalid circuit description: ") + ex.what());
  }
}

std::string serialize_circuit(const CircuitSpec& spec) {
  json j;
  json elems = json::array();
  for (const auto& e : spec.elements) elems.push_back(element_to_json(e));
  j["elements"] = elems;
  j["input0"] = input_to_json(spec.input0);
  j["input1"] = input_to_json(spec.input1);
  if (spec.cutoff) j["cutoff"] = *spec.cutoff;
  return j.dump(2) + "\n";
}

std::vector<std::string> preset_names() {
  return {"fig2a", "fig2b", "fig4", "hom", "vacuum", "balanced-mzi"};
}

CircuitSpec preset(const std::string& name) {
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  CircuitSpec spec;
  if (name == "fig2a") {
    spec.elements = {{.kind = CircuitElement::Kind::bs_dielectric,
                      .t_mag = inv_sqrt2}};
    spec.input0 = InputSpec::fock(1);
    spec.input1 = InputSpec::coherent(std::polar(std::numbers::sqrt2,
                                                 std::numbers::pi / 4));
  } else if (name == "fig2b") {
    spec.elements = {{.kind = CircuitElement::Kind::bs_dielectric,
                      .t_mag = 0.1}};
    spec.input0 = InputSpec::fock(1);
    spec.input1 = InputSpec::coherent(std::polar(10.0, std::numbers::pi / 4));
  } else if (name == "fig4" || name == "balanced-mzi" || name == "hom") {
    spec.elements = {
        {.kind = CircuitElement::Kind::bs_dielectric, .t_mag = inv_sqrt2},
        {.kind = CircuitElement::Kind::phase, .theta = 0.0},
        {.kind = CircuitElement::Kind::bs_dielectric, .t_mag = inv_sqrt2}};
    spec.input0 = InputSpec::fock(1);
    spec.input1 = name == "hom" ? InputSpec::fock(1)
                                : InputSpec::coherent(1.0);
  } else if (name == "vacuum") {
    spec.elements = {{.kind = CircuitElement::Kind::bs_dielectric,
                      .t_mag = inv_sqrt2}};
    spec.input0 = InputSpec::vacuum();
    spec.input1 = InputSpec::vacuum();
  } else {
    throw CircuitParseError("unknown preset: " + name);
  }
  return spec;
}

ScatteringMatrix build_scattering(const CircuitSpec& spec) {
  std::vector<ScatteringMatrix> seq;
  for (const auto& e : spec.elements) {
    switch (e.kind) {
      case CircuitElement::Kind::bs_dielectric:
        seq.push_back(bs_dielectric(e.t_mag));
        break;
      case CircuitElement::Kind::bs_general:
        seq.push_back(bs_general(e.t_prime, e.r, e.r_prime, e.t));
        break;
      case CircuitElement::Kind::phase:
        seq.push_back(phase_matrix({e.theta}));
        break;
    }
  }
  if (seq.empty()) throw CircuitParseError("circuit has no elements");
  return compose(seq);
}

Cutoff choose_cutoff(const CircuitSpec& spec) {
  if (spec.cutoff) return Cutoff(*spec.cutoff);
  double amax = 0.0;
  for (const InputSpec* in : {&spec.input0, &spec.input1})
    if (const auto* c = std::get_if<CoherentInput>(&in->kind))
      amax = std::max(amax, std::abs(c->alpha));
  return adaptive_cutoff(amax);
}

}  // namespace fourport
