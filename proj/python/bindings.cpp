#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vaacb/beam.hpp"
#include "vaacb/chaos.hpp"
#include "vaacb/energy.hpp"
#include "vaacb/experiment.hpp"
#include "vaacb/hypervolume.hpp"
#include "vaacb/io.hpp"

namespace py = pybind11;
using namespace vaacb;

namespace {

// Documents cross the boundary as JSON text; the Python wrapper converts.
std::string scenario_json(std::size_t n_uavs, std::uint64_t seed) {
  return scenario_to_json(build_default_scenario(n_uavs, seed)).dump();
}

// Empty string when the scenario is valid, otherwise the error naming the field.
std::string validate_json(const std::string& text) {
  try {
    scenario_from_json(Json::parse(text));
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

std::string evaluate_json(const std::string& scenario, const std::string& genome) {
  const Scenario sc = scenario_from_json(Json::parse(scenario));
  return objectives_to_json(Evaluator(sc).evaluate(genome_from_json(Json::parse(genome)))).dump();
}

std::string before_cb_json(const std::string& scenario) {
  return genome_to_json(before_cb_genome(scenario_from_json(Json::parse(scenario)))).dump();
}

std::string run_json(const std::string& scenario, const std::string& config, const std::string& algo) {
  const Scenario sc = scenario_from_json(Json::parse(scenario));
  const Algorithm a = parse_algorithm(algo);
  const AlgoConfig base = a == Algorithm::Nsga2 ? AlgoConfig::nsga2() : AlgoConfig::cnsga2();
  const AlgoConfig cfg = config.empty() ? base : config_from_json(Json::parse(config), base);
  RunReport r;
  {
    py::gil_scoped_release release;
    r = run_report(sc, cfg, a);
  }
  return report_to_json(r).dump();
}

double gain(const std::vector<std::array<double, 3>>& positions, const std::vector<double>& weights,
            double wavelength_m, double theta, double phi, double eta) {
  BeamSnapshot snap;
  for (const auto& p : positions) snap.positions.push_back({p[0], p[1], p[2]});
  snap.weights = weights;
  snap.wavelength_m = wavelength_m;
  return GainPattern(snap, eta, {}).toward(theta, phi);
}

std::vector<double> chaotic_sequence(const std::string& kind, double x0, std::size_t n, double param) {
  ChaosKind k;
  if (kind == "gauss") k = ChaosKind::GaussMouse;
  else if (kind == "logistic") k = ChaosKind::Logistic;
  else if (kind == "chebyshev") k = ChaosKind::Chebyshev;
  else throw std::invalid_argument("kind must be gauss, logistic or chebyshev");
  ChaoticStream s(k, x0, param);
  std::vector<double> out(n);
  for (double& v : out) v = s.next();
  return out;
}

}  // namespace

PYBIND11_MODULE(_vaacb, m) {
  m.doc() = "UAV virtual antenna array beamforming planner (native core)";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  m.def("scenario_json", &scenario_json, py::arg("n_uavs"), py::arg("seed"));
  m.def("validate_json", &validate_json, py::arg("scenario"));
  m.def("evaluate_json", &evaluate_json, py::arg("scenario"), py::arg("genome"));
  m.def("before_cb_json", &before_cb_json, py::arg("scenario"));
  m.def("run_json", &run_json, py::arg("scenario"), py::arg("config") = "", py::arg("algo") = "cnsga2");

  m.def("gain", &gain, py::arg("positions"), py::arg("weights"), py::arg("wavelength_m"), py::arg("theta"),
        py::arg("phi"), py::arg("eta") = 1.0, "Directive gain of an isotropic-element array toward (theta, phi).");
  m.def("propulsion_power", [](double v) { return propulsion_power(v, default_energy_params()); }, py::arg("v"));
  m.def("max_range_speed", [] { return max_range_speed(default_energy_params()); });
  m.def("chaotic_sequence", &chaotic_sequence, py::arg("kind"), py::arg("x0"), py::arg("n"), py::arg("param") = 4.0);
  m.def("hypervolume", [](const std::vector<Point>& front, const Point& ref) { return hypervolume(front, ref); },
        py::arg("front"), py::arg("ref"));
}
