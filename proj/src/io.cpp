#include "vaacb/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace vaacb {

namespace {

void reject_unknown(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  const std::set<std::string> known(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) throw InputError(path + "." + key + ": unknown field");
  }
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.contains(key)) throw InputError(path + "." + key + ": missing field");
  return j.at(key);
}

double number(const Json& j, const std::string& path, const char* key) {
  const Json& v = field(j, path, key);
  if (!v.is_number()) throw InputError(path + "." + key + ": expected a number");
  return v.get<double>();
}

Json vec3_to_json(const Vec3& p) { return Json::array({p.x, p.y, p.z}); }

Vec3 vec3_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw InputError(path + ": expected [x, y, z]");
  for (const Json& c : j) {
    if (!c.is_number()) throw InputError(path + ": coordinates must be numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

std::vector<Vec3> points_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of points");
  std::vector<Vec3> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vec3_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<double> numbers_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected an array of numbers");
  std::vector<double> out;
  for (const Json& v : j) {
    if (!v.is_number()) throw InputError(path + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

const char* method_name(QuadratureMethod m) { return m == QuadratureMethod::Midpoint ? "midpoint" : "closed_form"; }

}  // namespace

Json scenario_to_json(const Scenario& sc) {
  const RadioParams& r = sc.radio;
  const EnergyParams& e = sc.energy;
  const Geometry& g = sc.geom;
  Json j;
  j["radio"] = {{"wavelength_m", r.wavelength_m},
                {"carrier_hz", r.carrier_hz},
                {"tx_power_w", r.tx_power_w},
                {"bandwidth_hz", r.bandwidth_hz},
                {"noise_power_w", r.noise_power_w},
                {"array_efficiency", r.array_efficiency},
                {"gu_rx_power_w", r.gu_rx_power_w},
                {"pathloss_const", r.pathloss_const},
                {"pathloss_exp", r.pathloss_exp},
                {"k1", r.k1},
                {"k2", r.k2},
                {"xi_los", r.xi_los},
                {"xi_nlos", r.xi_nlos}};
  j["energy"] = {{"p1_w", e.p1_w},
                 {"p2_w", e.p2_w},
                 {"v_tip_mps", e.v_tip_mps},
                 {"v0_mps", e.v0_mps},
                 {"d0", e.d0},
                 {"s", e.s},
                 {"rotor_area_m2", e.rotor_area_m2},
                 {"air_density_kg_m3", e.air_density},
                 {"uav_mass_kg", e.uav_mass_kg},
                 {"gravity_mps2", e.gravity_mps2}};
  Json uavs = Json::array();
  for (const Vec3& p : g.uav_initial_positions) uavs.push_back(vec3_to_json(p));
  Json bss = Json::array();
  for (const Vec3& p : g.bs_positions) bss.push_back(vec3_to_json(p));
  j["geometry"] = {{"area_min_m", g.area_min_m},
                   {"area_max_m", g.area_max_m},
                   {"alt_min_m", g.alt_min_m},
                   {"alt_max_m", g.alt_max_m},
                   {"min_sep_m", g.min_sep_m},
                   {"uav_initial_positions_m", uavs},
                   {"bs_positions_m", bss},
                   {"data_bits_per_bs", g.data_bits_per_bs}};
  j["master_seed"] = sc.master_seed;
  j["quadrature"] = {{"n_theta", sc.quadrature.grid.n_theta},
                     {"n_phi", sc.quadrature.grid.n_phi},
                     {"method", method_name(sc.quadrature.method)}};
  return j;
}

Scenario scenario_from_json(const Json& j) {
  reject_unknown(j, "scenario", {"radio", "energy", "geometry", "master_seed", "quadrature"});
  Scenario sc;

  const Json& r = field(j, "scenario", "radio");
  const std::string rp = "scenario.radio";
  reject_unknown(r, rp,
                 {"wavelength_m", "carrier_hz", "tx_power_w", "bandwidth_hz", "noise_power_w", "array_efficiency",
                  "gu_rx_power_w", "pathloss_const", "pathloss_exp", "k1", "k2", "xi_los", "xi_nlos"});
  sc.radio.wavelength_m = number(r, rp, "wavelength_m");
  sc.radio.carrier_hz = number(r, rp, "carrier_hz");
  sc.radio.tx_power_w = number(r, rp, "tx_power_w");
  sc.radio.bandwidth_hz = number(r, rp, "bandwidth_hz");
  sc.radio.noise_power_w = number(r, rp, "noise_power_w");
  sc.radio.array_efficiency = number(r, rp, "array_efficiency");
  sc.radio.gu_rx_power_w = number(r, rp, "gu_rx_power_w");
  sc.radio.pathloss_const = number(r, rp, "pathloss_const");
  sc.radio.pathloss_exp = number(r, rp, "pathloss_exp");
  sc.radio.k1 = number(r, rp, "k1");
  sc.radio.k2 = number(r, rp, "k2");
  sc.radio.xi_los = number(r, rp, "xi_los");
  sc.radio.xi_nlos = number(r, rp, "xi_nlos");

  const Json& e = field(j, "scenario", "energy");
  const std::string ep = "scenario.energy";
  reject_unknown(e, ep,
                 {"p1_w", "p2_w", "v_tip_mps", "v0_mps", "d0", "s", "rotor_area_m2", "air_density_kg_m3",
                  "uav_mass_kg", "gravity_mps2"});
  sc.energy.p1_w = number(e, ep, "p1_w");
  sc.energy.p2_w = number(e, ep, "p2_w");
  sc.energy.v_tip_mps = number(e, ep, "v_tip_mps");
  sc.energy.v0_mps = number(e, ep, "v0_mps");
  sc.energy.d0 = number(e, ep, "d0");
  sc.energy.s = number(e, ep, "s");
  sc.energy.rotor_area_m2 = number(e, ep, "rotor_area_m2");
  sc.energy.air_density = number(e, ep, "air_density_kg_m3");
  sc.energy.uav_mass_kg = number(e, ep, "uav_mass_kg");
  sc.energy.gravity_mps2 = number(e, ep, "gravity_mps2");

  const Json& g = field(j, "scenario", "geometry");
  const std::string gp = "scenario.geometry";
  reject_unknown(g, gp,
                 {"area_min_m", "area_max_m", "alt_min_m", "alt_max_m", "min_sep_m", "uav_initial_positions_m",
                  "bs_positions_m", "data_bits_per_bs"});
  sc.geom.area_min_m = number(g, gp, "area_min_m");
  sc.geom.area_max_m = number(g, gp, "area_max_m");
  sc.geom.alt_min_m = number(g, gp, "alt_min_m");
  sc.geom.alt_max_m = number(g, gp, "alt_max_m");
  sc.geom.min_sep_m = number(g, gp, "min_sep_m");
  sc.geom.uav_initial_positions =
      points_from_json(field(g, gp, "uav_initial_positions_m"), gp + ".uav_initial_positions_m");
  sc.geom.bs_positions = points_from_json(field(g, gp, "bs_positions_m"), gp + ".bs_positions_m");
  sc.geom.data_bits_per_bs = numbers_from_json(field(g, gp, "data_bits_per_bs"), gp + ".data_bits_per_bs");

  const Json& seed = field(j, "scenario", "master_seed");
  if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<long long>() >= 0))
    throw InputError("scenario.master_seed: expected a non-negative integer");
  sc.master_seed = seed.get<std::uint64_t>();

  const Json& q = field(j, "scenario", "quadrature");
  const std::string qp = "scenario.quadrature";
  reject_unknown(q, qp, {"n_theta", "n_phi", "method"});
  sc.quadrature.grid.n_theta = static_cast<int>(number(q, qp, "n_theta"));
  sc.quadrature.grid.n_phi = static_cast<int>(number(q, qp, "n_phi"));
  if (q.contains("method")) {
    const std::string m = q.at("method").is_string() ? q.at("method").get<std::string>() : "";
    if (m == "closed_form") sc.quadrature.method = QuadratureMethod::ClosedForm;
    else if (m == "midpoint") sc.quadrature.method = QuadratureMethod::Midpoint;
    else throw InputError(qp + ".method: expected \"closed_form\" or \"midpoint\"");
  }

  const std::vector<Violation> violations = validate(sc);
  if (!violations.empty()) {
    std::string msg = "scenario." + violations.front().path + ": " + violations.front().message;
    if (violations.size() > 1) msg += " (and " + std::to_string(violations.size() - 1) + " more)";
    throw InputError(msg);
  }
  return sc;
}

Json config_to_json(const AlgoConfig& c) {
  Json j;
  j["pop_size"] = c.pop_size;
  j["max_iters"] = c.max_iters;
  j["crossover_prob"] = c.crossover_prob;
  j["mutation_prob"] = c.mutation_prob;
  j["exchange_prob"] = c.exchange_prob;
  j["sbx_eta"] = c.sbx_eta;
  j["pm_eta"] = c.pm_eta;
  j["tau1"] = c.tau1;
  j["tau2"] = c.tau2;
  j["logistic_r"] = c.logistic_r;
  j["chebyshev_a"] = c.chebyshev_a;
  j["flags"] = {{"chaotic_init", c.flags.chaotic_init},
                {"chaotic_sbx", c.flags.chaotic_sbx},
                {"chaotic_pm", c.flags.chaotic_pm},
                {"elimination", c.flags.elimination}};
  j["master_seed"] = c.master_seed;
  j["threads"] = c.threads;
  return j;
}

AlgoConfig config_from_json(const Json& j, AlgoConfig c) {
  const std::string p = "config";
  reject_unknown(j, p,
                 {"pop_size", "max_iters", "crossover_prob", "mutation_prob", "exchange_prob", "sbx_eta", "pm_eta",
                  "tau1", "tau2", "logistic_r", "chebyshev_a", "flags", "master_seed", "threads"});
  auto count = [&](const char* key, auto& out) {
    if (!j.contains(key)) return;
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError(p + "." + key + ": expected a non-negative integer");
    out = v.get<std::remove_reference_t<decltype(out)>>();
  };
  auto real = [&](const char* key, double& out) {
    if (j.contains(key)) out = number(j, p, key);
  };
  count("pop_size", c.pop_size);
  count("max_iters", c.max_iters);
  real("crossover_prob", c.crossover_prob);
  real("mutation_prob", c.mutation_prob);
  real("exchange_prob", c.exchange_prob);
  real("sbx_eta", c.sbx_eta);
  real("pm_eta", c.pm_eta);
  if (j.contains("tau1")) c.tau1 = static_cast<int>(number(j, p, "tau1"));
  if (j.contains("tau2")) c.tau2 = static_cast<int>(number(j, p, "tau2"));
  real("logistic_r", c.logistic_r);
  real("chebyshev_a", c.chebyshev_a);
  if (j.contains("flags")) {
    const Json& f = j.at("flags");
    reject_unknown(f, p + ".flags", {"chaotic_init", "chaotic_sbx", "chaotic_pm", "elimination"});
    auto flag = [&](const char* key, bool& out) {
      if (!f.contains(key)) return;
      if (!f.at(key).is_boolean()) throw InputError(p + ".flags." + key + ": expected a boolean");
      out = f.at(key).get<bool>();
    };
    flag("chaotic_init", c.flags.chaotic_init);
    flag("chaotic_sbx", c.flags.chaotic_sbx);
    flag("chaotic_pm", c.flags.chaotic_pm);
    flag("elimination", c.flags.elimination);
  }
  count("master_seed", c.master_seed);
  count("threads", c.threads);
  try {
    c.check();
  } catch (const std::invalid_argument& err) {
    throw InputError(p + ": " + err.what());
  }
  return c;
}

Json genome_to_json(const Genome& g) {
  Json rows = Json::array();
  for (std::size_t b = 0; b < g.n_bss(); ++b) {
    Json positions = Json::array();
    for (std::size_t i = 0; i < g.n_uavs(); ++i) positions.push_back(vec3_to_json(g.position(b, i)));
    rows.push_back({{"bs", b}, {"weights", g.weights_row(b)}, {"positions_m", positions}});
  }
  Json j;
  j["n_bss"] = g.n_bss();
  j["n_uavs"] = g.n_uavs();
  j["rows"] = rows;
  j["order"] = g.order();
  return j;
}

Genome genome_from_json(const Json& j) {
  const std::string p = "genome";
  reject_unknown(j, p, {"n_bss", "n_uavs", "rows", "order"});
  const std::size_t nb = field(j, p, "n_bss").get<std::size_t>();
  const std::size_t nu = field(j, p, "n_uavs").get<std::size_t>();
  Genome g(nb, nu);
  const Json& rows = field(j, p, "rows");
  if (!rows.is_array() || rows.size() != nb) throw InputError(p + ".rows: expected one row per BS");
  for (std::size_t b = 0; b < nb; ++b) {
    const std::string rp = p + ".rows[" + std::to_string(b) + "]";
    reject_unknown(rows[b], rp, {"bs", "weights", "positions_m"});
    const std::vector<double> w = numbers_from_json(field(rows[b], rp, "weights"), rp + ".weights");
    const std::vector<Vec3> pos = points_from_json(field(rows[b], rp, "positions_m"), rp + ".positions_m");
    if (w.size() != nu || pos.size() != nu) throw InputError(rp + ": expected one entry per UAV");
    for (std::size_t i = 0; i < nu; ++i) {
      g.weight(b, i) = w[i];
      g.set_position(b, i, pos[i]);
    }
  }
  g.order() = field(j, p, "order").get<std::vector<int>>();
  if (!is_permutation_of_n(g.order(), nb)) throw InputError(p + ".order: expected a permutation of the BS indices");
  return g;
}

Json objectives_to_json(const ObjectiveVector& v) {
  Json j;
  j["f1_s"] = v.f1_s;
  j["f2_linear"] = v.f2_sinr;
  j["f2_db"] = v.f2_sinr > 0.0 ? 10.0 * std::log10(v.f2_sinr) : -std::numeric_limits<double>::infinity();
  j["f3_j"] = v.f3_j;
  j["violation"] = v.violation;
  j["degenerate"] = v.degenerate;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << text;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string scenario_digest(const Scenario& scenario) {
  const std::string text = dump_canonical(scenario_to_json(scenario));
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vaacb
