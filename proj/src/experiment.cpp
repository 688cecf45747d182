#include "vaacb/experiment.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "vaacb/energy.hpp"
#include "vaacb/hypervolume.hpp"

namespace vaacb {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "cnsga2") return Algorithm::Cnsga2;
  if (name == "nsga2") return Algorithm::Nsga2;
  if (name == "baseline") return Algorithm::Baseline;
  throw InputError("--algo: expected cnsga2, nsga2 or baseline, got '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Cnsga2: return "cnsga2";
    case Algorithm::Nsga2: return "nsga2";
    case Algorithm::Baseline: return "baseline";
  }
  return "";
}

std::vector<Point> front_points(const ParetoArchive& archive) {
  std::vector<Point> pts;
  for (const Individual& ind : archive.members) {
    if (!ind.objectives.feasible()) continue;
    const auto t = minimization_triple(ind.objectives);
    pts.push_back({t[0], t[1], t[2]});
  }
  return pts;
}

RunReport run_report(const Scenario& scenario, const AlgoConfig& config, Algorithm algorithm,
                     const GenerationObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.scenario_digest = scenario_digest(scenario);
  report.algorithm = algorithm_name(algorithm);

  const Evaluator evaluator(scenario);
  report.before_cb_genome = before_cb_genome(scenario);
  report.before_cb = evaluator.evaluate(report.before_cb_genome);

  if (algorithm == Algorithm::Baseline) {
    report.archive.seed = config.master_seed;
    report.archive.algorithm = "baseline";
    Individual ind;
    ind.genome = report.before_cb_genome;
    ind.objectives = report.before_cb;
    ind.rank = 0;
    report.archive.members.push_back(std::move(ind));
  } else {
    report.archive = run(scenario, config, observer);
  }
  report.config = config;

  for (std::size_t i = 0; i < report.archive.members.size(); ++i) {
    if (report.archive.members[i].objectives.f2_sinr >
        report.archive.members[report.best_f2_index].objectives.f2_sinr)
      report.best_f2_index = i;
  }
  if (!report.archive.members.empty() && report.before_cb.f2_sinr > 0.0)
    report.sinr_improvement_factor =
        report.archive.members[report.best_f2_index].objectives.f2_sinr / report.before_cb.f2_sinr;

  const std::vector<Point> front = front_points(report.archive);
  const auto b = minimization_triple(report.before_cb);
  const std::vector<std::vector<Point>> fronts{front, {{b[0], b[1], b[2]}}};
  report.hypervolume = normalized_hypervolume(front, objective_range(fronts));

  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string beampattern_csv(const GainField& field) {
  std::ostringstream out;
  out << "theta_rad,phi_rad,gain_linear,gain_dbi\n";
  for (int it = 0; it < field.grid.n_theta; ++it) {
    for (int ip = 0; ip < field.grid.n_phi; ++ip) {
      const double g = field.at(it, ip);
      const double dbi = g > 0.0 ? 10.0 * std::log10(g) : -300.0;
      out << format_double(field.theta_at(it)) << ',' << format_double(field.phi_at(ip)) << ','
          << format_double(g) << ',' << format_double(dbi) << '\n';
    }
  }
  return out.str();
}

void export_beampattern(const Genome& genome, std::size_t bs_index, const Scenario& scenario,
                        const std::filesystem::path& path) {
  if (bs_index >= genome.n_bss()) throw std::invalid_argument("beam pattern BS index out of range");
  const Evaluator evaluator(scenario);
  const GainField field =
      sample_gain_field(evaluator.snapshot(genome, bs_index), scenario.radio.array_efficiency, scenario.quadrature.grid);
  write_text_file(path, beampattern_csv(field));
}

namespace {

std::string genome_id(const RunReport& r, std::size_t i) {
  return r.algorithm + "-s" + std::to_string(r.archive.seed) + "-" + std::to_string(i);
}

}  // namespace

Json report_to_json(const RunReport& r) {
  Json archive = Json::array();
  for (std::size_t i = 0; i < r.archive.members.size(); ++i) {
    archive.push_back({{"genome_id", genome_id(r, i)},
                       {"objectives", objectives_to_json(r.archive.members[i].objectives)},
                       {"genome", genome_to_json(r.archive.members[i].genome)}});
  }
  Json j;
  j["scenario_digest"] = r.scenario_digest;
  j["algorithm"] = r.algorithm;
  j["seed"] = r.archive.seed;
  j["iterations"] = r.archive.iterations;
  j["config"] = config_to_json(r.config);
  j["before_cb"] = objectives_to_json(r.before_cb);
  j["best_f2_genome_id"] = r.archive.members.empty() ? "" : genome_id(r, r.best_f2_index);
  j["sinr_improvement_factor"] = r.sinr_improvement_factor;
  j["hypervolume"] = r.hypervolume;
  j["archive"] = archive;
  j["wall_time_s"] = r.wall_time_s;
  return j;
}

std::string pareto_csv(const RunReport& r) {
  std::ostringstream out;
  out << "f1_s,f2_linear,f3_j,violation,genome_id\n";
  for (std::size_t i = 0; i < r.archive.members.size(); ++i) {
    const ObjectiveVector& v = r.archive.members[i].objectives;
    out << format_double(v.f1_s) << ',' << format_double(v.f2_sinr) << ',' << format_double(v.f3_j) << ','
        << format_double(v.violation) << ',' << genome_id(r, i) << '\n';
  }
  return out.str();
}

Json solutions_json(const RunReport& r) {
  Json list = Json::array();
  for (std::size_t i = 0; i < r.archive.members.size(); ++i) {
    list.push_back({{"genome_id", genome_id(r, i)},
                    {"objectives", objectives_to_json(r.archive.members[i].objectives)},
                    {"genome", genome_to_json(r.archive.members[i].genome)}});
  }
  Json j;
  j["algorithm"] = r.algorithm;
  j["seed"] = r.archive.seed;
  j["solutions"] = list;
  return j;
}

Json flightpaths_json(const RunReport& r, const Scenario& scenario) {
  const Evaluator evaluator(scenario);
  Json list = Json::array();
  for (std::size_t s = 0; s < r.archive.members.size(); ++s) {
    const Genome& g = r.archive.members[s].genome;
    const std::vector<FormationMove> moves = evaluator.tour_moves(g);
    Json uavs = Json::array();
    for (std::size_t i = 0; i < g.n_uavs(); ++i) {
      const Vec3 start = scenario.geom.uav_initial_positions[i];
      Json waypoints = Json::array();
      waypoints.push_back({{"bs", nullptr}, {"position_m", {start.x, start.y, start.z}}});
      Json legs = Json::array();
      for (std::size_t k = 0; k < moves.size(); ++k) {
        const int bs = g.order()[k];
        const Vec3 p = g.position(static_cast<std::size_t>(bs), i);
        waypoints.push_back({{"bs", bs}, {"position_m", {p.x, p.y, p.z}}});
        const FlightLeg& leg = moves[k].legs[i];
        legs.push_back({{"to_bs", bs},
                        {"horizontal_dist_m", leg.horizontal_dist_m},
                        {"alt_change_m", leg.alt_change_m},
                        {"speed_mps", leg.speed_mps},
                        {"duration_s", leg.duration_s},
                        {"hover_tail_s", moves[k].hover_tail_s[i]},
                        {"energy_j", moves[k].energy_j[i]}});
      }
      uavs.push_back({{"uav", i}, {"waypoints", waypoints}, {"legs", legs}});
    }
    list.push_back({{"genome_id", genome_id(r, s)},
                    {"f3_j", r.archive.members[s].objectives.f3_j},
                    {"cruise_speed_mps", evaluator.cruise_speed()},
                    {"uavs", uavs}});
  }
  Json j;
  j["solutions"] = list;
  return j;
}

RunReport run_experiment(const std::filesystem::path& scenario_path,
                         const std::optional<std::filesystem::path>& config_path, const std::filesystem::path& out_dir,
                         const RunOverrides& o) {
  const Scenario scenario = scenario_from_json(read_json_file(scenario_path));
  const Algorithm algorithm = o.algorithm.value_or(Algorithm::Cnsga2);
  const AlgoConfig base = algorithm == Algorithm::Nsga2 ? AlgoConfig::nsga2() : AlgoConfig::cnsga2();
  AlgoConfig config = config_path ? config_from_json(read_json_file(*config_path), base) : base;
  if (o.seed) config.master_seed = *o.seed;
  if (o.pop_size) config.pop_size = *o.pop_size;
  if (o.max_iters) config.max_iters = *o.max_iters;
  if (o.threads) config.threads = *o.threads;
  try {
    config.check();
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("config: ") + e.what());
  }

  std::filesystem::create_directories(out_dir);
  std::ostringstream log;
  const RunReport report = run_report(scenario, config, algorithm, [&](const GenerationLog& g, std::span<const Individual>) {
    Json line;
    line["iter"] = g.iter;
    line["best_f1_s"] = g.best_f1;
    line["best_f2_linear"] = g.best_f2;
    line["best_f3_j"] = g.best_f3;
    line["feasible"] = g.feasible;
    line["rank0_size"] = g.rank0_size;
    log << line.dump() << '\n';
  });

  write_text_file(out_dir / "report.json", dump_canonical(report_to_json(report)));
  write_text_file(out_dir / "pareto.csv", pareto_csv(report));
  write_text_file(out_dir / "solutions.json", dump_canonical(solutions_json(report)));
  write_text_file(out_dir / "flightpaths.json", dump_canonical(flightpaths_json(report, scenario)));
  write_text_file(out_dir / "runlog.jsonl", log.str());
  if (!report.archive.members.empty()) {
    const Genome& best = report.archive.members[report.best_f2_index].genome;
    export_beampattern(best, std::min(o.beam_bs, best.n_bss() - 1), scenario, out_dir / "beampattern.csv");
  }
  return report;
}

}  // namespace vaacb
