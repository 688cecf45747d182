#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "vaacb/beam.hpp"
#include "vaacb/hypervolume.hpp"
#include "vaacb/io.hpp"
#include "vaacb/moea.hpp"
#include "vaacb/objectives.hpp"
#include "vaacb/scenario.hpp"

namespace vaacb {

enum class Algorithm { Cnsga2, Nsga2, Baseline };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);

/// Command-line overrides; unset members leave the config file values.
struct RunOverrides {
  std::optional<Algorithm> algorithm;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> pop_size;
  std::optional<std::size_t> max_iters;
  std::optional<std::size_t> threads;
  std::size_t beam_bs = 0;
};

struct RunReport {
  std::string scenario_digest;
  std::string algorithm;
  AlgoConfig config;
  ParetoArchive archive;
  Genome before_cb_genome;
  ObjectiveVector before_cb;
  std::size_t best_f2_index = 0;
  double sinr_improvement_factor = 0.0;
  double hypervolume = 0.0;
  double wall_time_s = 0.0;
};

/// Feasible archive members as minimization triples (f1, -f2, f3).
std::vector<Point> front_points(const ParetoArchive& archive);

/// Runs the optimizer with `config` as given (or only the before-CB baseline)
/// and fills the report. The improvement factor is best archive f2 over
/// before-CB f2; the hypervolume normalizes the archive together with the
/// baseline point.
RunReport run_report(const Scenario& scenario, const AlgoConfig& config, Algorithm algorithm,
                     const GenerationObserver& observer = {});

/// Beam pattern of one BS formation as CSV: theta_rad,phi_rad,gain_linear,gain_dbi.
void export_beampattern(const Genome& genome, std::size_t bs_index, const Scenario& scenario,
                        const std::filesystem::path& path);
std::string beampattern_csv(const GainField& field);

/// Writes report.json, pareto.csv, solutions.json, flightpaths.json,
/// beampattern.csv and runlog.jsonl into out_dir.
RunReport run_experiment(const std::filesystem::path& scenario_path, const std::optional<std::filesystem::path>& config_path,
                         const std::filesystem::path& out_dir, const RunOverrides& overrides = {});

Json report_to_json(const RunReport& report);
std::string pareto_csv(const RunReport& report);
Json solutions_json(const RunReport& report);
Json flightpaths_json(const RunReport& report, const Scenario& scenario);

}  // namespace vaacb
