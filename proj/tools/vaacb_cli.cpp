// vaacb: scenario generation, validation and optimizer runs.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "vaacb/experiment.hpp"
#include "vaacb/io.hpp"
#include "vaacb/scenario.hpp"

namespace {

int cmd_run(const std::string& scenario, const std::string& config, const std::string& algo,
            const std::optional<std::uint64_t>& seed, const std::optional<std::size_t>& pop,
            const std::optional<std::size_t>& iters, const std::optional<std::size_t>& threads, std::size_t beam_bs,
            const std::string& out) {
  vaacb::RunOverrides o;
  o.algorithm = vaacb::parse_algorithm(algo);
  o.seed = seed;
  o.pop_size = pop;
  o.max_iters = iters;
  o.threads = threads;
  o.beam_bs = beam_bs;
  std::optional<std::filesystem::path> cfg;
  if (!config.empty()) cfg = config;
  const vaacb::RunReport r = vaacb::run_experiment(scenario, cfg, out, o);
  std::printf("algorithm=%s seed=%llu archive=%zu sinr_factor=%.4f hypervolume=%.6f wall=%.2fs\n",
              r.algorithm.c_str(), static_cast<unsigned long long>(r.archive.seed), r.archive.members.size(),
              r.sinr_improvement_factor, r.hypervolume, r.wall_time_s);
  return 0;
}

int cmd_validate(const std::string& path) {
  const vaacb::Scenario sc = vaacb::scenario_from_json(vaacb::read_json_file(path));
  std::printf("ok: %zu UAVs, %zu BSs, digest %s\n", sc.geom.n_uavs(), sc.geom.n_bss(),
              vaacb::scenario_digest(sc).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV virtual antenna array beamforming planner"};
  app.require_subcommand(1);

  std::string scenario, config, out = "out", algo = "cnsga2";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> pop, iters, threads;
  std::size_t beam_bs = 0;
  auto* run = app.add_subcommand("run", "optimize a scenario and write the result files");
  run->add_option("--scenario", scenario, "scenario JSON")->required();
  run->add_option("--config", config, "algorithm config JSON");
  run->add_option("--algo", algo, "cnsga2 | nsga2 | baseline");
  run->add_option("--seed", seed, "master seed");
  run->add_option("--pop", pop, "population size");
  run->add_option("--iters", iters, "iterations");
  run->add_option("--threads", threads, "evaluation threads");
  run->add_option("--beam-bs", beam_bs, "BS index for beampattern.csv");
  run->add_option("--out", out, "output directory");

  std::size_t uavs = 8;
  std::uint64_t scen_seed = 1;
  std::string scen_out;
  auto* make = app.add_subcommand("make-scenario", "write a default random scenario");
  make->add_option("--uavs", uavs, "number of UAVs");
  make->add_option("--seed", scen_seed, "placement seed");
  make->add_option("--out", scen_out, "output file (stdout if omitted)");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "check a scenario file");
  validate->add_option("scenario", validate_path, "scenario JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return cmd_run(scenario, config, algo, seed, pop, iters, threads, beam_bs, out);
    if (*make) {
      const std::string text = vaacb::dump_canonical(vaacb::scenario_to_json(vaacb::build_default_scenario(uavs, scen_seed)));
      if (scen_out.empty())
        std::cout << text;
      else
        vaacb::write_text_file(scen_out, text);
      return 0;
    }
    if (*validate) return cmd_validate(validate_path);
  } catch (const vaacb::InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
