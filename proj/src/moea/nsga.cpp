#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "vaacb/moea.hpp"

namespace vaacb {

AlgoConfig AlgoConfig::cnsga2() { return AlgoConfig{}; }

AlgoConfig AlgoConfig::nsga2() {
  AlgoConfig c;
  c.flags = {false, false, false, false};
  return c;
}

std::size_t AlgoConfig::resolved_tau1() const {
  return tau1 >= 0 ? static_cast<std::size_t>(tau1) : static_cast<std::size_t>(std::ceil(0.05 * 2.0 * pop_size));
}

std::size_t AlgoConfig::resolved_tau2() const {
  return tau2 >= 0 ? static_cast<std::size_t>(tau2) : static_cast<std::size_t>(std::ceil(0.05 * 2.0 * pop_size));
}

double AlgoConfig::resolved_mutation_prob(std::size_t n_continuous) const {
  if (mutation_prob > 0.0) return mutation_prob;
  return n_continuous > 0 ? 1.0 / static_cast<double>(n_continuous) : 0.0;
}

std::string AlgoConfig::algorithm_id() const {
  if (flags == FeatureFlags{true, true, true, true}) return "cnsga2";
  if (flags == FeatureFlags{false, false, false, false}) return "nsga2";
  return "custom";
}

void AlgoConfig::check() const {
  if (pop_size < 4 || pop_size % 2 != 0) throw std::invalid_argument("pop_size must be even and at least 4");
  if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0)) throw std::invalid_argument("crossover_prob must lie in [0,1]");
  if (!(mutation_prob <= 1.0)) throw std::invalid_argument("mutation_prob must not exceed 1");
  if (!(exchange_prob >= 0.0 && exchange_prob <= 1.0)) throw std::invalid_argument("exchange_prob must lie in [0,1]");
  if (!(sbx_eta > 0.0)) throw std::invalid_argument("sbx_eta must be positive");
  if (!(pm_eta >= 0.0)) throw std::invalid_argument("pm_eta must be non-negative");
  if (threads == 0) throw std::invalid_argument("threads must be at least 1");
  if (flags.elimination && resolved_tau1() + resolved_tau2() > pop_size)
    throw std::invalid_argument("tau1 + tau2 must not exceed pop_size");
}

std::vector<ObjectiveVector> evaluate_all(const Evaluator& evaluator, std::span<const Genome> genomes,
                                          std::size_t threads) {
  std::vector<ObjectiveVector> out(genomes.size());
  threads = std::max<std::size_t>(1, std::min(threads, genomes.size()));
  if (threads == 1) {
    for (std::size_t i = 0; i < genomes.size(); ++i) out[i] = evaluator.evaluate(genomes[i]);
    return out;
  }
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < genomes.size(); i += threads) out[i] = evaluator.evaluate(genomes[i]);
    });
  }
  return out;
}

namespace {

std::vector<Individual> evaluated(const Evaluator& evaluator, std::vector<Genome> genomes, std::size_t threads) {
  const std::vector<ObjectiveVector> objs = evaluate_all(evaluator, genomes, threads);
  std::vector<Individual> pop(genomes.size());
  for (std::size_t i = 0; i < genomes.size(); ++i) {
    pop[i].genome = std::move(genomes[i]);
    pop[i].objectives = objs[i];
  }
  return pop;
}

GenerationLog summarize(std::size_t iter, std::span<const Individual> pop) {
  GenerationLog log;
  log.iter = iter;
  log.best_f1 = std::numeric_limits<double>::infinity();
  log.best_f2 = -std::numeric_limits<double>::infinity();
  log.best_f3 = std::numeric_limits<double>::infinity();
  bool any_feasible = false;
  for (const Individual& ind : pop) {
    if (ind.objectives.feasible()) ++log.feasible;
    if (ind.rank == 0) ++log.rank0_size;
  }
  any_feasible = log.feasible > 0;
  for (const Individual& ind : pop) {
    if (any_feasible && !ind.objectives.feasible()) continue;
    log.best_f1 = std::min(log.best_f1, ind.objectives.f1_s);
    log.best_f2 = std::max(log.best_f2, ind.objectives.f2_sinr);
    log.best_f3 = std::min(log.best_f3, ind.objectives.f3_j);
  }
  return log;
}

}  // namespace

ParetoArchive run(const Scenario& scenario, const AlgoConfig& config, const GenerationObserver& observer) {
  config.check();
  const Evaluator evaluator(scenario);
  Rng rng(config.master_seed);
  OperatorStreams streams = OperatorStreams::seeded(rng, config);

  std::vector<Individual> pop =
      evaluated(evaluator, chaotic_init(scenario, config, streams.init, rng), config.threads);
  assign_rank_and_crowding(pop);
  if (observer) observer(summarize(0, pop), pop);

  Variation variation(scenario, config, streams, rng);
  for (std::size_t iter = 1; iter <= config.max_iters; ++iter) {
    std::vector<Genome> children;
    children.reserve(config.pop_size);
    while (children.size() < config.pop_size) {
      const Genome& a = pop[tournament_select(pop, rng)].genome;
      const Genome& b = pop[tournament_select(pop, rng)].genome;
      auto [c1, c2] = variation.crossover(a, b);
      variation.mutate(c1);
      variation.mutate(c2);
      children.push_back(std::move(c1));
      children.push_back(std::move(c2));
    }
    std::vector<Individual> merged = std::move(pop);
    for (Individual& child : evaluated(evaluator, std::move(children), config.threads)) merged.push_back(std::move(child));
    if (config.flags.elimination) merged = eliminate(std::move(merged), config.resolved_tau1(), config.resolved_tau2());
    pop = environmental_selection(std::move(merged), config.pop_size);
    assign_rank_and_crowding(pop);
    if (observer) observer(summarize(iter, pop), pop);
  }

  ParetoArchive archive;
  archive.seed = config.master_seed;
  archive.iterations = config.max_iters;
  archive.algorithm = config.algorithm_id();
  for (const Individual& ind : pop) {
    if (ind.rank != 0) continue;
    const bool duplicate = std::any_of(archive.members.begin(), archive.members.end(),
                                       [&](const Individual& m) { return m.genome == ind.genome; });
    if (!duplicate) archive.members.push_back(ind);
  }
  return archive;
}

}  // namespace vaacb
