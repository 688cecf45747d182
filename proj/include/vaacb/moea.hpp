#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vaacb/chaos.hpp"
#include "vaacb/objectives.hpp"
#include "vaacb/rng.hpp"
#include "vaacb/scenario.hpp"

namespace vaacb {

struct Individual {
  Genome genome;
  ObjectiveVector objectives;
  int rank = -1;
  double crowding = 0.0;
};

struct FeatureFlags {
  bool chaotic_init = true;
  bool chaotic_sbx = true;
  bool chaotic_pm = true;
  bool elimination = true;

  friend bool operator==(const FeatureFlags&, const FeatureFlags&) = default;
};

struct AlgoConfig {
  std::size_t pop_size = 50;
  std::size_t max_iters = 200;
  double crossover_prob = 0.9;
  double mutation_prob = 0.0;   // <= 0 selects 1 / (number of continuous genes)
  double exchange_prob = 0.5;   // per-child probability of a swap in the BS order
  double sbx_eta = 20.0;
  double pm_eta = 20.0;
  int tau1 = -1;                // < 0 selects ceil(0.05 * 2N)
  int tau2 = -1;
  double logistic_r = 4.0;
  double chebyshev_a = 4.0;
  FeatureFlags flags;
  std::uint64_t master_seed = 7;
  std::size_t threads = 1;

  static AlgoConfig cnsga2();
  static AlgoConfig nsga2();

  std::size_t resolved_tau1() const;
  std::size_t resolved_tau2() const;
  double resolved_mutation_prob(std::size_t n_continuous) const;
  /// "cnsga2" with every flag on, "nsga2" with every flag off, "custom" otherwise.
  std::string algorithm_id() const;
  /// Throws std::invalid_argument on an invalid configuration.
  void check() const;
};

/// (f1, -f2, f3): the vector every dominance comparison minimizes.
std::array<double, 3> minimization_triple(const ObjectiveVector& v);

/// Feasibility-first dominance: feasible beats infeasible, smaller violation
/// beats larger, otherwise Pareto dominance on the minimization triple.
bool constrained_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// Rank of every vector (0 = non-dominated) under constrained dominance.
std::vector<int> fast_nondominated_sort(std::span<const ObjectiveVector> objectives);

/// Crowding distance of each point within one front. Boundary points of every
/// objective get +infinity; objectives that are constant (or non-finite)
/// across the front contribute nothing.
std::vector<double> crowding_distance(std::span<const std::array<double, 3>> front);

/// Binary tournament: lower rank wins, then larger crowding, then a coin flip.
std::size_t tournament_select(std::span<const Individual> pop, Rng& rng);

/// SBX spread factor. u <= threshold takes the contracting branch.
double sbx_beta(double u, double threshold, double eta);

/// Polynomial-mutation step in (-1, 1). u < threshold takes the negative branch.
double pm_delta(double u, double threshold, double eta_u);

/// SBX on every continuous gene with one threshold for the whole pair,
/// children clamped to the bounds afterwards.
std::pair<std::vector<double>, std::vector<double>> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                                                  const GeneBounds& bounds, double threshold,
                                                                  double eta, Rng& rng);

/// Polynomial mutation: each gene mutates with probability `prob` by
/// delta * (ub - lb), clamped.
void polynomial_mutation(std::span<double> genes, const GeneBounds& bounds, double threshold, double eta_u,
                         double prob, Rng& rng);

/// Partially mapped crossover with cut points drawn from rng.
std::pair<std::vector<int>, std::vector<int>> pmx_crossover(std::span<const int> o1, std::span<const int> o2,
                                                            Rng& rng);
/// PMX with explicit inclusive cut positions [cut_lo, cut_hi]. Child 1 takes
/// the segment from o2 and the rest from o1 through the segment mapping.
std::pair<std::vector<int>, std::vector<int>> pmx_crossover(std::span<const int> o1, std::span<const int> o2,
                                                            std::size_t cut_lo, std::size_t cut_hi);

/// Swap two distinct positions; inputs shorter than two are unchanged.
void exchange_mutation(std::vector<int>& perm, Rng& rng);
void exchange_mutation(std::vector<int>& perm, std::size_t a, std::size_t b);

/// Drop the tau1 individuals with the largest f1, then the tau2 with the
/// smallest f2 among the rest. Survivors keep their relative order. Throws
/// std::invalid_argument when tau1 + tau2 >= |pop|.
std::vector<Individual> eliminate(std::vector<Individual> pop, std::size_t tau1, std::size_t tau2);

/// The chaotic streams driving one run; each operator owns its own stream.
struct OperatorStreams {
  ChaoticStream init;
  ChaoticStream sbx;
  ChaoticStream pm;

  static OperatorStreams seeded(Rng& rng, const AlgoConfig& config);
};

/// Initial population with box bounds and order validity by construction.
/// With chaotic_init the continuous genes follow lb + G (ub - lb) from the
/// Gauss/mouse stream; otherwise uniform draws from rng.
std::vector<Genome> chaotic_init(const Scenario& scenario, const AlgoConfig& config, ChaoticStream& gauss, Rng& rng);

/// Crossover and mutation for one parent pair, producing two children.
class Variation {
 public:
  Variation(const Scenario& scenario, const AlgoConfig& config, OperatorStreams& streams, Rng& rng);

  std::pair<Genome, Genome> crossover(const Genome& a, const Genome& b);
  void mutate(Genome& g);

 private:
  const AlgoConfig& config_;
  GeneBounds bounds_;
  OperatorStreams& streams_;
  Rng& rng_;
  double mutation_prob_;
};

/// Evaluate every genome, optionally across threads. Results are indexed by
/// position so the output does not depend on the thread count.
std::vector<ObjectiveVector> evaluate_all(const Evaluator& evaluator, std::span<const Genome> genomes,
                                          std::size_t threads);

/// Rank every individual and set per-front crowding distances.
void assign_rank_and_crowding(std::span<Individual> pop);

/// Keep `n` individuals by (rank, crowding descending).
std::vector<Individual> environmental_selection(std::vector<Individual> pool, std::size_t n);

struct GenerationLog {
  std::size_t iter = 0;
  double best_f1 = 0.0;
  double best_f2 = 0.0;
  double best_f3 = 0.0;
  std::size_t feasible = 0;
  std::size_t rank0_size = 0;
};

struct ParetoArchive {
  std::vector<Individual> members;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  std::string algorithm;
};

using GenerationObserver = std::function<void(const GenerationLog&, std::span<const Individual>)>;

/// Evolutionary loop: initialize, then per iteration select, cross over,
/// mutate, evaluate, merge with the population, optionally eliminate, and
/// keep N by non-dominated rank and crowding. Returns the rank-0 set of the
/// final population (duplicates removed).
ParetoArchive run(const Scenario& scenario, const AlgoConfig& config, const GenerationObserver& observer = {});

}  // namespace vaacb
