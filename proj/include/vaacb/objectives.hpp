#pragma once

#include <span>
#include <vector>

#include "vaacb/beam.hpp"
#include "vaacb/energy.hpp"
#include "vaacb/geometry.hpp"
#include "vaacb/scenario.hpp"

namespace vaacb {

/// Decision variables: per-BS excitation weights and hover positions plus the
/// BS visiting order. Continuous genes are stored flat, BS-major, with the
/// layout [w_0 .. w_{U-1}, x_0, y_0, z_0, .., x_{U-1}, y_{U-1}, z_{U-1}] per BS.
class Genome {
 public:
  Genome() = default;
  Genome(std::size_t n_bss, std::size_t n_uavs);

  std::size_t n_bss() const { return n_bss_; }
  std::size_t n_uavs() const { return n_uavs_; }
  std::size_t genes_per_bs() const { return 4 * n_uavs_; }

  double weight(std::size_t bs, std::size_t uav) const { return genes_[bs * genes_per_bs() + uav]; }
  double& weight(std::size_t bs, std::size_t uav) { return genes_[bs * genes_per_bs() + uav]; }
  Vec3 position(std::size_t bs, std::size_t uav) const;
  void set_position(std::size_t bs, std::size_t uav, const Vec3& p);

  std::vector<double> weights_row(std::size_t bs) const;
  std::vector<Vec3> formation(std::size_t bs) const;

  std::span<double> genes() { return genes_; }
  std::span<const double> genes() const { return genes_; }
  std::vector<int>& order() { return order_; }
  const std::vector<int>& order() const { return order_; }

  friend bool operator==(const Genome&, const Genome&) = default;

 private:
  std::size_t n_bss_ = 0;
  std::size_t n_uavs_ = 0;
  std::vector<double> genes_;
  std::vector<int> order_;
};

/// Lower and upper bound of every continuous gene: weights in [0,1], positions in the flight box.
struct GeneBounds {
  std::vector<double> lower;
  std::vector<double> upper;
};

GeneBounds gene_bounds(const Scenario& scenario);

/// True when `order` holds each index in [0, n) exactly once.
bool is_permutation_of_n(std::span<const int> order, std::size_t n);

/// True when every gene is inside its bounds and the order is a permutation.
bool satisfies_box_and_order(const Genome& genome, const Scenario& scenario);

/// Every formation at the UAV start positions, all weights 1, natural order.
Genome before_cb_genome(const Scenario& scenario);

struct ObjectiveVector {
  double f1_s = 0.0;       // total transmission time
  double f2_sinr = 0.0;    // summed interfered-BS SINR, linear
  double f3_j = 0.0;       // total propulsion energy
  double violation = 0.0;  // summed minimum-separation shortfall (m)
  bool degenerate = false; // some BS row has all-zero weights

  bool feasible() const { return !degenerate && violation == 0.0; }
  /// Constraint measure used for dominance; degenerate genomes rank last.
  double effective_violation() const;

  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

/// Evaluates genomes against one scenario. Holds the maximum-range speed so
/// repeated evaluation does not redo the search. Thread-safe for concurrent
/// evaluate() calls.
class Evaluator {
 public:
  explicit Evaluator(const Scenario& scenario);

  const Scenario& scenario() const { return scenario_; }
  double cruise_speed() const { return v_mr_; }

  /// Sum of Data_j / R_j; +infinity when any weight row is all zero.
  double f1(const Genome& genome) const;
  /// Sum over target BSs j and interfered BSs k != j of P_GU / (sigma^2 + P_t G_j(k) g_jk).
  double f2(const Genome& genome) const;
  /// Swarm energy of the tour start -> order[0] -> ... -> order[B-1].
  double f3(const Genome& genome) const;
  /// Sum over formations and UAV pairs of max(0, D_min - distance).
  double violation(const Genome& genome) const;

  ObjectiveVector evaluate(const Genome& genome) const;

  /// Per-leg formation moves along the tour (first entry starts at the UAV
  /// initial positions).
  std::vector<FormationMove> tour_moves(const Genome& genome) const;

  /// Snapshot for BS j's weights and formation.
  BeamSnapshot snapshot(const Genome& genome, std::size_t bs) const;

 private:
  Scenario scenario_;
  double v_mr_;
};

}  // namespace vaacb
