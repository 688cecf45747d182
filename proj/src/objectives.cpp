#include "vaacb/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "vaacb/channel.hpp"

namespace vaacb {

Genome::Genome(std::size_t n_bss, std::size_t n_uavs)
    : n_bss_(n_bss), n_uavs_(n_uavs), genes_(n_bss * 4 * n_uavs, 0.0), order_(n_bss) {
  for (std::size_t j = 0; j < n_bss; ++j) order_[j] = static_cast<int>(j);
}

Vec3 Genome::position(std::size_t bs, std::size_t uav) const {
  const double* p = genes_.data() + bs * genes_per_bs() + n_uavs_ + 3 * uav;
  return {p[0], p[1], p[2]};
}

void Genome::set_position(std::size_t bs, std::size_t uav, const Vec3& v) {
  double* p = genes_.data() + bs * genes_per_bs() + n_uavs_ + 3 * uav;
  p[0] = v.x;
  p[1] = v.y;
  p[2] = v.z;
}

std::vector<double> Genome::weights_row(std::size_t bs) const {
  const auto first = genes_.begin() + static_cast<std::ptrdiff_t>(bs * genes_per_bs());
  return {first, first + static_cast<std::ptrdiff_t>(n_uavs_)};
}

std::vector<Vec3> Genome::formation(std::size_t bs) const {
  std::vector<Vec3> out(n_uavs_);
  for (std::size_t i = 0; i < n_uavs_; ++i) out[i] = position(bs, i);
  return out;
}

GeneBounds gene_bounds(const Scenario& sc) {
  const Geometry& g = sc.geom;
  const std::size_t nu = g.n_uavs();
  GeneBounds b;
  for (std::size_t j = 0; j < g.n_bss(); ++j) {
    for (std::size_t i = 0; i < nu; ++i) {
      b.lower.push_back(0.0);
      b.upper.push_back(1.0);
    }
    for (std::size_t i = 0; i < nu; ++i) {
      b.lower.insert(b.lower.end(), {g.area_min_m, g.area_min_m, g.alt_min_m});
      b.upper.insert(b.upper.end(), {g.area_max_m, g.area_max_m, g.alt_max_m});
    }
  }
  return b;
}

bool is_permutation_of_n(std::span<const int> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int q : order) {
    if (q < 0 || static_cast<std::size_t>(q) >= n || seen[q]) return false;
    seen[q] = true;
  }
  return true;
}

bool satisfies_box_and_order(const Genome& genome, const Scenario& sc) {
  if (genome.n_bss() != sc.geom.n_bss() || genome.n_uavs() != sc.geom.n_uavs()) return false;
  const GeneBounds b = gene_bounds(sc);
  const auto genes = genome.genes();
  for (std::size_t m = 0; m < genes.size(); ++m) {
    if (!(genes[m] >= b.lower[m] && genes[m] <= b.upper[m])) return false;
  }
  return is_permutation_of_n(genome.order(), sc.geom.n_bss());
}

Genome before_cb_genome(const Scenario& sc) {
  Genome g(sc.geom.n_bss(), sc.geom.n_uavs());
  for (std::size_t j = 0; j < g.n_bss(); ++j) {
    for (std::size_t i = 0; i < g.n_uavs(); ++i) {
      g.weight(j, i) = 1.0;
      g.set_position(j, i, sc.geom.uav_initial_positions[i]);
    }
  }
  return g;
}

double ObjectiveVector::effective_violation() const {
  return degenerate ? std::numeric_limits<double>::infinity() : violation;
}

Evaluator::Evaluator(const Scenario& scenario) : scenario_(scenario), v_mr_(max_range_speed(scenario.energy)) {}

BeamSnapshot Evaluator::snapshot(const Genome& genome, std::size_t bs) const {
  return {genome.formation(bs), genome.weights_row(bs), scenario_.radio.wavelength_m};
}

namespace {

std::optional<GainPattern> pattern_or_none(BeamSnapshot snap, const Scenario& sc) {
  try {
    return GainPattern(std::move(snap), sc.radio.array_efficiency, sc.quadrature);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

}  // namespace

namespace {

struct RowTerms {
  double seconds = 0.0;
  double sinr_sum = 0.0;
};

// Transmission time to BS j and the summed SINR of every other BS while the
// VAA serves j. Empty for an all-zero weight row.
std::optional<RowTerms> row_terms(const BeamSnapshot& snap, std::size_t j, const Scenario& sc, bool with_sinr) {
  const auto pattern = pattern_or_none(snap, sc);
  if (!pattern) return std::nullopt;
  const Geometry& g = sc.geom;
  const Vec3 ref = snap.centroid();
  RowTerms t;
  const LinkGeometry link = link_geometry(ref, g.bs_positions[j]);
  const double p = received_power(*pattern, direction_to(ref, g.bs_positions[j]), link, sc.radio);
  t.seconds = g.data_bits_per_bs[j] / rate(p, sc.radio);
  if (with_sinr) {
    for (std::size_t k = 0; k < g.n_bss(); ++k) {
      if (k == j) continue;
      const LinkGeometry lk = link_geometry(ref, g.bs_positions[k]);
      const double pk = received_power(*pattern, direction_to(ref, g.bs_positions[k]), lk, sc.radio);
      t.sinr_sum += interfered_sinr(pk, sc.radio);
    }
  }
  return t;
}

}  // namespace

double Evaluator::f1(const Genome& genome) const {
  double total = 0.0;
  for (std::size_t j = 0; j < genome.n_bss(); ++j) {
    const auto t = row_terms(snapshot(genome, j), j, scenario_, false);
    if (!t) return std::numeric_limits<double>::infinity();
    total += t->seconds;
  }
  return total;
}

double Evaluator::f2(const Genome& genome) const {
  double total = 0.0;
  for (std::size_t j = 0; j < genome.n_bss(); ++j) {
    const auto t = row_terms(snapshot(genome, j), j, scenario_, true);
    if (!t) return 0.0;
    total += t->sinr_sum;
  }
  return total;
}

std::vector<FormationMove> Evaluator::tour_moves(const Genome& genome) const {
  std::vector<FormationMove> moves;
  std::vector<Vec3> current = scenario_.geom.uav_initial_positions;
  for (int bs : genome.order()) {
    std::vector<Vec3> next = genome.formation(static_cast<std::size_t>(bs));
    moves.push_back(plan_formation_move(current, next, v_mr_, scenario_.energy));
    current = std::move(next);
  }
  return moves;
}

double Evaluator::f3(const Genome& genome) const {
  double total = 0.0;
  for (const FormationMove& m : tour_moves(genome)) total += m.total_energy_j;
  return total;
}

double Evaluator::violation(const Genome& genome) const {
  const double dmin = scenario_.geom.min_sep_m;
  double total = 0.0;
  for (std::size_t j = 0; j < genome.n_bss(); ++j) {
    for (std::size_t a = 0; a < genome.n_uavs(); ++a) {
      const Vec3 pa = genome.position(j, a);
      for (std::size_t b = a + 1; b < genome.n_uavs(); ++b) {
        total += std::max(0.0, dmin - distance(pa, genome.position(j, b)));
      }
    }
  }
  return total;
}

ObjectiveVector Evaluator::evaluate(const Genome& genome) const {
  ObjectiveVector v;
  for (std::size_t j = 0; j < genome.n_bss(); ++j) {
    const auto t = row_terms(snapshot(genome, j), j, scenario_, true);
    if (!t) {
      v.degenerate = true;
      break;
    }
    v.f1_s += t->seconds;
    v.f2_sinr += t->sinr_sum;
  }
  if (v.degenerate) {
    v.f1_s = std::numeric_limits<double>::infinity();
    v.f2_sinr = 0.0;
  }
  v.f3_j = f3(genome);
  v.violation = violation(genome);
  return v;
}

}  // namespace vaacb
