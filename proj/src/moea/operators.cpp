#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "vaacb/moea.hpp"

namespace vaacb {

double sbx_beta(double u, double threshold, double eta) {
  if (u <= threshold) return std::pow(2.0 * u, 1.0 / (eta + 1.0));
  return std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
}

double pm_delta(double u, double threshold, double eta_u) {
  if (u < threshold) return std::pow(2.0 * u, 1.0 / (eta_u + 1.0)) - 1.0;
  return 1.0 - std::pow(2.0 * (1.0 - u), 1.0 / (1.0 + eta_u));
}

std::pair<std::vector<double>, std::vector<double>> sbx_crossover(std::span<const double> p1, std::span<const double> p2,
                                                                  const GeneBounds& bounds, double threshold,
                                                                  double eta, Rng& rng) {
  if (p1.size() != p2.size() || p1.size() != bounds.lower.size())
    throw std::invalid_argument("SBX parents and bounds differ in length");
  std::vector<double> c1(p1.size()), c2(p2.size());
  for (std::size_t m = 0; m < p1.size(); ++m) {
    const double beta = sbx_beta(rng.open01(), threshold, eta);
    const double a = 0.5 * ((1.0 + beta) * p1[m] + (1.0 - beta) * p2[m]);
    const double b = 0.5 * ((1.0 - beta) * p1[m] + (1.0 + beta) * p2[m]);
    c1[m] = std::clamp(a, bounds.lower[m], bounds.upper[m]);
    c2[m] = std::clamp(b, bounds.lower[m], bounds.upper[m]);
  }
  return {std::move(c1), std::move(c2)};
}

void polynomial_mutation(std::span<double> genes, const GeneBounds& bounds, double threshold, double eta_u,
                         double prob, Rng& rng) {
  for (std::size_t m = 0; m < genes.size(); ++m) {
    if (rng.canonical() >= prob) continue;
    const double delta = pm_delta(rng.open01(), threshold, eta_u);
    genes[m] = std::clamp(genes[m] + delta * (bounds.upper[m] - bounds.lower[m]), bounds.lower[m], bounds.upper[m]);
  }
}

std::pair<std::vector<int>, std::vector<int>> pmx_crossover(std::span<const int> o1, std::span<const int> o2,
                                                            std::size_t cut_lo, std::size_t cut_hi) {
  if (o1.size() != o2.size()) throw std::invalid_argument("PMX parents differ in length");
  const std::size_t n = o1.size();
  if (n == 0) return {{}, {}};
  if (cut_lo > cut_hi || cut_hi >= n) throw std::invalid_argument("PMX cut points out of range");

  auto build = [&](std::span<const int> donor, std::span<const int> base) {
    // Inside the segment the child copies `donor`; a base value that already
    // appears there is replaced by following donor[i] -> base[i] links.
    std::vector<int> where_in_donor_segment(n, -1);
    for (std::size_t i = cut_lo; i <= cut_hi; ++i) where_in_donor_segment[donor[i]] = static_cast<int>(i);
    std::vector<int> child(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= cut_lo && i <= cut_hi) {
        child[i] = donor[i];
        continue;
      }
      int v = base[i];
      while (where_in_donor_segment[v] >= 0) v = base[where_in_donor_segment[v]];
      child[i] = v;
    }
    return child;
  };
  if (!is_permutation_of_n(o1, n) || !is_permutation_of_n(o2, n))
    throw std::invalid_argument("PMX parents must be permutations of 0..n-1");
  return {build(o2, o1), build(o1, o2)};
}

std::pair<std::vector<int>, std::vector<int>> pmx_crossover(std::span<const int> o1, std::span<const int> o2,
                                                            Rng& rng) {
  if (o1.size() != o2.size()) throw std::invalid_argument("PMX parents differ in length");
  if (o1.empty()) return {{}, {}};
  std::size_t a = rng.index(o1.size());
  std::size_t b = rng.index(o1.size());
  if (a > b) std::swap(a, b);
  return pmx_crossover(o1, o2, a, b);
}

void exchange_mutation(std::vector<int>& perm, std::size_t a, std::size_t b) {
  if (a >= perm.size() || b >= perm.size()) throw std::invalid_argument("exchange position out of range");
  std::swap(perm[a], perm[b]);
}

void exchange_mutation(std::vector<int>& perm, Rng& rng) {
  if (perm.size() < 2) return;
  const std::size_t a = rng.index(perm.size());
  std::size_t b = rng.index(perm.size() - 1);
  if (b >= a) ++b;
  exchange_mutation(perm, a, b);
}

OperatorStreams OperatorStreams::seeded(Rng& rng, const AlgoConfig& config) {
  const double g0 = rng.open01();
  double l0 = rng.open01();
  while (l0 == 0.25 || l0 == 0.5 || l0 == 0.75) l0 = rng.open01();
  const double c0 = rng.uniform(-1.0, 1.0);
  return {ChaoticStream::gauss_mouse(g0), ChaoticStream::logistic(l0, config.logistic_r),
          ChaoticStream::chebyshev(c0, config.chebyshev_a)};
}

std::vector<Genome> chaotic_init(const Scenario& scenario, const AlgoConfig& config, ChaoticStream& gauss, Rng& rng) {
  const GeneBounds bounds = gene_bounds(scenario);
  const std::size_t nb = scenario.geom.n_bss();
  const std::size_t nu = scenario.geom.n_uavs();
  std::vector<Genome> pop;
  pop.reserve(config.pop_size);
  for (std::size_t n = 0; n < config.pop_size; ++n) {
    Genome g(nb, nu);
    auto genes = g.genes();
    for (std::size_t m = 0; m < genes.size(); ++m) {
      const double r = config.flags.chaotic_init ? gauss.next() : rng.canonical();
      genes[m] = bounds.lower[m] + r * (bounds.upper[m] - bounds.lower[m]);
    }
    auto& order = g.order();
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng.index(i)]);
    pop.push_back(std::move(g));
  }
  return pop;
}

Variation::Variation(const Scenario& scenario, const AlgoConfig& config, OperatorStreams& streams, Rng& rng)
    : config_(config), bounds_(gene_bounds(scenario)), streams_(streams), rng_(rng),
      mutation_prob_(config.resolved_mutation_prob(bounds_.lower.size())) {}

std::pair<Genome, Genome> Variation::crossover(const Genome& a, const Genome& b) {
  Genome c1 = a;
  Genome c2 = b;
  if (rng_.canonical() >= config_.crossover_prob) return {std::move(c1), std::move(c2)};
  const double threshold = config_.flags.chaotic_sbx ? streams_.sbx.next() : 0.5;
  auto [g1, g2] = sbx_crossover(a.genes(), b.genes(), bounds_, threshold, config_.sbx_eta, rng_);
  std::copy(g1.begin(), g1.end(), c1.genes().begin());
  std::copy(g2.begin(), g2.end(), c2.genes().begin());
  auto [q1, q2] = pmx_crossover(a.order(), b.order(), rng_);
  c1.order() = std::move(q1);
  c2.order() = std::move(q2);
  return {std::move(c1), std::move(c2)};
}

void Variation::mutate(Genome& g) {
  const double threshold = config_.flags.chaotic_pm ? streams_.pm.next() : 0.5;
  polynomial_mutation(g.genes(), bounds_, threshold, config_.pm_eta, mutation_prob_, rng_);
  if (rng_.canonical() < config_.exchange_prob) exchange_mutation(g.order(), rng_);
}

}  // namespace vaacb
