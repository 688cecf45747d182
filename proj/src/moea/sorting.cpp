#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vaacb/moea.hpp"

namespace vaacb {

std::array<double, 3> minimization_triple(const ObjectiveVector& v) { return {v.f1_s, -v.f2_sinr, v.f3_j}; }

namespace {

bool pareto_dominates(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  bool strictly = false;
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] > b[m]) return false;
    if (a[m] < b[m]) strictly = true;
  }
  return strictly;
}

}  // namespace

bool constrained_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  const double va = a.effective_violation();
  const double vb = b.effective_violation();
  if (va == 0.0 && vb > 0.0) return true;
  if (va > 0.0 || vb > 0.0) return va < vb;
  return pareto_dominates(minimization_triple(a), minimization_triple(b));
}

std::vector<int> fast_nondominated_sort(std::span<const ObjectiveVector> objs) {
  const std::size_t n = objs.size();
  std::vector<std::vector<std::size_t>> dominated(n);
  std::vector<int> dominated_by_count(n, 0);
  std::vector<int> rank(n, -1);
  std::vector<std::size_t> front;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if (constrained_dominates(objs[p], objs[q])) {
        dominated[p].push_back(q);
        ++dominated_by_count[q];
      } else if (constrained_dominates(objs[q], objs[p])) {
        dominated[q].push_back(p);
        ++dominated_by_count[p];
      }
    }
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (dominated_by_count[p] == 0) {
      rank[p] = 0;
      front.push_back(p);
    }
  }
  int level = 0;
  while (!front.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t p : front) {
      for (std::size_t q : dominated[p]) {
        if (--dominated_by_count[q] == 0) {
          rank[q] = level + 1;
          next.push_back(q);
        }
      }
    }
    ++level;
    front = std::move(next);
  }
  return rank;
}

std::vector<double> crowding_distance(std::span<const std::array<double, 3>> front) {
  const std::size_t n = front.size();
  std::vector<double> dist(n, 0.0);
  if (n == 0) return dist;
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(), inf);
    return dist;
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t m = 0; m < 3; ++m) {
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return front[a][m] < front[b][m]; });
    const double lo = front[idx.front()][m];
    const double hi = front[idx.back()][m];
    const double span = hi - lo;
    if (!std::isfinite(span) || span == 0.0) continue;
    dist[idx.front()] = inf;
    dist[idx.back()] = inf;
    for (std::size_t k = 1; k + 1 < n; ++k) {
      if (dist[idx[k]] == inf) continue;
      dist[idx[k]] += (front[idx[k + 1]][m] - front[idx[k - 1]][m]) / span;
    }
  }
  return dist;
}

void assign_rank_and_crowding(std::span<Individual> pop) {
  std::vector<ObjectiveVector> objs;
  objs.reserve(pop.size());
  for (const Individual& ind : pop) objs.push_back(ind.objectives);
  const std::vector<int> rank = fast_nondominated_sort(objs);
  int max_rank = -1;
  for (std::size_t i = 0; i < pop.size(); ++i) {
    pop[i].rank = rank[i];
    max_rank = std::max(max_rank, rank[i]);
  }
  for (int r = 0; r <= max_rank; ++r) {
    std::vector<std::size_t> members;
    std::vector<std::array<double, 3>> points;
    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (pop[i].rank == r) {
        members.push_back(i);
        points.push_back(minimization_triple(pop[i].objectives));
      }
    }
    const std::vector<double> d = crowding_distance(points);
    for (std::size_t k = 0; k < members.size(); ++k) pop[members[k]].crowding = d[k];
  }
}

std::vector<Individual> environmental_selection(std::vector<Individual> pool, std::size_t n) {
  assign_rank_and_crowding(pool);
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (pool[a].rank != pool[b].rank) return pool[a].rank < pool[b].rank;
    return pool[a].crowding > pool[b].crowding;
  });
  std::vector<Individual> next;
  next.reserve(std::min(n, pool.size()));
  for (std::size_t k = 0; k < idx.size() && next.size() < n; ++k) next.push_back(std::move(pool[idx[k]]));
  return next;
}

std::size_t tournament_select(std::span<const Individual> pop, Rng& rng) {
  const std::size_t a = rng.index(pop.size());
  std::size_t b = a;
  if (pop.size() > 1) {
    b = rng.index(pop.size() - 1);
    if (b >= a) ++b;
  }
  const Individual& x = pop[a];
  const Individual& y = pop[b];
  if (x.rank != y.rank) return x.rank < y.rank ? a : b;
  if (x.crowding != y.crowding) return x.crowding > y.crowding ? a : b;
  return (rng.bits() & 1U) ? a : b;
}

std::vector<Individual> eliminate(std::vector<Individual> pop, std::size_t tau1, std::size_t tau2) {
  if (tau1 + tau2 >= pop.size() && (tau1 + tau2) > 0)
    throw std::invalid_argument("elimination would remove the whole population");
  std::vector<std::size_t> idx(pop.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return pop[a].objectives.f1_s < pop[b].objectives.f1_s; });
  idx.resize(idx.size() - tau1);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pop[a].objectives.f2_sinr > pop[b].objectives.f2_sinr;
  });
  idx.resize(idx.size() - tau2);
  std::sort(idx.begin(), idx.end());
  std::vector<Individual> kept;
  kept.reserve(idx.size());
  for (std::size_t i : idx) kept.push_back(std::move(pop[i]));
  return kept;
}

}  // namespace vaacb
