#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "../oracles.hpp"
#include "vaacb/moea.hpp"

using namespace vaacb;

namespace {

ObjectiveVector ov(double f1, double f2, double f3, double cv = 0.0) {
  ObjectiveVector v;
  v.f1_s = f1;
  v.f2_sinr = f2;
  v.f3_j = f3;
  v.violation = cv;
  return v;
}

Individual ind(double f1, double f2, double f3) {
  Individual i;
  i.objectives = ov(f1, f2, f3);
  return i;
}

Scenario tiny_scenario() {
  Scenario sc = build_default_scenario(3, 21);
  sc.geom.bs_positions.resize(4);
  sc.geom.data_bits_per_bs.resize(4);
  return sc;
}

}  // namespace

TEST_CASE("config defaults and checks") {
  const AlgoConfig c = AlgoConfig::cnsga2();
  CHECK(c.algorithm_id() == "cnsga2");
  CHECK(AlgoConfig::nsga2().algorithm_id() == "nsga2");
  CHECK(c.resolved_tau1() == 5);
  CHECK(c.resolved_tau2() == 5);
  CHECK(c.resolved_mutation_prob(200) == doctest::Approx(1.0 / 200));
  AlgoConfig bad = c;
  bad.pop_size = 7;
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);
  bad = c;
  bad.tau1 = 40;
  bad.tau2 = 20;
  CHECK_THROWS_AS(bad.check(), std::invalid_argument);
}

TEST_CASE("sorting examples") {
  CHECK(fast_nondominated_sort(std::vector<ObjectiveVector>{ov(1, 1, 1)}) == std::vector<int>{0});
  // Minimization triples (1,2,3) and (2,3,4): f2 enters negated.
  CHECK(fast_nondominated_sort(std::vector<ObjectiveVector>{ov(1, -2, 3), ov(2, -3, 4)}) == std::vector<int>{0, 1});
  // Feasibility first, then lower violation.
  CHECK(fast_nondominated_sort(std::vector<ObjectiveVector>{ov(9, 0, 9, 0.5), ov(1, 5, 1, 0.1), ov(50, 0, 50)}) ==
        std::vector<int>{2, 1, 0});
  ObjectiveVector degenerate = ov(0, 0, 0);
  degenerate.degenerate = true;
  CHECK(fast_nondominated_sort(std::vector<ObjectiveVector>{degenerate, ov(1, 1, 1, 1e9)}) == std::vector<int>{1, 0});
}

TEST_CASE("sorting matches the brute-force oracle") {
  Rng rng(31);
  for (int t = 0; t < 30; ++t) {
    std::vector<ObjectiveVector> pop;
    std::vector<oracle::Obj> ref;
    for (int i = 0; i < 50; ++i) {
      ObjectiveVector v = ov(rng.uniform(0, 1), rng.uniform(0, 1), rng.uniform(0, 1), rng.index(5) == 0 ? rng.uniform(0, 2) : 0.0);
      pop.push_back(v);
      const auto m = minimization_triple(v);
      ref.push_back({{m[0], m[1], m[2]}, v.violation});
    }
    CHECK(fast_nondominated_sort(pop) == oracle::brute_force_ranks(ref));
  }
}

TEST_CASE("crowding distance") {
  CHECK(std::isinf(crowding_distance(std::vector<std::array<double, 3>>{{0, 0, 0}, {1, 1, 1}})[0]));
  // Two effective objectives with a constant third.
  const auto d = crowding_distance(std::vector<std::array<double, 3>>{{0, 2, 5}, {1, 1, 5}, {2, 0, 5}});
  CHECK(std::isinf(d[0]));
  CHECK(std::isinf(d[2]));
  CHECK(d[1] == doctest::Approx(2.0));
  const auto dup = crowding_distance(std::vector<std::array<double, 3>>{{0, 4, 1}, {1, 2, 1}, {1, 2, 1}, {2, 0, 1}});
  CHECK(std::isfinite(dup[1]));
  CHECK(std::isfinite(dup[2]));
  CHECK(dup[1] >= 0.0);
}

TEST_CASE("tournament selection") {
  std::vector<Individual> pop{ind(1, 1, 1), ind(2, 2, 2)};
  pop[0].rank = 0;
  pop[0].crowding = 0.1;
  pop[1].rank = 1;
  pop[1].crowding = 9.0;
  Rng rng(1);
  for (int k = 0; k < 50; ++k) {
    const std::size_t w = tournament_select(pop, rng);
    CHECK(w <= 1);
  }
  pop[1].rank = 0;
  int picks_one = 0;
  for (int k = 0; k < 200; ++k) picks_one += tournament_select(pop, rng) == 1;
  // Equal rank, larger crowding: index 1 wins unless both draws pick index 0.
  CHECK(picks_one > 100);
  Rng a(5), b(5);
  for (auto& p : pop) {
    p.rank = 0;
    p.crowding = 1.0;
  }
  for (int k = 0; k < 20; ++k) CHECK(tournament_select(pop, a) == tournament_select(pop, b));
}

TEST_CASE("SBX and PM reduce to the classical operators at threshold 0.5") {
  Rng rng(41);
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.open01();
    CHECK(sbx_beta(u, 0.5, 20.0) == doctest::Approx(oracle::classical_sbx_beta(u, 20.0)).epsilon(1e-14));
    CHECK(pm_delta(u, 0.5, 20.0) == doctest::Approx(oracle::classical_pm_delta(u, 20.0)).epsilon(1e-14));
  }
  // Distribution of |c - p| for unconstrained SBX and |delta| for PM.
  const GeneBounds wide{{-1e9}, {1e9}};
  const double p1[1] = {0.0}, p2[1] = {1.0};
  double lib_sbx = 0.0, ref_sbx = 0.0, lib_pm = 0.0, ref_pm = 0.0;
  Rng r1(7), r2(8);
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    lib_sbx += std::abs(sbx_crossover(p1, p2, wide, 0.5, 20.0, r1).first[0] - p1[0]);
    const double beta = oracle::classical_sbx_beta(r2.open01(), 20.0);
    ref_sbx += std::abs(0.5 * ((1 + beta) * p1[0] + (1 - beta) * p2[0]) - p1[0]);
    double g[1] = {0.0};
    polynomial_mutation(g, GeneBounds{{-1e3}, {1e3}}, 0.5, 20.0, 1.0, r1);
    lib_pm += std::abs(g[0]) / 2e3;
    ref_pm += std::abs(oracle::classical_pm_delta(r2.open01(), 20.0));
  }
  CHECK(lib_sbx == doctest::Approx(ref_sbx).epsilon(0.05));
  CHECK(lib_pm == doctest::Approx(ref_pm).epsilon(0.05));
}

TEST_CASE("mutation limits and clamping") {
  CHECK(pm_delta(1.0, 0.3, 20.0) == 1.0);
  CHECK(pm_delta(1.0 - 1e-6, 0.3, 20.0) < pm_delta(1.0 - 1e-9, 0.3, 20.0));

  Rng rng(2);
  double g[3] = {0.9, 0.1, 0.5};
  const GeneBounds b{{0, 0, 0}, {1, 1, 1}};
  for (int k = 0; k < 1000; ++k) {
    polynomial_mutation(g, b, rng.canonical(), 0.5, 1.0, rng);
    for (double x : g) CHECK((x >= 0.0 && x <= 1.0));
  }
  double h[2] = {0.3, 0.7};
  polynomial_mutation(h, GeneBounds{{0, 0}, {1, 1}}, 0.5, 20.0, 0.0, rng);
  CHECK(h[0] == 0.3);
  CHECK(h[1] == 0.7);
}

TEST_CASE("PMX examples") {
  // 1..8 x (3,7,5,1,6,8,2,4) with 0-based values and cuts 3..5.
  const std::vector<int> a{0, 1, 2, 3, 4, 5, 6, 7}, b{2, 6, 4, 0, 5, 7, 1, 3};
  const auto [c1, c2] = pmx_crossover(a, b, 3, 5);
  CHECK(c1 == std::vector<int>{3, 1, 2, 0, 5, 7, 6, 4});
  CHECK(c2 == std::vector<int>{2, 6, 7, 3, 4, 5, 1, 0});
  CHECK(c1 == oracle::pmx_by_swaps(a, b, 3, 5));
  CHECK(c2 == oracle::pmx_by_swaps(b, a, 3, 5));
  const auto [s1, s2] = pmx_crossover(a, b, 0, 7);
  CHECK(s1 == b);
  CHECK(s2 == a);
  Rng rng(3);
  const auto [i1, i2] = pmx_crossover(a, a, rng);
  CHECK(i1 == a);
  CHECK(i2 == a);
  CHECK_THROWS_AS(pmx_crossover(a, std::vector<int>{0, 1}, rng), std::invalid_argument);
  CHECK_THROWS_AS(pmx_crossover(a, std::vector<int>{0, 0, 2, 3, 4, 5, 6, 7}, 1, 2), std::invalid_argument);
}

TEST_CASE("exchange mutation") {
  std::vector<int> p{1, 2, 3, 4};
  exchange_mutation(p, 1, 3);
  CHECK(p == std::vector<int>{1, 4, 3, 2});
  std::vector<int> one{0};
  Rng rng(1);
  exchange_mutation(one, rng);
  CHECK(one == std::vector<int>{0});
  for (int k = 0; k < 1000; ++k) {
    std::vector<int> q(9);
    std::iota(q.begin(), q.end(), 0);
    exchange_mutation(q, rng);
    CHECK(oracle::is_permutation(q));
  }
}

TEST_CASE("elimination") {
  std::vector<Individual> pop;
  for (double f1 : {5.0, 4.0, 3.0, 2.0, 1.0}) pop.push_back(ind(f1, 10 - f1, 0));
  CHECK(eliminate(pop, 0, 0).size() == 5);
  const auto one = eliminate(pop, 1, 0);
  CHECK(one.size() == 4);
  CHECK(std::none_of(one.begin(), one.end(), [](const Individual& i) { return i.objectives.f1_s == 5.0; }));
  CHECK_THROWS_AS(eliminate(pop, 3, 2), std::invalid_argument);

  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    std::vector<Individual> p;
    std::vector<oracle::ElimRecord> rec;
    for (std::size_t i = 0; i < 20; ++i) {
      p.push_back(ind(rng.uniform(0, 1), rng.uniform(0, 1), static_cast<double>(i)));
      rec.push_back({i, p.back().objectives.f1_s, p.back().objectives.f2_sinr});
    }
    const auto out = eliminate(p, 2, 2);
    std::vector<std::size_t> ids;
    for (const Individual& i : out) ids.push_back(static_cast<std::size_t>(i.objectives.f3_j));
    std::sort(ids.begin(), ids.end());
    CHECK(ids == oracle::two_pass_elimination(rec, 2, 2));
  }
}

TEST_CASE("chaotic initialization stays in bounds and is seed-deterministic") {
  const Scenario sc = tiny_scenario();
  const GeneBounds b = gene_bounds(sc);
  for (bool chaotic : {true, false}) {
    AlgoConfig cfg = chaotic ? AlgoConfig::cnsga2() : AlgoConfig::nsga2();
    cfg.pop_size = 20;
    Rng r1(5), r2(5);
    ChaoticStream g1 = ChaoticStream::gauss_mouse(0.37), g2 = ChaoticStream::gauss_mouse(0.37);
    const auto pa = chaotic_init(sc, cfg, g1, r1);
    const auto pb = chaotic_init(sc, cfg, g2, r2);
    CHECK(pa == pb);
    for (const Genome& g : pa) CHECK(satisfies_box_and_order(g, sc));
  }
  // A zero draw lands on the upper bound.
  AlgoConfig cfg = AlgoConfig::cnsga2();
  cfg.pop_size = 4;
  Rng rng(1);
  ChaoticStream zero = ChaoticStream::gauss_mouse(0.0);
  const auto pop = chaotic_init(sc, cfg, zero, rng);
  CHECK(pop[0].genes()[0] == b.upper[0]);
}

TEST_CASE("run: small budgets") {
  const Scenario sc = tiny_scenario();
  AlgoConfig cfg = AlgoConfig::cnsga2();
  cfg.pop_size = 12;
  cfg.max_iters = 0;
  const ParetoArchive a0 = run(sc, cfg);
  CHECK(a0.iterations == 0);
  CHECK_FALSE(a0.members.empty());
  CHECK(a0.algorithm == "cnsga2");

  cfg.max_iters = 15;
  int iters_seen = 0;
  const ParetoArchive a = run(sc, cfg, [&](const GenerationLog& g, std::span<const Individual> pop) {
    ++iters_seen;
    CHECK(pop.size() == cfg.pop_size);
    for (const Individual& i : pop) CHECK(satisfies_box_and_order(i.genome, sc));
    CHECK(g.feasible <= cfg.pop_size);
  });
  CHECK(iters_seen == 16);
  for (const Individual& x : a.members)
    for (const Individual& y : a.members) CHECK_FALSE(constrained_dominates(x.objectives, y.objectives));
}

TEST_CASE("run: elitism holds without elimination") {
  const Scenario sc = tiny_scenario();
  AlgoConfig cfg = AlgoConfig::cnsga2();
  cfg.flags.elimination = false;
  cfg.pop_size = 16;
  cfg.max_iters = 20;
  std::array<double, 3> prev{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                             std::numeric_limits<double>::infinity()};
  run(sc, cfg, [&](const GenerationLog&, std::span<const Individual> pop) {
    std::array<double, 3> best = {std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                                  std::numeric_limits<double>::infinity()};
    for (const Individual& i : pop) {
      if (!i.objectives.feasible()) continue;
      const auto m = minimization_triple(i.objectives);
      for (int k = 0; k < 3; ++k) best[k] = std::min(best[k], m[k]);
    }
    for (int k = 0; k < 3; ++k) CHECK(best[k] <= prev[k]);
    prev = best;
  });
}

TEST_CASE("run: permutations stay valid across full sweeps") {
  const Scenario sc = tiny_scenario();
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    AlgoConfig cfg = AlgoConfig::cnsga2();
    cfg.pop_size = 10;
    cfg.max_iters = 10;
    cfg.master_seed = seed;
    bool ok = true;
    run(sc, cfg, [&](const GenerationLog&, std::span<const Individual> pop) {
      for (const Individual& i : pop) ok = ok && is_permutation_of_n(i.genome.order(), 4);
    });
    CHECK(ok);
  }
}

TEST_CASE("order operators reach the exhaustive tour minimum with formations frozen") {
  const Scenario sc = tiny_scenario();
  Rng rng(4);
  std::vector<std::vector<Vec3>> forms(4);
  for (auto& f : forms)
    for (int i = 0; i < 3; ++i) f.push_back({rng.uniform(0, 100), rng.uniform(0, 100), 85.0});
  const Evaluator ev(sc);
  Genome g(4, 3);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i < 3; ++i) {
      g.weight(j, i) = 1.0;
      g.set_position(j, i, forms[j][i]);
    }
  std::vector<int> order{0, 1, 2, 3};
  double best = 1e300;
  do {
    g.order() = order;
    best = std::min(best, ev.f3(g));
  } while (std::next_permutation(order.begin(), order.end()));

  // Only the order evolves: PMX and exchange mutation over a fixed genome.
  std::vector<Individual> pop;
  Rng r(9);
  for (int k = 0; k < 20; ++k) {
    Individual x;
    x.genome = g;
    auto& o = x.genome.order();
    for (std::size_t i = o.size(); i > 1; --i) std::swap(o[i - 1], o[r.index(i)]);
    pop.push_back(x);
  }
  double found = 1e300;
  for (int gen = 0; gen < 200; ++gen) {
    for (Individual& x : pop) {
      x.objectives = ev.evaluate(x.genome);
      found = std::min(found, x.objectives.f3_j);
    }
    std::vector<Individual> next;
    for (std::size_t k = 0; k < pop.size(); k += 2) {
      auto [c1, c2] = pmx_crossover(pop[k].genome.order(), pop[k + 1].genome.order(), r);
      Individual a = pop[k], b = pop[k + 1];
      a.genome.order() = c1;
      b.genome.order() = c2;
      exchange_mutation(a.genome.order(), r);
      next.push_back(a);
      next.push_back(b);
    }
    pop = next;
  }
  CHECK(found == doctest::Approx(best));
}
