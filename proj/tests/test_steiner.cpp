#include "doctest.h"

#include <cmath>
#include <set>

#include "selpred/errors.hpp"
#include "selpred/oracles.hpp"
#include "selpred/steiner.hpp"
#include "support.hpp"

using namespace selpred;
using namespace testsupport;

namespace {

constexpr double kInfAlpha = std::numeric_limits<double>::infinity();

double solution_weight(const SteinerInstance& inst, const std::vector<EdgeId>& edges) {
  return inst.graph.total_weight(edges);
}

}  // namespace

TEST_CASE("mehlhorn on a two-edge path takes everything") {
  SteinerInstance inst;
  inst.graph = Graph(3);
  inst.graph.add_edge(0, 1, 1.0);
  inst.graph.add_edge(1, 2, 1.0);
  inst.terminals = {0, 2};

  SteinerSolution sol = mehlhorn(inst);
  CHECK(sol.edges == std::vector<EdgeId>{0, 1});
  CHECK(sol.weight_original == 2.0);
  CHECK(sol.closure_mst_costs == std::vector<double>{2.0});
}

TEST_CASE("mehlhorn picks the cheaper of two parallel routes") {
  SUBCASE("parallel edges") {
    SteinerInstance inst;
    inst.graph = Graph(2);
    inst.graph.add_edge(0, 1, 3.0);
    inst.graph.add_edge(0, 1, 5.0);
    inst.terminals = {0, 1};
    SteinerSolution sol = mehlhorn(inst);
    CHECK(sol.edges == std::vector<EdgeId>{0});
    CHECK(sol.weight_original == 3.0);
  }
  SUBCASE("two disjoint paths") {
    SteinerInstance inst;
    inst.graph = Graph(4);
    inst.graph.add_edge(0, 2, 1.0);
    inst.graph.add_edge(2, 1, 2.0);
    inst.graph.add_edge(0, 3, 2.0);
    inst.graph.add_edge(3, 1, 3.0);
    inst.terminals = {0, 1};
    SteinerSolution sol = mehlhorn(inst);
    CHECK(sol.weight_original == 3.0);
    std::vector<EdgeId> oracle = exact_steiner(inst);
    CHECK(solution_weight(inst, oracle) == 3.0);
  }
}

TEST_CASE("mehlhorn with all vertices terminal reduces to the graph MST") {
  SplitMix64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(9));
    SteinerInstance inst;
    inst.graph = random_connected_graph(rng, n, static_cast<int>(rng.next_below(8)));
    for (int v = 0; v < n; ++v) inst.terminals.push_back(v);

    std::vector<MstCandidate> candidates;
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
      candidates.push_back(MstCandidate{inst.graph.edge(e).weight, e,
                                        inst.graph.edge(e).u, inst.graph.edge(e).v});
    auto chosen = kruskal_mst(n, candidates);
    double mst_weight = 0.0;
    for (auto idx : chosen) mst_weight += candidates[idx].cost;

    CHECK(mehlhorn(inst).weight_original == mst_weight);
  }
}

TEST_CASE("mehlhorn names a disconnected terminal") {
  SteinerInstance inst;
  inst.graph = Graph(4);
  inst.graph.add_edge(0, 1, 1.0);
  inst.graph.add_edge(2, 3, 1.0);
  inst.terminals = {0, 3};
  CHECK_THROWS_WITH_AS(mehlhorn(inst), doctest::Contains("3"), InfeasibleError);
}

TEST_CASE("mehlhorn is a 2-approximation on random instances") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 500; ++trial) {
    SteinerInstance inst = random_steiner_instance(rng);
    SteinerSolution sol = mehlhorn(inst);
    CHECK(spans_terminals(inst.graph, sol.edges, inst.terminals));
    double opt = solution_weight(inst, exact_steiner(inst));
    CHECK(sol.weight_original <= 2.0 * opt);
  }
}

TEST_CASE("alps rejects alpha below 1") {
  auto [inst, predicted] = tight_example(3, 0.5, 3.0);
  CHECK_THROWS_AS(alps(inst, predicted, 0.9), std::invalid_argument);
  CHECK_THROWS_AS(alps(inst, predicted, -1.0), std::invalid_argument);
}

TEST_CASE("alps with an empty prediction matches mehlhorn at every alpha") {
  SplitMix64 rng(73);
  for (int trial = 0; trial < 50; ++trial) {
    SteinerInstance inst = random_steiner_instance(rng);
    SteinerSolution base = mehlhorn(inst);
    for (double alpha : {1.0, 2.0, kInfAlpha})
      CHECK(alps(inst, {}, alpha).edges == base.edges);
  }
}

TEST_CASE("alps at alpha 1 equals mehlhorn even with predictions") {
  SplitMix64 rng(79);
  for (int trial = 0; trial < 200; ++trial) {
    SteinerInstance inst = random_steiner_instance(rng);
    std::vector<EdgeId> predicted = normalize_item_set(
        random_subset(rng, inst.graph.edge_count(), 0.4),
        std::max(inst.graph.edge_count(), 1));
    CHECK(alps(inst, predicted, 1.0).edges == mehlhorn(inst).edges);
  }
}

TEST_CASE("alps always spans the terminals") {
  SplitMix64 rng(83);
  for (int trial = 0; trial < 250; ++trial) {
    SteinerInstance inst = random_steiner_instance(rng);
    std::vector<EdgeId> predicted = normalize_item_set(
        random_subset(rng, inst.graph.edge_count(), 0.5),
        std::max(inst.graph.edge_count(), 1));
    for (double alpha : {1.0, 1.4, 2.0, kInfAlpha}) {
      SteinerSolution sol = alps(inst, predicted, alpha);
      CHECK(spans_terminals(inst.graph, sol.edges, inst.terminals));
      CHECK(sol.weight_original ==
            doctest::Approx(solution_weight(inst, sol.edges)));
    }
  }
}

TEST_CASE("pruning only removes weight and never disconnects") {
  SplitMix64 rng(89);
  for (int trial = 0; trial < 200; ++trial) {
    SteinerInstance inst = random_steiner_instance(rng);
    std::vector<EdgeId> predicted = normalize_item_set(
        random_subset(rng, inst.graph.edge_count(), 0.5),
        std::max(inst.graph.edge_count(), 1));
    SteinerOptions raw{.prune = false};
    SteinerSolution pruned = alps(inst, predicted, 2.0);
    SteinerSolution unpruned = alps(inst, predicted, 2.0, raw);
    CHECK(pruned.weight_original <= unpruned.weight_original);
    CHECK(spans_terminals(inst.graph, pruned.edges, inst.terminals));
    // Pruned edges form a subset of the raw union.
    CHECK(std::includes(unpruned.edges.begin(), unpruned.edges.end(),
                        pruned.edges.begin(), pruned.edges.end()));
  }
}

TEST_CASE("tight example construction") {
  auto [inst, predicted] = tight_example(6, 0.1, 6.0);
  CHECK(inst.graph.vertex_count() == 7);
  CHECK(inst.graph.edge_count() == 12);
  CHECK(inst.terminals.size() == 6);
  CHECK(predicted.size() == 6);

  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(tight_example(2, 0.1, 6.0), std::invalid_argument);
    CHECK_THROWS_AS(tight_example(6, 0.0, 6.0), std::invalid_argument);
    CHECK_THROWS_AS(tight_example(6, 0.1, 2.0), std::invalid_argument);
  }

  SUBCASE("optimum is the full star") {
    std::vector<EdgeId> opt = exact_steiner(inst);
    CHECK(solution_weight(inst, opt) == doctest::Approx(6.6).epsilon(1e-12));
    CHECK(enumerate_steiner_opt(inst) == doctest::Approx(6.6).epsilon(1e-12));
    // The optimum is exactly the six spokes (edge ids 6..11).
    CHECK(opt == std::vector<EdgeId>{6, 7, 8, 9, 10, 11});
  }

  SUBCASE("prediction error against the star") {
    std::vector<EdgeId> star{6, 7, 8, 9, 10, 11};
    std::vector<double> weights;
    for (const Edge& e : inst.graph.edges()) weights.push_back(e.weight);
    ItemSet pred(predicted.begin(), predicted.end());
    double eta_plus = set_weight(weights, set_minus(pred, star));
    double eta_minus = set_weight(weights, set_minus(star, pred));
    CHECK(eta_plus == 6.0);
    CHECK(eta_minus == doctest::Approx(1.1).epsilon(1e-12));
  }
}

TEST_CASE("tight example alpha regimes") {
  auto [inst, predicted] = tight_example(6, 0.1, 6.0);

  SteinerSolution at1 = alps(inst, predicted, 1.0);
  CHECK(at1.weight_original == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(at1.edges == mehlhorn(inst).edges);

  SteinerSolution at2 = alps(inst, predicted, 2.0);
  CHECK(at2.weight_original == doctest::Approx(6.6).epsilon(1e-12));
  CHECK(at2.edges == exact_steiner(inst));

  SteinerSolution at6 = alps(inst, predicted, 6.0);
  CHECK(at6.weight_original == doctest::Approx(11.5).epsilon(1e-12));

  // Between the outer-path and full-star regimes sits a narrow band where the
  // first terminal still connects over a cycle edge: spokes 2..k plus that
  // edge, weight 7.5. Grids stepping over (1+eps, 11/9] observe it.
  SteinerSolution between = alps(inst, predicted, 1.2);
  CHECK(between.weight_original == doctest::Approx(7.5).epsilon(1e-12));
}

TEST_CASE("alpha search grid formula") {
  std::vector<double> grid = alpha_search_grid(0.5);
  REQUIRE(grid.size() == 3);
  CHECK(grid[0] == 1.0);
  CHECK(grid[1] == doctest::Approx(1.5));
  CHECK(grid[2] == doctest::Approx(2.25));

  CHECK_THROWS_AS(alpha_search_grid(0.0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_search_grid(1.0), std::invalid_argument);
}

TEST_CASE("alpha search returns the best grid solution") {
  auto [inst, predicted] = tight_example(6, 0.1, 6.0);
  SteinerSolution best = alpha_search(inst, predicted, 0.25);
  for (double alpha : alpha_search_grid(0.25))
    CHECK(best.weight_original <= alps(inst, predicted, alpha).weight_original);

  SUBCASE("empty prediction collapses to mehlhorn") {
    SplitMix64 rng(97);
    for (int trial = 0; trial < 20; ++trial) {
      SteinerInstance random_inst = random_steiner_instance(rng);
      CHECK(alpha_search(random_inst, {}, 0.25).edges == mehlhorn(random_inst).edges);
    }
  }
}

TEST_CASE("bound evaluator spec anchors") {
  auto [inst, predicted] = tight_example(6, 0.1, 6.0);
  std::vector<EdgeId> star{6, 7, 8, 9, 10, 11};
  double star_weight = solution_weight(inst, star);

  SUBCASE("empty prediction doubles the reference weight") {
    for (double alpha : {1.0, 1.7, 4.0, kInfAlpha})
      CHECK(steiner_bound_rhs(inst, {}, star, alpha) ==
            doctest::Approx(2.0 * star_weight).epsilon(1e-12));
  }
  SUBCASE("perfect prediction at infinite alpha is the reference weight") {
    CHECK(steiner_bound_rhs(inst, star, star, kInfAlpha) ==
          doctest::Approx(star_weight).epsilon(1e-12));
  }
  SUBCASE("hand-evaluated value on the tight example") {
    // eta_plus = 6 (the heavy cycle edge), eta_minus = 1.1 (the unpredicted
    // spoke), reference weight 6.6; closure MST under original weights is the
    // outer path with five connections of cost 2, and one false positive
    // caps the last term at (alpha - 1) * 2.
    double rhs = steiner_bound_rhs(inst, predicted, star, 2.0);
    CHECK(rhs == doctest::Approx(1.5 * 6.6 + 0.5 * 1.1 + 2.0).epsilon(1e-12));
  }
  SUBCASE("reference must span") {
    CHECK_THROWS_AS(steiner_bound_rhs(inst, predicted, {}, 2.0),
                    std::invalid_argument);
  }
}

TEST_CASE("certified bound holds against the exact optimum") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    SteinerInstance inst = random_steiner_instance(rng);
    std::vector<EdgeId> predicted = normalize_item_set(
        random_subset(rng, inst.graph.edge_count(), 0.4),
        std::max(inst.graph.edge_count(), 1));
    std::vector<EdgeId> opt = exact_steiner(inst);
    double opt_weight = solution_weight(inst, opt);

    for (double alpha : {1.0, 1.1, 1.4, 2.0, 4.0, kInfAlpha}) {
      double out = alps(inst, predicted, alpha).weight_original;
      CHECK(out <= steiner_bound_rhs(inst, predicted, opt, alpha) + 1e-9);
      if (!std::isinf(alpha)) CHECK(out <= 2.0 * alpha * opt_weight + 1e-9);
    }
  }
}

TEST_CASE("certified bound holds with fractional weights") {
  SplitMix64 rng(139);
  for (int trial = 0; trial < 150; ++trial) {
    SteinerInstance base = random_steiner_instance(rng);
    SteinerInstance inst;
    inst.graph = Graph(base.graph.vertex_count());
    for (const Edge& e : base.graph.edges())
      inst.graph.add_edge(e.u, e.v, e.weight * 0.3);
    inst.terminals = base.terminals;

    std::vector<EdgeId> predicted = normalize_item_set(
        random_subset(rng, inst.graph.edge_count(), 0.4),
        std::max(inst.graph.edge_count(), 1));
    std::vector<EdgeId> opt = exact_steiner(inst);

    for (double alpha : {1.0, 1.4, 2.0, kInfAlpha}) {
      double out = alps(inst, predicted, alpha).weight_original;
      double rhs = steiner_bound_rhs(inst, predicted, opt, alpha);
      CHECK(out <= rhs + 1e-9 * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("the heuristic scales to large sparse graphs") {
  SplitMix64 rng(149);
  const int n = 50000;
  SteinerInstance inst;
  inst.graph = Graph(n);
  for (int v = 1; v < n; ++v)
    inst.graph.add_edge(static_cast<int>(rng.next_below(v)), v,
                        static_cast<double>(1 + rng.next_below(100)));
  for (int i = 0; i < 100000; ++i) {
    int u = static_cast<int>(rng.next_below(n));
    int v = static_cast<int>(rng.next_below(n));
    if (u != v)
      inst.graph.add_edge(u, v, static_cast<double>(1 + rng.next_below(100)));
  }
  std::vector<int> vertices(n);
  for (int v = 0; v < n; ++v) vertices[v] = v;
  inst.terminals = sample_without_replacement(vertices, 500, rng);

  SteinerSolution base = mehlhorn(inst);
  CHECK(spans_terminals(inst.graph, base.edges, inst.terminals));
  CHECK(base.closure_mst_costs.size() == 499);

  std::vector<EdgeId> predicted;
  for (EdgeId e : base.edges)
    if (rng.next_below(2) == 0) predicted.push_back(e);
  SteinerSolution scaled = alps(inst, predicted, 2.0);
  CHECK(spans_terminals(inst.graph, scaled.edges, inst.terminals));
}

TEST_CASE("single-terminal instances are trivially solved") {
  SteinerInstance inst;
  inst.graph = Graph(3);
  inst.graph.add_edge(0, 1, 4.0);
  inst.terminals = {1};
  CHECK(mehlhorn(inst).edges.empty());
  CHECK(alps(inst, std::vector<EdgeId>{0}, 3.0).edges.empty());
  CHECK(exact_steiner(inst).empty());
}
