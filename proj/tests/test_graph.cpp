#include "doctest.h"

#include <stdexcept>

#include "selpred/graph.hpp"
#include "support.hpp"

using namespace selpred;
using namespace testsupport;

TEST_CASE("graph construction rejects bad edges") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(0, 0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 3, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(-1, 1, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 1, -2.0), std::invalid_argument);
  CHECK(g.add_edge(0, 1, 1.5) == 0);
  CHECK(g.add_edge(0, 1, 2.5) == 1);  // parallel edges allowed
  CHECK(g.edge_count() == 2);
}

TEST_CASE("dijkstra on a path graph") {
  Graph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 1.0);

  auto forest = multi_source_dijkstra(g, std::vector<VertexId>{0});
  CHECK(forest.dist == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(forest.nearest_source == std::vector<VertexId>{0, 0, 0});
}

TEST_CASE("dijkstra with every vertex a source") {
  Graph g(4);
  g.add_edge(0, 1, 2.0);
  g.add_edge(2, 3, 0.0);

  std::vector<VertexId> all{0, 1, 2, 3};
  auto forest = multi_source_dijkstra(g, all);
  CHECK(forest.dist == std::vector<double>{0.0, 0.0, 0.0, 0.0});
  CHECK(forest.nearest_source == std::vector<VertexId>{0, 1, 2, 3});
}

TEST_CASE("dijkstra distance ties pick the smaller source") {
  // path a--b--c, weights 1 and 3, sources {a, c}
  Graph g(3);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 3.0);

  auto forest = multi_source_dijkstra(g, std::vector<VertexId>{0, 2});
  CHECK(forest.dist == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(forest.nearest_source == std::vector<VertexId>{0, 0, 2});

  // Equidistant vertex between two sources: the smaller source id wins.
  Graph h(3);
  h.add_edge(0, 1, 2.0);
  h.add_edge(2, 1, 2.0);
  auto tie = multi_source_dijkstra(h, std::vector<VertexId>{0, 2});
  CHECK(tie.nearest_source[1] == 0);
}

TEST_CASE("dijkstra input validation") {
  Graph g(2);
  g.add_edge(0, 1, 1.0);
  CHECK_THROWS_AS(multi_source_dijkstra(g, std::vector<VertexId>{}),
                  std::invalid_argument);
  std::vector<double> short_weights;
  CHECK_THROWS_AS(
      multi_source_dijkstra(g, std::vector<VertexId>{0}, short_weights),
      std::invalid_argument);
}

TEST_CASE("dijkstra parent chains reach the nearest source with matching length") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    SteinerInstance inst = random_steiner_instance(rng, 20, 6);
    const Graph& g = inst.graph;
    auto forest = multi_source_dijkstra(g, inst.terminals);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (forest.dist[v] == kInf) continue;
      VertexId cur = v;
      double walked = 0.0;
      while (forest.parent_edge[cur] != -1) {
        EdgeId e = forest.parent_edge[cur];
        walked += g.edge(e).weight;
        cur = g.other_endpoint(e, cur);
      }
      CHECK(cur == forest.nearest_source[v]);
      CHECK(walked == doctest::Approx(forest.dist[v]).epsilon(1e-12));
    }
  }
}

TEST_CASE("dijkstra agrees with Floyd-Warshall on random graphs") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(49));
    Graph g = random_connected_graph(rng, n, static_cast<int>(rng.next_below(n)));
    auto apsp = floyd_warshall(g);

    std::vector<int> vertices(n);
    for (int v = 0; v < n; ++v) vertices[v] = v;
    std::vector<VertexId> sources =
        sample_without_replacement(vertices, 1 + rng.next_below(n), rng);

    auto forest = multi_source_dijkstra(g, sources);
    for (int v = 0; v < n; ++v) {
      double expected = kInf;
      for (VertexId s : sources) expected = std::min(expected, apsp[s][v]);
      CHECK(forest.dist[v] == expected);  // integer weights: exact
    }
  }
}

TEST_CASE("dijkstra matches Floyd-Warshall with fractional weights") {
  SplitMix64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(20));
    Graph base = random_connected_graph(rng, n, static_cast<int>(rng.next_below(n)));
    Graph g(n);
    for (const Edge& e : base.edges()) g.add_edge(e.u, e.v, e.weight * 0.1);

    auto apsp = floyd_warshall(g);
    VertexId source = static_cast<VertexId>(rng.next_below(n));
    auto forest = multi_source_dijkstra(g, std::vector<VertexId>{source});
    for (int v = 0; v < n; ++v) {
      if (apsp[source][v] == kInf) {
        CHECK(forest.dist[v] == kInf);
      } else {
        CHECK(forest.dist[v] ==
              doctest::Approx(apsp[source][v]).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("kruskal on a triangle picks the two cheap edges") {
  std::vector<MstCandidate> candidates{
      {1.0, 0, 0, 1}, {2.0, 1, 1, 2}, {3.0, 2, 0, 2}};
  auto chosen = kruskal_mst(3, candidates);
  REQUIRE(chosen.size() == 2);
  CHECK(chosen[0] == 0);
  CHECK(chosen[1] == 1);
}

TEST_CASE("kruskal on no edges returns an empty forest") {
  CHECK(kruskal_mst(1, {}).empty());
}

TEST_CASE("kruskal cost ties resolve by key") {
  std::vector<MstCandidate> candidates{{5.0, 1, 0, 1}, {5.0, 0, 0, 1}};
  auto chosen = kruskal_mst(2, candidates);
  REQUIRE(chosen.size() == 1);
  CHECK(candidates[chosen[0]].key == 0);
}

TEST_CASE("kruskal forest cost matches Prim on random connected graphs") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(29));
    Graph g = random_connected_graph(rng, n, static_cast<int>(rng.next_below(2 * n)));

    std::vector<MstCandidate> candidates;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      candidates.push_back(MstCandidate{g.edge(e).weight, e, g.edge(e).u, g.edge(e).v});
    auto chosen = kruskal_mst(n, candidates);

    double total = 0.0;
    for (auto idx : chosen) total += candidates[idx].cost;
    CHECK(total == prim_forest_cost(g));
  }
}

TEST_CASE("spans_terminals basics") {
  Graph g(3);
  EdgeId ab = g.add_edge(0, 1, 1.0);
  EdgeId bc = g.add_edge(1, 2, 1.0);

  CHECK(spans_terminals(g, {}, std::vector<VertexId>{1}));
  CHECK(spans_terminals(g, {}, std::vector<VertexId>{}));
  CHECK_FALSE(spans_terminals(g, std::vector<EdgeId>{ab}, std::vector<VertexId>{0, 2}));
  CHECK(spans_terminals(g, std::vector<EdgeId>{ab, bc}, std::vector<VertexId>{0, 2}));
}

TEST_CASE("spans_terminals agrees with BFS on random subsets") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    SteinerInstance inst = random_steiner_instance(rng, 12, 6);
    std::vector<EdgeId> subset;
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e)
      if (rng.next_below(2) == 0) subset.push_back(e);
    CHECK(spans_terminals(inst.graph, subset, inst.terminals) ==
          bfs_spans(inst.graph, subset, inst.terminals));
  }
}

TEST_CASE("disjoint sets unite and find") {
  DisjointSets sets(4);
  CHECK(sets.find(2) == 2);
  CHECK(sets.unite(0, 1));
  CHECK_FALSE(sets.unite(1, 0));
  CHECK(sets.find(0) == sets.find(1));
  CHECK(sets.find(2) != sets.find(0));
}
