// Shared test helpers: independent reference implementations used as oracles
// (kept free of the library's algorithm code paths) and seeded random
// instance generators.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

#include "selpred/graph.hpp"
#include "selpred/knapsack.hpp"
#include "selpred/rng.hpp"
#include "selpred/stp.hpp"
#include "selpred/vertex_cover.hpp"

namespace testsupport {

using namespace selpred;

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- reference oracles -----------------------------------------------------

// All-pairs shortest paths by Floyd-Warshall.
inline std::vector<std::vector<double>> floyd_warshall(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<double>> dist(static_cast<std::size_t>(n),
                                        std::vector<double>(static_cast<std::size_t>(n), kInf));
  for (int v = 0; v < n; ++v) dist[v][v] = 0.0;
  for (const Edge& e : g.edges()) {
    dist[e.u][e.v] = std::min(dist[e.u][e.v], e.weight);
    dist[e.v][e.u] = std::min(dist[e.v][e.u], e.weight);
  }
  for (int mid = 0; mid < n; ++mid)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        dist[a][b] = std::min(dist[a][b], dist[a][mid] + dist[mid][b]);
  return dist;
}

// Minimum spanning forest cost by Prim's algorithm (restarted per component).
inline double prim_forest_cost(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  double total = 0.0;
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    using Entry = std::pair<double, int>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    heap.emplace(0.0, start);
    while (!heap.empty()) {
      auto [cost, v] = heap.top();
      heap.pop();
      if (visited[v]) continue;
      visited[v] = 1;
      total += cost;
      for (EdgeId e : g.incident(v)) {
        int u = g.other_endpoint(e, v);
        if (!visited[u]) heap.emplace(g.edge(e).weight, u);
      }
    }
  }
  return total;
}

// Connectivity of a terminal set under an edge subset, by BFS from the first
// terminal.
inline bool bfs_spans(const Graph& g, const std::vector<EdgeId>& subset,
                      const std::vector<VertexId>& terminals) {
  if (terminals.size() <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.vertex_count()));
  for (EdgeId e : subset) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
  }
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::queue<int> queue;
  queue.push(terminals[0]);
  seen[terminals[0]] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int u : adj[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        queue.push(u);
      }
    }
  }
  return std::all_of(terminals.begin(), terminals.end(),
                     [&](VertexId t) { return seen[t]; });
}

// Minimum-weight terminal-spanning edge set by enumeration over all edge
// subsets. Only usable for very small edge counts.
inline double enumerate_steiner_opt(const SteinerInstance& inst) {
  const int m = inst.graph.edge_count();
  double best = kInf;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<EdgeId> subset;
    double weight = 0.0;
    for (int e = 0; e < m; ++e) {
      if (mask & (1u << e)) {
        subset.push_back(e);
        weight += inst.graph.edge(e).weight;
      }
    }
    if (weight < best && bfs_spans(inst.graph, subset, inst.terminals))
      best = weight;
  }
  return best;
}

// Minimum-weight vertex cover by enumeration (n <= ~16).
inline double enumerate_vc_opt(const VertexWeightedGraph& g) {
  const int n = g.graph.vertex_count();
  double best = kInf;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool covers = true;
    for (const Edge& e : g.graph.edges()) {
      if (!(mask & (1u << e.u)) && !(mask & (1u << e.v))) {
        covers = false;
        break;
      }
    }
    if (!covers) continue;
    double weight = 0.0;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) weight += g.vertex_weight[v];
    best = std::min(best, weight);
  }
  return best;
}

inline double enumerate_is_opt(const VertexWeightedGraph& g) {
  const int n = g.graph.vertex_count();
  double best = -1.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const Edge& e : g.graph.edges()) {
      if ((mask & (1u << e.u)) && (mask & (1u << e.v))) {
        independent = false;
        break;
      }
    }
    if (!independent) continue;
    double weight = 0.0;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) weight += g.vertex_weight[v];
    best = std::max(best, weight);
  }
  return best;
}

// Minimum worth of a subset with total size >= target, by enumeration.
inline double enumerate_cover_min(const std::vector<double>& worth,
                                  const std::vector<double>& size, double target) {
  const int n = static_cast<int>(worth.size());
  double best = kInf;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double s = 0.0;
    double w = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        s += size[i];
        w += worth[i];
      }
    }
    if (s >= target) best = std::min(best, w);
  }
  return best;
}

inline double enumerate_knapsack_opt(const KnapsackInstance& inst) {
  const int n = inst.item_count();
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double s = 0.0;
    double w = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        s += inst.size[i];
        w += inst.worth[i];
      }
    }
    if (s <= inst.capacity) best = std::max(best, w);
  }
  return best;
}

// ---- random instances -------------------------------------------------------

// Connected graph: a random spanning tree plus extra random edges, integer
// weights in [1, max_weight].
inline Graph random_connected_graph(SplitMix64& rng, int n, int extra_edges,
                                    int max_weight = 10) {
  Graph g(n);
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v)));
    g.add_edge(u, v, static_cast<double>(1 + rng.next_below(max_weight)));
  }
  for (int i = 0; i < extra_edges && n >= 2; ++i) {
    int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (u == v) continue;
    g.add_edge(u, v, static_cast<double>(1 + rng.next_below(max_weight)));
  }
  return g;
}

inline SteinerInstance random_steiner_instance(SplitMix64& rng, int max_vertices = 10,
                                               int max_terminals = 5) {
  int n = 2 + static_cast<int>(rng.next_below(max_vertices - 1));
  int extra = static_cast<int>(rng.next_below(n + 3));
  SteinerInstance inst;
  inst.graph = random_connected_graph(rng, n, extra);
  int k = 1 + static_cast<int>(rng.next_below(
                  std::min(static_cast<std::uint64_t>(max_terminals),
                           static_cast<std::uint64_t>(n))));
  std::vector<int> vertices(n);
  for (int v = 0; v < n; ++v) vertices[v] = v;
  inst.terminals = sample_without_replacement(vertices, k, rng);
  inst.name = "random";
  return inst;
}

inline VertexWeightedGraph random_vertex_weighted_graph(SplitMix64& rng,
                                                        int max_vertices = 14,
                                                        int max_weight = 10) {
  int n = 1 + static_cast<int>(rng.next_below(max_vertices));
  VertexWeightedGraph g;
  g.graph = Graph(n);
  double edge_prob_scale = 1 + rng.next_below(3);  // mixes sparse and dense
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_below(5) < edge_prob_scale) g.graph.add_edge(u, v, 0.0);
  // Rebuild with weights: weights live on vertices, edges are unweighted.
  for (int v = 0; v < n; ++v)
    g.vertex_weight.push_back(static_cast<double>(1 + rng.next_below(max_weight)));
  return g;
}

inline KnapsackInstance random_knapsack_instance(SplitMix64& rng, int max_items = 15) {
  KnapsackInstance inst;
  int n = 1 + static_cast<int>(rng.next_below(max_items));
  for (int i = 0; i < n; ++i) {
    inst.worth.push_back(static_cast<double>(rng.next_below(21)));
    inst.size.push_back(static_cast<double>(1 + rng.next_below(20)));
  }
  inst.capacity = static_cast<double>(rng.next_below(
      static_cast<std::uint64_t>(inst.total_size()) + 1));
  return inst;
}

// Random subset where each element joins with probability ~prob.
inline std::vector<int> random_subset(SplitMix64& rng, int ground_size, double prob) {
  std::vector<int> out;
  for (int i = 0; i < ground_size; ++i)
    if (rng.next_double() < prob) out.push_back(i);
  return out;
}

}  // namespace testsupport
