#include "selpred/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "selpred/errors.hpp"

namespace selpred {

namespace {

constexpr int kMaxSteinerTerminals = 10;
constexpr int kMaxSteinerVertices = 60;
constexpr int kMaxCoverVertices = 20;
constexpr int kMaxKnapsackItems = 20;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Single-source shortest paths with parent edges, deterministic tie-breaks.
struct PathTable {
  std::vector<double> dist;
  std::vector<EdgeId> parent_edge;
};

PathTable dijkstra_from(const Graph& g, VertexId source) {
  ShortestPathForest forest = multi_source_dijkstra(g, std::vector<VertexId>{source});
  return PathTable{std::move(forest.dist), std::move(forest.parent_edge)};
}

}  // namespace

std::vector<EdgeId> exact_steiner(const SteinerInstance& inst) {
  const Graph& g = inst.graph;
  std::vector<VertexId> terminals = inst.terminals;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.empty()) throw std::invalid_argument("instance has no terminals");

  const int k = static_cast<int>(terminals.size());
  const int n = g.vertex_count();
  if (k > kMaxSteinerTerminals || n > kMaxSteinerVertices)
    throw OracleLimitError(
        "exact_steiner guard exceeded (" + std::to_string(k) + " terminals, " +
        std::to_string(n) + " vertices); use the MST heuristic for larger instances");
  if (k == 1) return {};

  std::vector<PathTable> paths;
  paths.reserve(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) paths.push_back(dijkstra_from(g, v));

  for (VertexId t : terminals)
    if (paths[static_cast<std::size_t>(terminals[0])].dist[static_cast<std::size_t>(t)] == kInf)
      throw InfeasibleError("terminal " + std::to_string(t) +
                            " is disconnected from terminal " +
                            std::to_string(terminals[0]));

  // dp[mask][v]: cheapest tree containing terminal subset `mask` and vertex v.
  const int full = (1 << k) - 1;
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(full) + 1,
                                      std::vector<double>(static_cast<std::size_t>(n), kInf));
  // Reconstruction: merge of two submasks at v, or growth from another vertex.
  struct Choice {
    int merge_submask = 0;   // nonzero: split at v into submask and mask^submask
    VertexId grow_from = -1; // otherwise: pulled from this vertex, -1 = base case
  };
  std::vector<std::vector<Choice>> choice(
      static_cast<std::size_t>(full) + 1,
      std::vector<Choice>(static_cast<std::size_t>(n)));

  for (int i = 0; i < k; ++i) {
    const PathTable& table = paths[static_cast<std::size_t>(terminals[static_cast<std::size_t>(i)])];
    for (VertexId v = 0; v < n; ++v)
      dp[static_cast<std::size_t>(1 << i)][static_cast<std::size_t>(v)] =
          table.dist[static_cast<std::size_t>(v)];
  }

  for (int mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;  // singletons are base cases
    auto& row = dp[static_cast<std::size_t>(mask)];
    auto& choice_row = choice[static_cast<std::size_t>(mask)];

    for (VertexId v = 0; v < n; ++v) {
      for (int sub = (mask - 1) & mask; sub > (mask ^ sub); sub = (sub - 1) & mask) {
        double candidate = dp[static_cast<std::size_t>(sub)][static_cast<std::size_t>(v)] +
                           dp[static_cast<std::size_t>(mask ^ sub)][static_cast<std::size_t>(v)];
        if (candidate < row[static_cast<std::size_t>(v)]) {
          row[static_cast<std::size_t>(v)] = candidate;
          choice_row[static_cast<std::size_t>(v)] = Choice{sub, -1};
        }
      }
    }

    // One metric-closure relaxation pass: distances are already transitive.
    for (VertexId v = 0; v < n; ++v) {
      for (VertexId u = 0; u < n; ++u) {
        if (u == v) continue;
        double candidate = dp[static_cast<std::size_t>(mask)][static_cast<std::size_t>(u)] +
                           paths[static_cast<std::size_t>(u)].dist[static_cast<std::size_t>(v)];
        if (candidate < row[static_cast<std::size_t>(v)]) {
          row[static_cast<std::size_t>(v)] = candidate;
          choice_row[static_cast<std::size_t>(v)] = Choice{0, u};
        }
      }
    }
  }

  // Expand the DP structure into graph edges.
  std::vector<char> in_solution(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<std::pair<int, VertexId>> stack{{full, terminals[0]}};
  while (!stack.empty()) {
    auto [mask, v] = stack.back();
    stack.pop_back();
    if ((mask & (mask - 1)) == 0) {
      // Shortest path from the singleton terminal to v.
      int i = 0;
      while (!(mask & (1 << i))) ++i;
      const PathTable& table = paths[static_cast<std::size_t>(terminals[static_cast<std::size_t>(i)])];
      VertexId cur = v;
      while (table.parent_edge[static_cast<std::size_t>(cur)] != -1) {
        EdgeId e = table.parent_edge[static_cast<std::size_t>(cur)];
        in_solution[static_cast<std::size_t>(e)] = 1;
        cur = g.other_endpoint(e, cur);
      }
      continue;
    }
    const Choice& c = choice[static_cast<std::size_t>(mask)][static_cast<std::size_t>(v)];
    if (c.grow_from >= 0) {
      const PathTable& table = paths[static_cast<std::size_t>(c.grow_from)];
      VertexId cur = v;
      while (table.parent_edge[static_cast<std::size_t>(cur)] != -1) {
        EdgeId e = table.parent_edge[static_cast<std::size_t>(cur)];
        in_solution[static_cast<std::size_t>(e)] = 1;
        cur = g.other_endpoint(e, cur);
      }
      stack.emplace_back(mask, c.grow_from);
    } else {
      stack.emplace_back(c.merge_submask, v);
      stack.emplace_back(mask ^ c.merge_submask, v);
    }
  }

  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in_solution[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

namespace {

struct CoverSearch {
  const Graph& g;
  std::span<const double> weight;
  std::vector<char> in_cover;
  double current_weight = 0.0;
  double best_weight = kInf;
  std::vector<char> best;

  explicit CoverSearch(const VertexWeightedGraph& vg)
      : g(vg.graph), weight(vg.vertex_weight),
        in_cover(static_cast<std::size_t>(vg.graph.vertex_count()), 0) {}

  void take(VertexId v, std::vector<VertexId>& added) {
    if (in_cover[static_cast<std::size_t>(v)]) return;
    in_cover[static_cast<std::size_t>(v)] = 1;
    current_weight += weight[static_cast<std::size_t>(v)];
    added.push_back(v);
  }

  void undo(const std::vector<VertexId>& added) {
    for (VertexId v : added) {
      in_cover[static_cast<std::size_t>(v)] = 0;
      current_weight -= weight[static_cast<std::size_t>(v)];
    }
  }

  void recurse(EdgeId from) {
    if (current_weight >= best_weight) return;
    EdgeId uncovered = -1;
    for (EdgeId e = from; e < g.edge_count(); ++e) {
      const Edge& ed = g.edge(e);
      if (!in_cover[static_cast<std::size_t>(ed.u)] &&
          !in_cover[static_cast<std::size_t>(ed.v)]) {
        uncovered = e;
        break;
      }
    }
    if (uncovered == -1) {
      best_weight = current_weight;
      best = in_cover;
      return;
    }
    const Edge& ed = g.edge(uncovered);

    // Branch 1: u joins the cover.
    std::vector<VertexId> added;
    take(ed.u, added);
    recurse(uncovered);
    undo(added);

    // Branch 2: u stays out, so every neighbor of u joins.
    added.clear();
    for (EdgeId e : g.incident(ed.u)) take(g.other_endpoint(e, ed.u), added);
    recurse(uncovered);
    undo(added);
  }
};

}  // namespace

ItemSet exact_vc(const VertexWeightedGraph& g) {
  if (g.graph.vertex_count() > kMaxCoverVertices)
    throw OracleLimitError("exact_vc guard exceeded (" +
                           std::to_string(g.graph.vertex_count()) + " vertices)");
  if (static_cast<int>(g.vertex_weight.size()) != g.graph.vertex_count())
    throw std::invalid_argument("vertex weight array length mismatch");

  CoverSearch search(g);
  search.recurse(0);

  ItemSet out;
  for (VertexId v = 0; v < g.graph.vertex_count(); ++v)
    if (search.best[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

ItemSet exact_is(const VertexWeightedGraph& g) {
  ItemSet cover = exact_vc(g);
  ItemSet out;
  std::size_t ci = 0;
  for (VertexId v = 0; v < g.graph.vertex_count(); ++v) {
    if (ci < cover.size() && cover[ci] == v) {
      ++ci;
    } else {
      out.push_back(v);
    }
  }
  return out;
}

namespace {

bool sizes_integral(const KnapsackInstance& inst) {
  for (double s : inst.size)
    if (s != std::floor(s)) return false;
  return true;
}

ItemSet knapsack_dp(const KnapsackInstance& inst) {
  const int n = inst.item_count();
  auto capacity = static_cast<long long>(std::floor(inst.capacity));
  if (capacity < 0) capacity = 0;
  const auto width = static_cast<std::size_t>(capacity) + 1;

  // dp[i][c]: best worth using items i.. with remaining capacity c.
  std::vector<std::vector<double>> dp(static_cast<std::size_t>(n) + 1,
                                      std::vector<double>(width, 0.0));
  for (int i = n - 1; i >= 0; --i) {
    auto size_i = static_cast<long long>(inst.size[static_cast<std::size_t>(i)]);
    for (long long c = 0; c <= capacity; ++c) {
      double skip = dp[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(c)];
      double take = -1.0;
      if (size_i <= c)
        take = inst.worth[static_cast<std::size_t>(i)] +
               dp[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(c - size_i)];
      dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = std::max(skip, take);
    }
  }

  // Reconstruction preferring exclusion on ties.
  ItemSet out;
  long long c = capacity;
  for (int i = 0; i < n; ++i) {
    double skip = dp[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(c)];
    if (dp[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == skip) continue;
    out.push_back(i);
    c -= static_cast<long long>(inst.size[static_cast<std::size_t>(i)]);
  }
  return out;
}

ItemSet knapsack_enumerate(const KnapsackInstance& inst) {
  const int n = inst.item_count();
  double best_worth = -1.0;
  unsigned best_mask = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    double size = 0.0;
    double worth = 0.0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        size += inst.size[static_cast<std::size_t>(i)];
        worth += inst.worth[static_cast<std::size_t>(i)];
      }
    }
    if (size <= inst.capacity && worth > best_worth) {
      best_worth = worth;
      best_mask = mask;
    }
  }
  ItemSet out;
  for (int i = 0; i < n; ++i)
    if (best_mask & (1u << i)) out.push_back(i);
  return out;
}

}  // namespace

ItemSet exact_knapsack(const KnapsackInstance& inst) {
  inst.validate();
  const int n = inst.item_count();
  if (sizes_integral(inst)) {
    auto capacity = static_cast<long long>(std::floor(std::min(
        inst.capacity, inst.total_size())));
    if (capacity >= 0 &&
        static_cast<long long>(n + 1) * (capacity + 1) <= 2'000'000)
      return knapsack_dp(inst);
  }
  if (n > kMaxKnapsackItems)
    throw OracleLimitError("exact_knapsack guard exceeded (" + std::to_string(n) +
                           " items with non-integral sizes)");
  return knapsack_enumerate(inst);
}

}  // namespace selpred
