#include "selpred/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "selpred/blackbox.hpp"
#include "selpred/errors.hpp"

namespace selpred {

namespace {

std::vector<VertexId> checked_terminals(const SteinerInstance& inst) {
  std::vector<VertexId> terminals = inst.terminals;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  if (terminals.empty()) throw std::invalid_argument("instance has no terminals");
  if (terminals.front() < 0 || terminals.back() >= inst.graph.vertex_count())
    throw std::invalid_argument("terminal id out of range");
  return terminals;
}

// Walks parent_edge links from v to its region's terminal, collecting edges.
void collect_witness_path(const Graph& g, const ShortestPathForest& forest, VertexId v,
                          std::vector<char>& in_solution) {
  while (forest.parent_edge[static_cast<std::size_t>(v)] != -1) {
    EdgeId e = forest.parent_edge[static_cast<std::size_t>(v)];
    in_solution[static_cast<std::size_t>(e)] = 1;
    v = g.other_endpoint(e, v);
  }
}

void prune_nonterminal_leaves(const Graph& g, std::span<const VertexId> terminals,
                              std::vector<char>& in_solution) {
  const int n = g.vertex_count();
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!in_solution[static_cast<std::size_t>(e)]) continue;
    ++degree[static_cast<std::size_t>(g.edge(e).u)];
    ++degree[static_cast<std::size_t>(g.edge(e).v)];
  }
  std::vector<char> is_terminal(static_cast<std::size_t>(n), 0);
  for (VertexId t : terminals) is_terminal[static_cast<std::size_t>(t)] = 1;

  std::deque<VertexId> leaves;
  for (VertexId v = 0; v < n; ++v)
    if (degree[static_cast<std::size_t>(v)] == 1 && !is_terminal[static_cast<std::size_t>(v)])
      leaves.push_back(v);

  while (!leaves.empty()) {
    VertexId v = leaves.front();
    leaves.pop_front();
    if (degree[static_cast<std::size_t>(v)] != 1) continue;
    for (EdgeId e : g.incident(v)) {
      if (!in_solution[static_cast<std::size_t>(e)]) continue;
      in_solution[static_cast<std::size_t>(e)] = 0;
      VertexId u = g.other_endpoint(e, v);
      --degree[static_cast<std::size_t>(v)];
      --degree[static_cast<std::size_t>(u)];
      if (degree[static_cast<std::size_t>(u)] == 1 &&
          !is_terminal[static_cast<std::size_t>(u)])
        leaves.push_back(u);
      break;
    }
  }
}

}  // namespace

SteinerSolution mehlhorn(const SteinerInstance& inst, std::span<const double> edge_weights,
                         const SteinerOptions& options) {
  const Graph& g = inst.graph;
  if (static_cast<int>(edge_weights.size()) != g.edge_count())
    throw std::invalid_argument("edge weight array length mismatch");
  std::vector<VertexId> terminals = checked_terminals(inst);
  const int k = static_cast<int>(terminals.size());

  SteinerSolution solution;
  if (k == 1) return solution;

  ShortestPathForest forest = multi_source_dijkstra(g, terminals, edge_weights);

  // Dense index per terminal for the terminal-graph ground set.
  std::vector<int> dense(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i < k; ++i) dense[static_cast<std::size_t>(terminals[static_cast<std::size_t>(i)])] = i;

  // One candidate per graph edge whose endpoints lie in different regions;
  // its cost is the full terminal-to-terminal path through that edge.
  std::vector<MstCandidate> candidates;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    VertexId su = forest.nearest_source[static_cast<std::size_t>(ed.u)];
    VertexId sv = forest.nearest_source[static_cast<std::size_t>(ed.v)];
    if (su == -1 || sv == -1 || su == sv) continue;
    double cost = forest.dist[static_cast<std::size_t>(ed.u)] +
                  edge_weights[static_cast<std::size_t>(e)] +
                  forest.dist[static_cast<std::size_t>(ed.v)];
    candidates.push_back(MstCandidate{cost, e, dense[static_cast<std::size_t>(su)],
                                      dense[static_cast<std::size_t>(sv)]});
  }

  std::vector<std::size_t> chosen = kruskal_mst(k, candidates);
  if (static_cast<int>(chosen.size()) != k - 1) {
    DisjointSets sets(k);
    for (std::size_t idx : chosen) sets.unite(candidates[idx].u, candidates[idx].v);
    for (int i = 1; i < k; ++i)
      if (sets.find(i) != sets.find(0))
        throw InfeasibleError("terminal " +
                              std::to_string(terminals[static_cast<std::size_t>(i)]) +
                              " is disconnected from terminal " +
                              std::to_string(terminals[0]));
  }

  std::vector<char> in_solution(static_cast<std::size_t>(g.edge_count()), 0);
  for (std::size_t idx : chosen) {
    EdgeId e = static_cast<EdgeId>(candidates[idx].key);
    in_solution[static_cast<std::size_t>(e)] = 1;
    collect_witness_path(g, forest, g.edge(e).u, in_solution);
    collect_witness_path(g, forest, g.edge(e).v, in_solution);
    solution.closure_mst_costs.push_back(candidates[idx].cost);
  }
  std::sort(solution.closure_mst_costs.begin(), solution.closure_mst_costs.end());

  if (options.prune) prune_nonterminal_leaves(g, terminals, in_solution);

  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (in_solution[static_cast<std::size_t>(e)]) solution.edges.push_back(e);
  solution.weight_original = g.total_weight(solution.edges);
  return solution;
}

SteinerSolution mehlhorn(const SteinerInstance& inst, const SteinerOptions& options) {
  std::vector<double> w;
  w.reserve(inst.graph.edges().size());
  for (const Edge& e : inst.graph.edges()) w.push_back(e.weight);
  return mehlhorn(inst, w, options);
}

namespace {

std::vector<double> scaled_weights(const Graph& g, std::span<const EdgeId> predicted,
                                   double alpha) {
  std::vector<double> w;
  w.reserve(g.edges().size());
  for (const Edge& e : g.edges()) w.push_back(e.weight);
  const bool infinite = std::isinf(alpha);
  for (EdgeId e : predicted) {
    if (e < 0 || e >= g.edge_count())
      throw std::out_of_range("predicted edge id out of range");
    auto i = static_cast<std::size_t>(e);
    w[i] = infinite ? 0.0 : w[i] / alpha;
  }
  return w;
}

}  // namespace

SteinerSolution alps(const SteinerInstance& inst, std::span<const EdgeId> predicted,
                     double alpha, const SteinerOptions& options) {
  if (!(alpha >= 1.0))
    throw std::invalid_argument("alpha must be >= 1 (got " + std::to_string(alpha) + ")");
  std::vector<double> w = scaled_weights(inst.graph, predicted, alpha);
  SteinerSolution solution = mehlhorn(inst, w, options);
  // Weight is always reported under the original weights.
  solution.weight_original = inst.graph.total_weight(solution.edges);
  return solution;
}

std::vector<double> alpha_search_grid(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  int max_exponent = static_cast<int>(
      std::ceil(std::log(1.0 / epsilon) / std::log(1.0 + epsilon)));
  std::vector<double> grid;
  double alpha = 1.0;
  for (int i = 0; i <= max_exponent; ++i) {
    grid.push_back(alpha);
    alpha *= 1.0 + epsilon;
  }
  return grid;
}

AlphaSearchResult alpha_search_detailed(const SteinerInstance& inst,
                                        std::span<const EdgeId> predicted, double epsilon,
                                        const SteinerOptions& options) {
  AlphaSearchResult best;
  bool have_best = false;
  for (double alpha : alpha_search_grid(epsilon)) {
    SteinerSolution candidate = alps(inst, predicted, alpha, options);
    if (!have_best || candidate.weight_original < best.solution.weight_original) {
      best.solution = std::move(candidate);
      best.alpha = alpha;
      have_best = true;
    }
  }
  return best;
}

SteinerSolution alpha_search(const SteinerInstance& inst, std::span<const EdgeId> predicted,
                             double epsilon, const SteinerOptions& options) {
  return alpha_search_detailed(inst, predicted, epsilon, options).solution;
}

double steiner_bound_rhs(const SteinerInstance& inst, std::span<const EdgeId> predicted,
                         std::span<const EdgeId> reference, double alpha) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("alpha must be >= 1");
  std::vector<VertexId> terminals = checked_terminals(inst);
  if (!spans_terminals(inst.graph, reference, terminals))
    throw std::invalid_argument("reference solution does not span the terminals");

  const int m = inst.graph.edge_count();
  ItemSet pred = normalize_item_set(std::span<const int>(predicted.data(), predicted.size()), m);
  ItemSet ref = normalize_item_set(std::span<const int>(reference.data(), reference.size()), m);

  std::vector<double> weights;
  weights.reserve(inst.graph.edges().size());
  for (const Edge& e : inst.graph.edges()) weights.push_back(e.weight);

  ItemSet false_positives = set_minus(pred, ref);
  double eta_plus = set_weight(weights, false_positives);
  double eta_minus = set_weight(weights, set_minus(ref, pred));
  double ref_weight = set_weight(weights, ref);

  // Connection costs of the terminal-closure MST under the original weights;
  // sum of the min{k-1, |predicted \ reference|} largest.
  SteinerSolution base = mehlhorn(inst);
  std::size_t take = std::min(base.closure_mst_costs.size(), false_positives.size());
  double cap_sum = 0.0;
  for (std::size_t i = 0; i < take; ++i)
    cap_sum += base.closure_mst_costs[base.closure_mst_costs.size() - 1 - i];

  double inv_alpha = std::isinf(alpha) ? 0.0 : 1.0 / alpha;
  double cap = cap_sum == 0.0
                   ? 0.0
                   : (std::isinf(alpha) ? std::numeric_limits<double>::infinity()
                                        : (alpha - 1.0) * cap_sum);
  return (1.0 + inv_alpha) * ref_weight + (1.0 - inv_alpha) * eta_minus +
         std::min(eta_plus, cap);
}

std::pair<SteinerInstance, std::vector<EdgeId>> tight_example(int k, double eps,
                                                              double beta) {
  if (k < 3) throw std::invalid_argument("tight_example: k must be >= 3");
  if (!(eps > 0.0)) throw std::invalid_argument("tight_example: eps must be > 0");
  if (!(beta > 2.0)) throw std::invalid_argument("tight_example: beta must be > 2");

  SteinerInstance inst;
  inst.name = "tight-k" + std::to_string(k);
  inst.graph = Graph(k + 1);
  const VertexId hub = k;

  // Cycle edges 0..k-2 weigh 2; edge k-1 closes the cycle with weight beta.
  for (int i = 0; i + 1 < k; ++i) inst.graph.add_edge(i, i + 1, 2.0);
  EdgeId beta_edge = inst.graph.add_edge(k - 1, 0, beta);
  // Spokes k..2k-1 connect the hub to each cycle vertex.
  std::vector<EdgeId> spokes;
  for (int i = 0; i < k; ++i) spokes.push_back(inst.graph.add_edge(hub, i, 1.0 + eps));

  for (int i = 0; i < k; ++i) inst.terminals.push_back(i);

  std::vector<EdgeId> predicted;
  predicted.push_back(beta_edge);
  for (int i = 1; i < k; ++i) predicted.push_back(spokes[static_cast<std::size_t>(i)]);
  std::sort(predicted.begin(), predicted.end());
  return {std::move(inst), std::move(predicted)};
}

}  // namespace selpred
