#include "selpred/vertex_cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace selpred {

ItemSet vc_local_ratio(const Graph& g, std::span<const double> vertex_weight) {
  if (static_cast<int>(vertex_weight.size()) != g.vertex_count())
    throw std::invalid_argument("vertex weight array length mismatch");

  std::vector<double> residual(vertex_weight.begin(), vertex_weight.end());
  for (const Edge& e : g.edges()) {
    double m = std::min(residual[static_cast<std::size_t>(e.u)],
                        residual[static_cast<std::size_t>(e.v)]);
    residual[static_cast<std::size_t>(e.u)] -= m;
    residual[static_cast<std::size_t>(e.v)] -= m;
  }

  ItemSet cover;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (residual[static_cast<std::size_t>(v)] == 0.0 && !g.incident(v).empty())
      cover.push_back(v);
  return cover;
}

ItemSet vc_local_ratio(const VertexWeightedGraph& g) {
  return vc_local_ratio(g.graph, g.vertex_weight);
}

ApproxSolver vc_solver(const Graph& g) {
  ApproxSolver solver;
  solver.ratio = 2.0;
  solver.solve = [&g](const std::vector<double>& w) { return vc_local_ratio(g, w); };
  solver.feasible = [&g](const ItemSet& s) { return is_vertex_cover(g, s); };
  return solver;
}

// Complementary solver for max-weight independent set: minimize the weight of
// a removed set Y whose complement is independent, i.e. Y is a vertex cover.
ApproxSolver vc_as_complement_solver(const Graph& g) {
  return vc_solver(g);
}

ItemSet vc_with_predictions(const VertexWeightedGraph& g, const ItemSet& predicted) {
  SelectionInstance inst{g.vertex_weight};
  return min_with_predictions(inst, vc_solver(g.graph), Prediction{predicted});
}

ItemSet is_with_predictions(const VertexWeightedGraph& g, const ItemSet& predicted) {
  SelectionInstance inst{g.vertex_weight};
  return max_with_predictions(inst, vc_as_complement_solver(g.graph),
                              Prediction{predicted});
}

bool is_vertex_cover(const Graph& g, const ItemSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  for (const Edge& e : g.edges())
    if (!in[static_cast<std::size_t>(e.u)] && !in[static_cast<std::size_t>(e.v)])
      return false;
  return true;
}

bool is_independent_set(const Graph& g, const ItemSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int v : s) in[static_cast<std::size_t>(v)] = 1;
  for (const Edge& e : g.edges())
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)])
      return false;
  return true;
}

ItemSet greedy_independent_set(const VertexWeightedGraph& g) {
  std::vector<VertexId> order(static_cast<std::size_t>(g.graph.vertex_count()));
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<VertexId>(i);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    double wa = g.vertex_weight[static_cast<std::size_t>(a)];
    double wb = g.vertex_weight[static_cast<std::size_t>(b)];
    if (wa != wb) return wa > wb;
    return a < b;
  });

  std::vector<char> chosen(order.size(), 0);
  std::vector<char> blocked(order.size(), 0);
  for (VertexId v : order) {
    if (blocked[static_cast<std::size_t>(v)]) continue;
    chosen[static_cast<std::size_t>(v)] = 1;
    for (EdgeId e : g.graph.incident(v))
      blocked[static_cast<std::size_t>(g.graph.other_endpoint(e, v))] = 1;
  }

  ItemSet out;
  for (VertexId v = 0; v < g.graph.vertex_count(); ++v)
    if (chosen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

}  // namespace selpred
