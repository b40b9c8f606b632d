#pragma once

#include <span>
#include <vector>

#include "selpred/blackbox.hpp"
#include "selpred/graph.hpp"

namespace selpred {

struct VertexWeightedGraph {
  Graph graph;
  std::vector<double> vertex_weight;
};

// Local-ratio 2-approximation for min-weight vertex cover. Edges are
// processed in edge-id order; for each edge the smaller residual of its
// endpoints is subtracted from both. The cover consists of every vertex with
// residual zero that is incident to at least one edge.
ItemSet vc_local_ratio(const Graph& g, std::span<const double> vertex_weight);
ItemSet vc_local_ratio(const VertexWeightedGraph& g);

// Prediction-augmented vertex cover: min_with_predictions with the
// local-ratio solver (ratio 2).
ItemSet vc_with_predictions(const VertexWeightedGraph& g, const ItemSet& predicted);

// Prediction-augmented independent set: max_with_predictions with the
// local-ratio cover solver as the complementary solver (ratio 2).
ItemSet is_with_predictions(const VertexWeightedGraph& g, const ItemSet& predicted);

bool is_vertex_cover(const Graph& g, const ItemSet& s);
bool is_independent_set(const Graph& g, const ItemSet& s);

// Simple baseline for robustified independent set: scans vertices by
// (weight descending, id ascending) and keeps those with no chosen neighbor.
ItemSet greedy_independent_set(const VertexWeightedGraph& g);

// ApproxSolver views over the local-ratio algorithm, for use with the
// generic transforms. `g` must outlive the returned solver.
ApproxSolver vc_solver(const Graph& g);
ApproxSolver vc_as_complement_solver(const Graph& g);

}  // namespace selpred
