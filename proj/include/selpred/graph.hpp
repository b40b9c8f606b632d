#pragma once

#include <limits>
#include <span>
#include <vector>

namespace selpred {

using VertexId = int;
using EdgeId = int;

constexpr double kInfiniteDistance = std::numeric_limits<double>::infinity();

struct Edge {
  VertexId u;
  VertexId v;
  double weight;
};

// Undirected weighted multigraph. Parallel edges are allowed and keep their
// own edge ids (insertion order); self-loops are rejected. Instances are
// built once and treated as immutable afterwards, so all algorithms take
// `const Graph&` and are safe to run concurrently on shared graphs.
class Graph {
public:
  Graph() = default;
  explicit Graph(int vertex_count);

  // Returns the id of the new edge. Throws std::invalid_argument on
  // self-loops, out-of-range endpoints, or negative/non-finite weights.
  EdgeId add_edge(VertexId u, VertexId v, double weight);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Ids of edges incident to v, in insertion order.
  std::span<const EdgeId> incident(VertexId v) const {
    return incident_[static_cast<std::size_t>(v)];
  }

  VertexId other_endpoint(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  double total_weight(std::span<const EdgeId> edge_ids) const;

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Result of a multi-source shortest-path computation. For unreachable
// vertices dist is infinite and nearest_source/parent_edge are -1. Sources
// have dist 0, themselves as nearest_source, and no parent edge.
struct ShortestPathForest {
  std::vector<double> dist;
  std::vector<VertexId> nearest_source;
  std::vector<EdgeId> parent_edge;
};

// Dijkstra from a set of sources under the supplied per-edge weights (which
// may differ from the graph's stored weights). Each vertex ends up with its
// exact distance to the closest source; distance ties resolve to the smaller
// source id, and remaining ties in heap extraction to the smaller vertex id.
// Throws std::invalid_argument if sources is empty or weights has the wrong
// length.
ShortestPathForest multi_source_dijkstra(const Graph& g,
                                         std::span<const VertexId> sources,
                                         std::span<const double> weights);

// Convenience overload using the graph's own weights.
ShortestPathForest multi_source_dijkstra(const Graph& g,
                                         std::span<const VertexId> sources);

// Candidate edge for kruskal_mst. `key` orders candidates with equal cost;
// callers use it to pin deterministic outputs (typically an edge id).
struct MstCandidate {
  double cost;
  long long key;
  int u;
  int v;
};

// Minimum spanning forest over a ground set of `ground_size` vertices.
// Candidates are considered in (cost, key) ascending order; returns indices
// into `candidates` of the chosen forest edges, in that order.
std::vector<std::size_t> kruskal_mst(int ground_size,
                                     std::span<const MstCandidate> candidates);

// True iff all terminals lie in one connected component of the subgraph
// formed by `edge_subset`. An empty terminal set spans trivially.
bool spans_terminals(const Graph& g, std::span<const EdgeId> edge_subset,
                     std::span<const VertexId> terminals);

// Union-find with union by rank and path compression.
class DisjointSets {
public:
  explicit DisjointSets(int n);
  int find(int a);
  // Returns false if a and b were already in the same set.
  bool unite(int a, int b);

private:
  std::vector<int> parent_;
  std::vector<int> rank_;
};

}  // namespace selpred
