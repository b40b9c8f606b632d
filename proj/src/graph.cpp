#include "selpred/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>

namespace selpred {

Graph::Graph(int vertex_count) : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  incident_.resize(static_cast<std::size_t>(vertex_count));
}

EdgeId Graph::add_edge(VertexId u, VertexId v, double weight) {
  if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
    throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                ", " + std::to_string(v) + ")");
  if (u == v)
    throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
  if (!(weight >= 0.0) || !std::isfinite(weight))
    throw std::invalid_argument("edge weight must be finite and non-negative");
  EdgeId id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{u, v, weight});
  incident_[static_cast<std::size_t>(u)].push_back(id);
  incident_[static_cast<std::size_t>(v)].push_back(id);
  return id;
}

double Graph::total_weight(std::span<const EdgeId> edge_ids) const {
  double sum = 0.0;
  for (EdgeId e : edge_ids) sum += edge(e).weight;
  return sum;
}

ShortestPathForest multi_source_dijkstra(const Graph& g,
                                         std::span<const VertexId> sources,
                                         std::span<const double> weights) {
  if (sources.empty()) throw std::invalid_argument("dijkstra: empty source set");
  if (static_cast<int>(weights.size()) != g.edge_count())
    throw std::invalid_argument("dijkstra: weight array length mismatch");
  for (double w : weights)
    if (!(w >= 0.0)) throw std::invalid_argument("dijkstra: negative weight");

  const int n = g.vertex_count();
  ShortestPathForest out;
  out.dist.assign(static_cast<std::size_t>(n), kInfiniteDistance);
  out.nearest_source.assign(static_cast<std::size_t>(n), -1);
  out.parent_edge.assign(static_cast<std::size_t>(n), -1);

  std::vector<char> is_source(static_cast<std::size_t>(n), 0);

  // Heap ordered by (dist, source id, vertex id); the source component makes
  // distance ties settle on the smaller source id even across zero-weight
  // edges.
  using HeapEntry = std::tuple<double, VertexId, VertexId>;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> heap;

  for (VertexId s : sources) {
    if (s < 0 || s >= n) throw std::invalid_argument("dijkstra: source out of range");
    is_source[static_cast<std::size_t>(s)] = 1;
    out.dist[static_cast<std::size_t>(s)] = 0.0;
    out.nearest_source[static_cast<std::size_t>(s)] = s;
    heap.emplace(0.0, s, s);
  }

  std::vector<char> done(static_cast<std::size_t>(n), 0);
  while (!heap.empty()) {
    auto [d, src, u] = heap.top();
    heap.pop();
    auto ui = static_cast<std::size_t>(u);
    if (done[ui] || d != out.dist[ui] || src != out.nearest_source[ui]) continue;
    done[ui] = 1;
    for (EdgeId e : g.incident(u)) {
      VertexId v = g.other_endpoint(e, u);
      auto vi = static_cast<std::size_t>(v);
      if (is_source[vi]) continue;  // sources stay their own nearest source
      double nd = d + weights[static_cast<std::size_t>(e)];
      if (nd < out.dist[vi] ||
          (nd == out.dist[vi] && src < out.nearest_source[vi])) {
        out.dist[vi] = nd;
        out.nearest_source[vi] = src;
        out.parent_edge[vi] = e;
        heap.emplace(nd, src, v);
      }
    }
  }
  return out;
}

ShortestPathForest multi_source_dijkstra(const Graph& g,
                                         std::span<const VertexId> sources) {
  std::vector<double> w;
  w.reserve(g.edges().size());
  for (const Edge& e : g.edges()) w.push_back(e.weight);
  return multi_source_dijkstra(g, sources, w);
}

DisjointSets::DisjointSets(int n)
    : parent_(static_cast<std::size_t>(n)), rank_(static_cast<std::size_t>(n), 0) {
  for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
}

int DisjointSets::find(int a) {
  while (parent_[static_cast<std::size_t>(a)] != a) {
    parent_[static_cast<std::size_t>(a)] =
        parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(a)])];
    a = parent_[static_cast<std::size_t>(a)];
  }
  return a;
}

bool DisjointSets::unite(int a, int b) {
  int ra = find(a);
  int rb = find(b);
  if (ra == rb) return false;
  if (rank_[static_cast<std::size_t>(ra)] < rank_[static_cast<std::size_t>(rb)])
    std::swap(ra, rb);
  parent_[static_cast<std::size_t>(rb)] = ra;
  if (rank_[static_cast<std::size_t>(ra)] == rank_[static_cast<std::size_t>(rb)])
    ++rank_[static_cast<std::size_t>(ra)];
  return true;
}

std::vector<std::size_t> kruskal_mst(int ground_size,
                                     std::span<const MstCandidate> candidates) {
  std::vector<std::size_t> order(candidates.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const MstCandidate& ca = candidates[a];
    const MstCandidate& cb = candidates[b];
    if (ca.cost != cb.cost) return ca.cost < cb.cost;
    return ca.key < cb.key;
  });

  DisjointSets sets(ground_size);
  std::vector<std::size_t> chosen;
  for (std::size_t idx : order) {
    const MstCandidate& c = candidates[idx];
    if (sets.unite(c.u, c.v)) chosen.push_back(idx);
  }
  return chosen;
}

bool spans_terminals(const Graph& g, std::span<const EdgeId> edge_subset,
                     std::span<const VertexId> terminals) {
  if (terminals.size() <= 1) return true;
  DisjointSets sets(g.vertex_count());
  for (EdgeId e : edge_subset) sets.unite(g.edge(e).u, g.edge(e).v);
  int root = sets.find(terminals[0]);
  for (VertexId t : terminals)
    if (sets.find(t) != root) return false;
  return true;
}

}  // namespace selpred
