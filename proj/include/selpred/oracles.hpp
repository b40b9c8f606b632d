#pragma once

#include <vector>

#include "selpred/knapsack.hpp"
#include "selpred/stp.hpp"
#include "selpred/vertex_cover.hpp"

namespace selpred {

// Exact solvers used as ground truth in tests and desk-scale experiments.
// They guard their instance sizes hard and throw OracleLimitError beyond the
// guard instead of silently taking forever.

// Dreyfus-Wagner dynamic program over terminal subsets. Guards: at most 10
// terminals and 60 vertices. Returns a minimum-weight terminal-spanning edge
// set; deterministic tie-breaking.
std::vector<EdgeId> exact_steiner(const SteinerInstance& inst);

// Branch and bound over edges. Guard: at most 20 vertices.
ItemSet exact_vc(const VertexWeightedGraph& g);

// Complement of exact_vc: w(IS) = w(V) - w(VC).
ItemSet exact_is(const VertexWeightedGraph& g);

// Classic DP by total size for integral sizes, subset enumeration otherwise.
// Guard for enumeration: at most 20 items.
ItemSet exact_knapsack(const KnapsackInstance& inst);

}  // namespace selpred
