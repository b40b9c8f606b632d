#pragma once

#include <span>
#include <utility>
#include <vector>

#include "selpred/stp.hpp"

namespace selpred {

struct SteinerSolution {
  std::vector<EdgeId> edges;      // sorted edge ids, spans the terminals
  double weight_original = 0.0;   // total weight under the instance's weights
  // The k-1 terminal connection costs of the spanning structure, sorted
  // ascending, under the weights the construction ran with.
  std::vector<double> closure_mst_costs;
};

struct SteinerOptions {
  // Iteratively removes non-terminal degree-1 vertices from the path union.
  // Turning this off reproduces the raw union of connection paths.
  bool prune = true;
};

// MST heuristic in Mehlhorn's近-linear formulation: terminal Voronoi regions
// via multi-source shortest paths, a terminal graph with one candidate per
// region-crossing edge, its MST, and the union of the witness paths. Output
// spans the terminals and weighs at most twice the optimum under
// `edge_weights`. Throws InfeasibleError if some terminal is disconnected.
SteinerSolution mehlhorn(const SteinerInstance& inst, std::span<const double> edge_weights,
                         const SteinerOptions& options = {});
SteinerSolution mehlhorn(const SteinerInstance& inst, const SteinerOptions& options = {});

// Prediction-augmented Steiner tree: divides the weight of predicted edges by
// alpha (alpha = infinity pins them to exactly zero), runs the MST heuristic
// under the scaled weights, and reports the result under the original
// weights. alpha must be >= 1. At alpha = 1 the output equals mehlhorn's.
SteinerSolution alps(const SteinerInstance& inst, std::span<const EdgeId> predicted,
                     double alpha, const SteinerOptions& options = {});

// Runs alps for alpha = (1+epsilon)^i, i = 0..ceil(log_{1+epsilon}(1/epsilon)),
// and returns the lightest solution (ties toward the smaller exponent).
// epsilon must lie in (0, 1).
SteinerSolution alpha_search(const SteinerInstance& inst, std::span<const EdgeId> predicted,
                             double epsilon, const SteinerOptions& options = {});

struct AlphaSearchResult {
  SteinerSolution solution;
  double alpha = 1.0;  // grid point that produced the solution
};

AlphaSearchResult alpha_search_detailed(const SteinerInstance& inst,
                                        std::span<const EdgeId> predicted, double epsilon,
                                        const SteinerOptions& options = {});

// The geometric alpha grid used by alpha_search.
std::vector<double> alpha_search_grid(double epsilon);

// Evaluates the performance bound certified for alps at the given alpha
// against a reference solution (which must span the terminals):
//   (1 + 1/a) w(ref) + (1 - 1/a) eta_minus + min{eta_plus, (a-1) * C}
// where C sums the min{k-1, |predicted \ ref|} largest connection costs of
// the terminal-closure MST under the original weights.
double steiner_bound_rhs(const SteinerInstance& inst, std::span<const EdgeId> predicted,
                         std::span<const EdgeId> reference, double alpha);

// Worst-case family for the alpha-scaled heuristic: k terminals on a cycle
// around one non-terminal hub. Cycle edges weigh 2 except one of weight beta;
// spokes weigh 1+eps. The prediction contains the beta edge and all spokes
// but the first. Requires k >= 3, eps > 0, beta > 2.
std::pair<SteinerInstance, std::vector<EdgeId>> tight_example(int k, double eps,
                                                              double beta);

}  // namespace selpred
