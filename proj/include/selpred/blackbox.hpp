#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace selpred {

// Sorted vector of distinct item ids; the canonical set representation used
// across the library.
using ItemSet = std::vector<int>;

// Sorts, deduplicates, and bounds-checks a set of item ids. Throws
// std::out_of_range on ids outside [0, item_count).
ItemSet normalize_item_set(std::span<const int> items, int item_count);

double set_weight(std::span<const double> weight, const ItemSet& items);

// Items of `a` not in `b`; both sorted.
ItemSet set_minus(const ItemSet& a, const ItemSet& b);

// A selection problem instance: n items with non-negative weights. The
// feasible family is implicit in the solver used on the instance.
struct SelectionInstance {
  std::vector<double> weight;

  int item_count() const { return static_cast<int>(weight.size()); }
};

// A weight-parametrized approximation algorithm together with its ratio and
// feasibility predicate. `solve` must return a feasible set for any
// non-negative weight vector of the instance's length.
struct ApproxSolver {
  std::function<ItemSet(const std::vector<double>&)> solve;
  double ratio = 1.0;
  std::function<bool(const ItemSet&)> feasible;
};

// Advice given to the transforms: an arbitrary set of item ids, not
// necessarily feasible.
struct Prediction {
  ItemSet items;
};

// False-positive and false-negative weight of a prediction with respect to a
// reference solution.
struct PredictionError {
  double eta_plus = 0.0;
  double eta_minus = 0.0;
};

PredictionError prediction_error(const SelectionInstance& inst,
                                 const Prediction& predicted,
                                 const ItemSet& reference);

// Minimization transform: zeroes the weight of predicted items and runs the
// solver on the modified weights. The output is feasible and its weight under
// the original weights is at most w(X') + eta_plus + (ratio - 1) * eta_minus
// for every feasible X'.
ItemSet min_with_predictions(const SelectionInstance& inst, const ApproxSolver& solver,
                             const Prediction& predicted);

// Better of min_with_predictions and the plain solver run, by original
// weight; ties go to the prediction-augmented solution.
ItemSet robust_min(const SelectionInstance& inst, const ApproxSolver& solver,
                   const Prediction& predicted);

// Maximization transform: zeroes the weight of items outside the prediction,
// runs `comp_solver` on the complementary minimization problem to get Y, and
// returns the complement [n] \ Y. The output is feasible and its weight is at
// least w(X') - (ratio - 1) * eta_plus - eta_minus for every feasible X'.
ItemSet max_with_predictions(const SelectionInstance& inst,
                             const ApproxSolver& comp_solver,
                             const Prediction& predicted);

// Heavier of max_with_predictions and a conventional baseline heuristic for
// the maximization problem; ties go to the prediction-augmented solution.
ItemSet robust_max(const SelectionInstance& inst, const ApproxSolver& comp_solver,
                   const ApproxSolver& baseline_solver, const Prediction& predicted);

// Rounds a per-item confidence vector to a set: item i is included with
// probability confidence[i], independently, using the seeded portable PRNG.
Prediction round_confidence(std::span<const double> confidence, std::uint64_t seed);

}  // namespace selpred
