#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "selpred/blackbox.hpp"

namespace selpred {

struct KnapsackInstance {
  std::vector<double> worth;  // value of each item, >= 0
  std::vector<double> size;   // size of each item, > 0
  double capacity = 0.0;

  int item_count() const { return static_cast<int>(worth.size()); }
  double total_size() const;
  void validate() const;
};

// Greedy 2-approximation for the covering problem complementary to knapsack:
// pick a set of total size at least `target` minimizing total worth. Items
// are scanned in increasing worth-to-size ratio (ties by id); an item that
// would push the running set to the target is recorded as a candidate
// solution instead of joining the set, and the cheapest candidate wins (ties
// by earliest recorded). target <= 0 returns the empty set; a target above
// the total size throws InfeasibleError.
ItemSet complementary_greedy(std::span<const double> worth, std::span<const double> size,
                             double target);

// Prediction-augmented knapsack via the maximization transform with
// complementary_greedy as the complementary solver (ratio 2, target
// total_size - capacity). If everything fits, returns all items.
ItemSet knapsack_with_predictions(const KnapsackInstance& inst, const ItemSet& predicted);

bool is_feasible_packing(const KnapsackInstance& inst, const ItemSet& s);

// Baseline for robustified knapsack: fills the capacity greedily by
// worth-to-size ratio descending (ties by id), skipping items that overflow.
ItemSet greedy_packing(const KnapsackInstance& inst);

// File format: first line "n c", then n lines "w_i s_i" (1-based item ids are
// implicit in line order).
KnapsackInstance parse_knapsack(std::istream& in);
KnapsackInstance parse_knapsack_text(const std::string& text);
std::string write_knapsack(const KnapsackInstance& inst);

}  // namespace selpred
