#include "selpred/blackbox.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "selpred/rng.hpp"

namespace selpred {

ItemSet normalize_item_set(std::span<const int> items, int item_count) {
  ItemSet out(items.begin(), items.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && (out.front() < 0 || out.back() >= item_count))
    throw std::out_of_range("item id out of range (item count " +
                            std::to_string(item_count) + ")");
  return out;
}

double set_weight(std::span<const double> weight, const ItemSet& items) {
  double sum = 0.0;
  for (int i : items) sum += weight[static_cast<std::size_t>(i)];
  return sum;
}

ItemSet set_minus(const ItemSet& a, const ItemSet& b) {
  ItemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PredictionError prediction_error(const SelectionInstance& inst,
                                 const Prediction& predicted,
                                 const ItemSet& reference) {
  ItemSet pred = normalize_item_set(predicted.items, inst.item_count());
  ItemSet ref = normalize_item_set(reference, inst.item_count());
  PredictionError err;
  err.eta_plus = set_weight(inst.weight, set_minus(pred, ref));
  err.eta_minus = set_weight(inst.weight, set_minus(ref, pred));
  return err;
}

ItemSet min_with_predictions(const SelectionInstance& inst, const ApproxSolver& solver,
                             const Prediction& predicted) {
  ItemSet pred = normalize_item_set(predicted.items, inst.item_count());
  std::vector<double> modified = inst.weight;
  for (int i : pred) modified[static_cast<std::size_t>(i)] = 0.0;
  return solver.solve(modified);
}

ItemSet robust_min(const SelectionInstance& inst, const ApproxSolver& solver,
                   const Prediction& predicted) {
  ItemSet augmented = min_with_predictions(inst, solver, predicted);
  ItemSet plain = solver.solve(inst.weight);
  double w_augmented = set_weight(inst.weight, augmented);
  double w_plain = set_weight(inst.weight, plain);
  return w_augmented <= w_plain ? augmented : plain;
}

ItemSet max_with_predictions(const SelectionInstance& inst,
                             const ApproxSolver& comp_solver,
                             const Prediction& predicted) {
  ItemSet pred = normalize_item_set(predicted.items, inst.item_count());
  std::vector<double> modified(inst.weight.size(), 0.0);
  for (int i : pred) modified[static_cast<std::size_t>(i)] = inst.weight[static_cast<std::size_t>(i)];
  ItemSet removed = comp_solver.solve(modified);

  ItemSet all(inst.weight.size());
  for (int i = 0; i < inst.item_count(); ++i) all[static_cast<std::size_t>(i)] = i;
  return set_minus(all, normalize_item_set(removed, inst.item_count()));
}

ItemSet robust_max(const SelectionInstance& inst, const ApproxSolver& comp_solver,
                   const ApproxSolver& baseline_solver, const Prediction& predicted) {
  ItemSet augmented = max_with_predictions(inst, comp_solver, predicted);
  ItemSet baseline = baseline_solver.solve(inst.weight);
  double w_augmented = set_weight(inst.weight, augmented);
  double w_baseline = set_weight(inst.weight, baseline);
  return w_augmented >= w_baseline ? augmented : baseline;
}

Prediction round_confidence(std::span<const double> confidence, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Prediction out;
  for (std::size_t i = 0; i < confidence.size(); ++i)
    if (rng.next_double() < confidence[i]) out.items.push_back(static_cast<int>(i));
  return out;
}

}  // namespace selpred
