#include "selpred/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "selpred/errors.hpp"
#include "selpred/stp.hpp"

namespace selpred {

double KnapsackInstance::total_size() const {
  double sum = 0.0;
  for (double s : size) sum += s;
  return sum;
}

void KnapsackInstance::validate() const {
  if (worth.size() != size.size())
    throw std::invalid_argument("knapsack: worth/size length mismatch");
  for (double s : size)
    if (!(s > 0.0) || !std::isfinite(s))
      throw std::invalid_argument("knapsack: sizes must be positive");
  for (double w : worth)
    if (!(w >= 0.0) || !std::isfinite(w))
      throw std::invalid_argument("knapsack: worths must be non-negative");
  if (!(capacity >= 0.0) || !std::isfinite(capacity))
    throw std::invalid_argument("knapsack: capacity must be finite and non-negative");
}

namespace {

// Ratio order w_i/s_i ascending, ties by id. Cross-multiplied so integer
// data compares exactly.
std::vector<int> ratio_order(std::span<const double> worth, std::span<const double> size) {
  std::vector<int> order(worth.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double lhs = worth[static_cast<std::size_t>(a)] * size[static_cast<std::size_t>(b)];
    double rhs = worth[static_cast<std::size_t>(b)] * size[static_cast<std::size_t>(a)];
    if (lhs != rhs) return lhs < rhs;
    return a < b;
  });
  return order;
}

}  // namespace

ItemSet complementary_greedy(std::span<const double> worth, std::span<const double> size,
                             double target) {
  if (worth.size() != size.size())
    throw std::invalid_argument("complementary_greedy: length mismatch");
  if (target <= 0.0) return {};

  double total = 0.0;
  for (double s : size) total += s;
  if (total < target)
    throw InfeasibleError("covering target exceeds total size");

  std::vector<int> order = ratio_order(worth, size);

  ItemSet growing;
  double growing_size = 0.0;
  double growing_worth = 0.0;
  ItemSet best;
  double best_worth = std::numeric_limits<double>::infinity();
  bool have_best = false;

  for (int i : order) {
    double s = size[static_cast<std::size_t>(i)];
    double w = worth[static_cast<std::size_t>(i)];
    if (growing_size + s < target) {
      growing.push_back(i);
      growing_size += s;
      growing_worth += w;
    } else {
      double candidate_worth = growing_worth + w;
      if (!have_best || candidate_worth < best_worth) {
        best = growing;
        best.push_back(i);
        best_worth = candidate_worth;
        have_best = true;
      }
    }
  }

  std::sort(best.begin(), best.end());
  return best;
}

ItemSet knapsack_with_predictions(const KnapsackInstance& inst, const ItemSet& predicted) {
  inst.validate();
  double target = inst.total_size() - inst.capacity;
  if (target <= 0.0) {
    ItemSet all(static_cast<std::size_t>(inst.item_count()));
    for (int i = 0; i < inst.item_count(); ++i) all[static_cast<std::size_t>(i)] = i;
    return all;
  }

  ApproxSolver comp;
  comp.ratio = 2.0;
  comp.solve = [&inst, target](const std::vector<double>& w) {
    return complementary_greedy(w, inst.size, target);
  };
  comp.feasible = [&inst, target](const ItemSet& y) {
    double s = 0.0;
    for (int i : y) s += inst.size[static_cast<std::size_t>(i)];
    return s >= target;
  };

  SelectionInstance sel{inst.worth};
  return max_with_predictions(sel, comp, Prediction{predicted});
}

bool is_feasible_packing(const KnapsackInstance& inst, const ItemSet& s) {
  double total = 0.0;
  for (int i : s) total += inst.size[static_cast<std::size_t>(i)];
  return total <= inst.capacity;
}

ItemSet greedy_packing(const KnapsackInstance& inst) {
  std::vector<int> order(inst.worth.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double lhs = inst.worth[static_cast<std::size_t>(a)] * inst.size[static_cast<std::size_t>(b)];
    double rhs = inst.worth[static_cast<std::size_t>(b)] * inst.size[static_cast<std::size_t>(a)];
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });

  ItemSet out;
  double used = 0.0;
  for (int i : order) {
    double s = inst.size[static_cast<std::size_t>(i)];
    if (used + s <= inst.capacity) {
      out.push_back(i);
      used += s;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

KnapsackInstance parse_knapsack(std::istream& in) {
  KnapsackInstance inst;
  int n = 0;
  if (!(in >> n >> inst.capacity))
    throw ParseError("knapsack: expected header line \"n c\"");
  if (n < 0) throw ParseError("knapsack: negative item count");
  inst.worth.resize(static_cast<std::size_t>(n));
  inst.size.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    if (!(in >> inst.worth[static_cast<std::size_t>(i)] >>
          inst.size[static_cast<std::size_t>(i)]))
      throw ParseError("knapsack: expected " + std::to_string(n) +
                       " item lines, failed at item " + std::to_string(i + 1));
  }
  inst.validate();
  return inst;
}

KnapsackInstance parse_knapsack_text(const std::string& text) {
  std::istringstream in(text);
  return parse_knapsack(in);
}

std::string write_knapsack(const KnapsackInstance& inst) {
  std::ostringstream out;
  out << inst.item_count() << ' ' << format_number(inst.capacity) << '\n';
  for (int i = 0; i < inst.item_count(); ++i)
    out << format_number(inst.worth[static_cast<std::size_t>(i)]) << ' '
        << format_number(inst.size[static_cast<std::size_t>(i)]) << '\n';
  return out.str();
}

}  // namespace selpred
