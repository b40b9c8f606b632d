#include "selpred/predictions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "selpred/errors.hpp"
#include "selpred/rng.hpp"

namespace selpred {

std::size_t ceil_fraction(double p, std::size_t count) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("fraction must lie in [0, 1]");
  // The 1e-9 slack keeps products like 0.2 * 5 from ceiling to 2.
  double raw = std::ceil(p * static_cast<double>(count) - 1e-9);
  if (raw <= 0.0) return 0;
  auto result = static_cast<std::size_t>(raw);
  return std::min(result, count);
}

Prediction synth_noise(int ground_set_size, const ItemSet& reference,
                       const NoiseParam& noise) {
  ItemSet ref = normalize_item_set(reference, ground_set_size);

  ItemSet outside;
  outside.reserve(static_cast<std::size_t>(ground_set_size) - ref.size());
  {
    std::size_t ri = 0;
    for (int i = 0; i < ground_set_size; ++i) {
      if (ri < ref.size() && ref[ri] == i) {
        ++ri;
      } else {
        outside.push_back(i);
      }
    }
  }

  std::size_t swaps = std::min(ceil_fraction(noise.p, ref.size()), outside.size());

  SplitMix64 rng(noise.seed);
  ItemSet removed = sample_without_replacement(ref, swaps, rng);
  ItemSet added = sample_without_replacement(outside, swaps, rng);

  ItemSet kept = set_minus(ref, removed);
  Prediction out;
  out.items.reserve(kept.size() + added.size());
  std::merge(kept.begin(), kept.end(), added.begin(), added.end(),
             std::back_inserter(out.items));
  return out;
}

Prediction erm_majority(const std::vector<ItemSet>& solutions) {
  if (solutions.empty())
    throw std::invalid_argument("erm_majority: empty solution sample");
  std::map<int, std::size_t> counts;
  for (const ItemSet& s : solutions)
    for (int item : s) ++counts[item];

  Prediction out;
  for (const auto& [item, count] : counts)
    if (2 * count > solutions.size()) out.items.push_back(item);
  return out;
}

SteinerInstance sample_instance(const DistributionSpec& spec, int index) {
  if (spec.p < 0.0 || spec.p > 1.0)
    throw std::invalid_argument("sample_instance: p must lie in [0, 1]");
  if (index < 0) throw std::invalid_argument("sample_instance: negative index");

  const Graph& g = spec.base.graph;
  ItemSet terminals = normalize_item_set(spec.base.terminals, g.vertex_count());
  if (terminals.empty())
    throw std::invalid_argument("sample_instance: base instance has no terminals");

  std::size_t swap_count = ceil_fraction(spec.p, terminals.size());

  ItemSet non_terminals;
  {
    std::size_t ti = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (ti < terminals.size() && terminals[ti] == v) {
        ++ti;
      } else {
        non_terminals.push_back(v);
      }
    }
  }
  if (non_terminals.size() < swap_count)
    throw InfeasibleError("sample_instance: need " + std::to_string(swap_count) +
                          " non-terminal vertices, graph has " +
                          std::to_string(non_terminals.size()));

  // Retained terminals: drawn from the seed alone under fixed-core, from the
  // per-index stream under no-core.
  std::uint64_t index_seed = derive_seed(spec.seed, static_cast<std::uint64_t>(index));
  SplitMix64 core_rng(spec.mode == ResampleMode::kFixedCore ? spec.seed : index_seed);
  ItemSet retained =
      sample_without_replacement(terminals, terminals.size() - swap_count, core_rng);

  SplitMix64 fresh_rng(derive_seed(index_seed, 1));
  ItemSet fresh = sample_without_replacement(non_terminals, swap_count, fresh_rng);

  SteinerInstance out;
  out.graph = g;
  out.name = spec.base.name + "." + std::to_string(index);
  std::merge(retained.begin(), retained.end(), fresh.begin(), fresh.end(),
             std::back_inserter(out.terminals));
  return out;
}

}  // namespace selpred
