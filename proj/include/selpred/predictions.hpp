#pragma once

#include <cstdint>
#include <vector>

#include "selpred/blackbox.hpp"
#include "selpred/stp.hpp"

namespace selpred {

struct NoiseParam {
  double p = 0.0;  // in [0, 1]
  std::uint64_t seed = 0;
};

// Terminal-resampling distribution over instances built on a fixed graph.
// fixed-core keeps the same retained terminals for every sample index;
// no-core redraws them per index.
enum class ResampleMode { kFixedCore, kNoCore };

struct DistributionSpec {
  SteinerInstance base;
  ResampleMode mode = ResampleMode::kFixedCore;
  double p = 0.0;  // fraction of terminals resampled, in [0, 1]
  std::uint64_t seed = 0;
};

// ceil(p * count) with a small tolerance so that decimal fractions of small
// counts land on the intended integer.
std::size_t ceil_fraction(double p, std::size_t count);

// Simulated predictor: removes ceil(p * |reference|) uniformly chosen
// reference items and adds the same number of uniformly chosen items from
// outside the reference (fewer when the outside pool is smaller).
// Deterministic given the seed.
Prediction synth_noise(int ground_set_size, const ItemSet& reference,
                       const NoiseParam& noise);

// Majority-vote empirical risk minimization: an item is predicted iff it
// appears in strictly more than half of the given solutions. Throws
// std::invalid_argument on an empty sample.
Prediction erm_majority(const std::vector<ItemSet>& solutions);

// Draws the index-th instance of the distribution: the retained terminals
// plus ceil(p * |T|) fresh terminals sampled from the non-terminal vertices.
// Throws InfeasibleError when there are not enough non-terminal vertices.
SteinerInstance sample_instance(const DistributionSpec& spec, int index);

}  // namespace selpred
