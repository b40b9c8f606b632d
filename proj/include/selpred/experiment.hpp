#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "selpred/predictions.hpp"
#include "selpred/steiner.hpp"

namespace selpred {

// One CSV row of an experiment cell. Numeric fields that do not apply to a
// row are NaN and serialize as "nan"; infinities serialize as "inf".
struct ExperimentRecord {
  std::string instance;
  std::string problem;    // steiner | vc | is | knapsack
  std::string algorithm;  // mehlhorn | alps | alpha-search | vc | vc-pred |
                          // is-pred | knapsack-pred | oracle | error
  double p = 0.0;
  double alpha = 0.0;
  std::uint64_t seed = 0;
  double cost = 0.0;
  double opt_cost = 0.0;
  double mst_cost = 0.0;
  double ratio = 0.0;
  double normalized_cost = 0.0;
};

// Header plus one row per record; reals rendered with 6 significant digits.
// Column order: instance, problem, algorithm, p, alpha, seed, cost, opt_cost,
// mst_cost, ratio, normalized_cost.
std::string write_csv(const std::vector<ExperimentRecord>& records);

// Position of a solution cost between the optimum (0) and the MST heuristic
// (1): (c_alg - c_opt) / (c_mst - c_opt). A cost below c_opt clamps to 0;
// when c_mst equals c_opt the result is 0 for an optimal cost and infinity
// otherwise.
double normalized_cost(double c_alg, double c_opt, double c_mst);

// cost / opt; 1 when both are zero, infinity when only opt is.
double cost_ratio(double cost, double opt);

struct SyntheticExperimentConfig {
  std::vector<std::string> instance_paths;  // .stp files
  std::vector<double> p_grid;
  std::vector<double> alpha_grid;           // may contain infinity
  std::vector<std::uint64_t> seeds;
  double search_epsilon = 0.25;             // for the alpha-search rows
  int jobs = 1;
};

// Synthetic-noise experiment: for every (instance, p, seed) cell, the oracle
// solution (or a sidecar <instance>.sol file when present) serves as the
// reference, synth_noise perturbs it, and one row is emitted for the MST
// heuristic, for alps at every alpha in the grid, and for alpha-search.
// Failing instances produce a single "error" row and processing continues.
// Output order and content are deterministic for any job count.
std::vector<ExperimentRecord> run_synthetic_experiment(
    const SyntheticExperimentConfig& config);

struct LearnedExperimentConfig {
  std::string instance_path;  // base .stp file
  ResampleMode mode = ResampleMode::kFixedCore;
  double p = 0.0;
  int sample_count = 10;  // instances drawn from the distribution
  std::uint64_t seed = 0;
  std::vector<double> alpha_grid;
  int jobs = 1;
  // When set, every sample is written there as <base>.<index>.stp with its
  // exact solution as <base>.<index>.sol.
  std::string dump_dir;
};

// Learned-prediction experiment with leave-one-out cross-validation: draws
// sample_count instances from the terminal-resampling distribution, solves
// each exactly, and evaluates every fold with the majority-vote prediction
// learned from the other folds' solutions.
std::vector<ExperimentRecord> run_learned_experiment(
    const LearnedExperimentConfig& config);

}  // namespace selpred
