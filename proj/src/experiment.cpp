#include "selpred/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "selpred/errors.hpp"
#include "selpred/oracles.hpp"

namespace selpred {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_csv_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

// Runs `work(i)` for i in [0, count) on `jobs` threads. Each index writes
// only its own output slot, so results are identical for any job count.
void parallel_for(int count, int jobs, const std::function<void(int)>& work) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(jobs));
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&]() {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        work(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace

std::string write_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream out;
  out << "instance,problem,algorithm,p,alpha,seed,cost,opt_cost,mst_cost,ratio,"
         "normalized_cost\n";
  for (const ExperimentRecord& r : records) {
    out << r.instance << ',' << r.problem << ',' << r.algorithm << ','
        << format_csv_real(r.p) << ',' << format_csv_real(r.alpha) << ',' << r.seed
        << ',' << format_csv_real(r.cost) << ',' << format_csv_real(r.opt_cost) << ','
        << format_csv_real(r.mst_cost) << ',' << format_csv_real(r.ratio) << ','
        << format_csv_real(r.normalized_cost) << '\n';
  }
  return out.str();
}

double normalized_cost(double c_alg, double c_opt, double c_mst) {
  if (c_alg < c_opt) c_alg = c_opt;
  if (c_mst == c_opt)
    return c_alg == c_opt ? 0.0 : std::numeric_limits<double>::infinity();
  return (c_alg - c_opt) / (c_mst - c_opt);
}

double cost_ratio(double cost, double opt) {
  if (opt > 0.0) return cost / opt;
  return cost == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
}

namespace {

struct SteinerCell {
  std::string instance_name;
  double p = 0.0;
  std::uint64_t seed = 0;
};

// Rows for one (instance, prediction) evaluation: mehlhorn, alps per alpha,
// and optionally alpha-search.
std::vector<ExperimentRecord> evaluate_steiner_cell(
    const SteinerInstance& inst, const std::vector<EdgeId>& predicted, double opt_cost,
    const std::vector<double>& alpha_grid, bool with_alpha_search, double search_epsilon,
    const std::string& instance_label, double p, std::uint64_t seed) {
  std::vector<ExperimentRecord> rows;
  SteinerSolution mst = mehlhorn(inst);
  double mst_cost = mst.weight_original;

  auto push = [&](const std::string& algorithm, double alpha, double cost) {
    if (cost < opt_cost)
      std::fprintf(stderr,
                   "warning: %s cost %g below the reference optimum %g on %s "
                   "(reference not optimal?); clamping\n",
                   algorithm.c_str(), cost, opt_cost, instance_label.c_str());
    ExperimentRecord r;
    r.instance = instance_label;
    r.problem = "steiner";
    r.algorithm = algorithm;
    r.p = p;
    r.alpha = alpha;
    r.seed = seed;
    r.cost = cost;
    r.opt_cost = opt_cost;
    r.mst_cost = mst_cost;
    r.ratio = cost_ratio(cost, opt_cost);
    r.normalized_cost = normalized_cost(cost, opt_cost, mst_cost);
    rows.push_back(std::move(r));
  };

  push("mehlhorn", 1.0, mst_cost);
  for (double alpha : alpha_grid)
    push("alps", alpha, alps(inst, predicted, alpha).weight_original);
  if (with_alpha_search) {
    AlphaSearchResult best = alpha_search_detailed(inst, predicted, search_epsilon);
    push("alpha-search", best.alpha, best.solution.weight_original);
  }
  return rows;
}

ExperimentRecord error_row(const std::string& instance_label, double p,
                           std::uint64_t seed) {
  ExperimentRecord r;
  r.instance = instance_label;
  r.problem = "steiner";
  r.algorithm = "error";
  r.p = p;
  r.alpha = kNaN;
  r.seed = seed;
  r.cost = kNaN;
  r.opt_cost = kNaN;
  r.mst_cost = kNaN;
  r.ratio = kNaN;
  r.normalized_cost = kNaN;
  return r;
}

}  // namespace

std::vector<ExperimentRecord> run_synthetic_experiment(
    const SyntheticExperimentConfig& config) {
  struct InstanceData {
    bool ok = false;
    SteinerInstance inst;
    std::vector<EdgeId> reference;
    double opt_cost = 0.0;
    std::string label;
  };

  // References are solved once per instance, up front.
  std::vector<InstanceData> instances(config.instance_paths.size());
  for (std::size_t i = 0; i < config.instance_paths.size(); ++i) {
    InstanceData& data = instances[i];
    const std::string& path = config.instance_paths[i];
    try {
      data.inst = parse_stp_file(path);
      data.label = data.inst.name;

      std::filesystem::path sidecar(path);
      sidecar.replace_extension(".sol");
      if (std::filesystem::exists(sidecar)) {
        data.reference = parse_edge_set_file(data.inst.graph, sidecar.string());
      } else {
        data.reference = exact_steiner(data.inst);
      }
      data.opt_cost = data.inst.graph.total_weight(data.reference);
      data.ok = true;
    } catch (const std::exception&) {
      data.label = std::filesystem::path(path).stem().string();
    }
  }

  struct Cell {
    std::size_t instance_index;
    double p;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (double p : config.p_grid)
      for (std::uint64_t seed : config.seeds) cells.push_back(Cell{i, p, seed});

  std::vector<std::vector<ExperimentRecord>> results(cells.size());
  parallel_for(static_cast<int>(cells.size()), config.jobs, [&](int idx) {
    const Cell& cell = cells[static_cast<std::size_t>(idx)];
    const InstanceData& data = instances[cell.instance_index];
    if (!data.ok) {
      results[static_cast<std::size_t>(idx)].push_back(
          error_row(data.label, cell.p, cell.seed));
      return;
    }
    try {
      Prediction predicted =
          synth_noise(data.inst.graph.edge_count(), data.reference,
                      NoiseParam{cell.p, cell.seed});
      results[static_cast<std::size_t>(idx)] = evaluate_steiner_cell(
          data.inst, predicted.items, data.opt_cost, config.alpha_grid,
          /*with_alpha_search=*/true, config.search_epsilon, data.label, cell.p,
          cell.seed);
    } catch (const std::exception&) {
      results[static_cast<std::size_t>(idx)].push_back(
          error_row(data.label, cell.p, cell.seed));
    }
  });

  std::vector<ExperimentRecord> rows;
  for (std::vector<ExperimentRecord>& cell_rows : results)
    for (ExperimentRecord& r : cell_rows) rows.push_back(std::move(r));
  return rows;
}

std::vector<ExperimentRecord> run_learned_experiment(
    const LearnedExperimentConfig& config) {
  if (config.sample_count < 2)
    throw std::invalid_argument(
        "learned experiment needs at least 2 samples (no training folds otherwise)");

  DistributionSpec spec;
  spec.base = parse_stp_file(config.instance_path);
  spec.mode = config.mode;
  spec.p = config.p;
  spec.seed = config.seed;

  std::vector<SteinerInstance> samples;
  std::vector<std::vector<EdgeId>> solutions;
  samples.reserve(static_cast<std::size_t>(config.sample_count));
  for (int i = 0; i < config.sample_count; ++i) {
    samples.push_back(sample_instance(spec, i));
    solutions.push_back(exact_steiner(samples.back()));
  }

  if (!config.dump_dir.empty()) {
    std::filesystem::create_directories(config.dump_dir);
    for (std::size_t i = 0; i < samples.size(); ++i) {
      std::filesystem::path base =
          std::filesystem::path(config.dump_dir) / samples[i].name;
      write_text_file(base.string() + ".stp", write_stp(samples[i]));
      write_text_file(base.string() + ".sol",
                      write_edge_set(samples[i].graph, solutions[i]));
    }
  }

  std::vector<std::vector<ExperimentRecord>> results(samples.size());
  parallel_for(static_cast<int>(samples.size()), config.jobs, [&](int fold) {
    auto fi = static_cast<std::size_t>(fold);
    std::vector<ItemSet> training;
    for (std::size_t j = 0; j < solutions.size(); ++j)
      if (j != fi) training.push_back(solutions[j]);
    Prediction predicted = erm_majority(training);

    double opt_cost = samples[fi].graph.total_weight(solutions[fi]);
    results[fi] = evaluate_steiner_cell(
        samples[fi], predicted.items, opt_cost, config.alpha_grid,
        /*with_alpha_search=*/false, 0.25, samples[fi].name, config.p, config.seed);
  });

  std::vector<ExperimentRecord> rows;
  for (std::vector<ExperimentRecord>& fold_rows : results)
    for (ExperimentRecord& r : fold_rows) rows.push_back(std::move(r));
  return rows;
}

}  // namespace selpred
