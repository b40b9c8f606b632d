// selpred: learning-augmented solvers for selection problems.
//
// Subcommands: solve, oracle, predict synth, predict erm, gen tight-example,
// experiment synthetic, experiment learned. Exit codes: 0 success, 1 solver
// or infeasibility error, 2 usage/IO error.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "selpred/blackbox.hpp"
#include "selpred/errors.hpp"
#include "selpred/experiment.hpp"
#include "selpred/knapsack.hpp"
#include "selpred/oracles.hpp"
#include "selpred/predictions.hpp"
#include "selpred/steiner.hpp"
#include "selpred/stp.hpp"
#include "selpred/vertex_cover.hpp"

namespace {

using namespace selpred;
namespace fs = std::filesystem;

constexpr int kExitSolverError = 1;
constexpr int kExitUsageError = 2;

double parse_alpha(const std::string& text) {
  if (text == "inf" || text == "infinity")
    return std::numeric_limits<double>::infinity();
  return std::stod(text);
}

std::vector<double> parse_real_grid(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    if (!token.empty()) out.push_back(parse_alpha(token));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) throw CLI::ValidationError("empty grid");
  return out;
}

std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string token = text.substr(start, comma - start);
    if (!token.empty()) out.push_back(std::stoull(token));
    start = comma + 1;
    if (comma == text.size()) break;
  }
  if (out.empty()) throw CLI::ValidationError("empty seed list");
  return out;
}

void require_file(const std::string& path) {
  if (!fs::exists(path)) throw ParseError("cannot open file: " + path);
}

// Display rounding for summary lines; files keep full precision.
std::string pretty(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", value);
  return buf;
}

std::string default_out_path(const std::string& instance_path, const std::string& tag) {
  return instance_path + "." + tag + ".sol";
}

// Vertex weights: sidecar "<instance>.weights" file when present, unit
// weights otherwise.
VertexWeightedGraph load_vertex_weighted(const std::string& instance_path,
                                         const SteinerInstance& inst) {
  VertexWeightedGraph g;
  g.graph = inst.graph;
  fs::path weights_path(instance_path);
  weights_path.replace_extension(".weights");
  if (fs::exists(weights_path)) {
    g.vertex_weight = parse_real_list_file(weights_path.string());
    if (static_cast<int>(g.vertex_weight.size()) != g.graph.vertex_count())
      throw ParseError(weights_path.string() + ": expected " +
                       std::to_string(g.graph.vertex_count()) + " vertex weights");
  } else {
    g.vertex_weight.assign(static_cast<std::size_t>(g.graph.vertex_count()), 1.0);
  }
  return g;
}

struct SolveArgs {
  std::string problem;
  std::string instance_path;
  std::string prediction_path;
  std::string out_path;
  std::string csv_path;
  std::string opt_file;
  std::string alpha_text;
  double epsilon = 0.0;
  bool robust = false;
  bool no_prune = false;
};

int run_solve(const SolveArgs& args) {
  require_file(args.instance_path);

  ExperimentRecord record;
  record.instance = fs::path(args.instance_path).stem().string();
  record.p = std::numeric_limits<double>::quiet_NaN();
  record.alpha = std::numeric_limits<double>::quiet_NaN();
  record.opt_cost = std::numeric_limits<double>::quiet_NaN();
  record.mst_cost = std::numeric_limits<double>::quiet_NaN();
  record.ratio = std::numeric_limits<double>::quiet_NaN();
  record.normalized_cost = std::numeric_limits<double>::quiet_NaN();

  std::string out_path = args.out_path;
  std::string solution_text;
  double cost = 0.0;

  if (args.problem == "steiner") {
    SteinerInstance inst = parse_stp_file(args.instance_path);
    std::vector<EdgeId> predicted;
    if (!args.prediction_path.empty())
      predicted = parse_edge_set_file(inst.graph, args.prediction_path);

    bool use_search = args.epsilon > 0.0;
    if (use_search && !args.alpha_text.empty())
      throw CLI::ValidationError("--alpha and --epsilon are mutually exclusive");
    double alpha = args.alpha_text.empty() ? 1.0 : parse_alpha(args.alpha_text);

    SteinerOptions options{.prune = !args.no_prune};
    SteinerSolution solution;
    std::string algorithm;
    if (use_search) {
      AlphaSearchResult result =
          alpha_search_detailed(inst, predicted, args.epsilon, options);
      solution = std::move(result.solution);
      record.alpha = result.alpha;
      algorithm = "alpha-search";
    } else {
      solution = alps(inst, predicted, alpha, options);
      record.alpha = alpha;
      algorithm = predicted.empty() && alpha == 1.0 ? "mehlhorn" : "alps";
    }
    if (args.robust) {
      SteinerSolution plain = mehlhorn(inst, options);
      if (plain.weight_original < solution.weight_original) solution = std::move(plain);
    }

    cost = solution.weight_original;
    record.problem = "steiner";
    record.algorithm = algorithm;
    record.mst_cost = mehlhorn(inst, options).weight_original;
    if (!args.opt_file.empty()) {
      std::vector<EdgeId> reference = parse_edge_set_file(inst.graph, args.opt_file);
      record.opt_cost = inst.graph.total_weight(reference);
      record.ratio = cost_ratio(cost, record.opt_cost);
      record.normalized_cost = normalized_cost(cost, record.opt_cost, record.mst_cost);
    }
    solution_text = write_edge_set(inst.graph, solution.edges);
    if (out_path.empty())
      out_path = default_out_path(args.instance_path, record.algorithm);
  } else if (args.problem == "vc" || args.problem == "is") {
    SteinerInstance inst = parse_stp_file(args.instance_path);
    VertexWeightedGraph g = load_vertex_weighted(args.instance_path, inst);
    ItemSet predicted;
    if (!args.prediction_path.empty())
      predicted = parse_id_set_file(args.prediction_path, g.graph.vertex_count());

    ItemSet solution;
    SelectionInstance sel{g.vertex_weight};
    if (args.problem == "vc") {
      solution = args.robust
                     ? robust_min(sel, vc_solver(g.graph), Prediction{predicted})
                     : vc_with_predictions(g, predicted);
      record.algorithm = args.prediction_path.empty() && !args.robust ? "vc" : "vc-pred";
    } else {
      if (args.robust) {
        ApproxSolver baseline;
        baseline.ratio = 0.0;
        baseline.solve = [&g](const std::vector<double>&) {
          return greedy_independent_set(g);
        };
        baseline.feasible = [&g](const ItemSet& s) {
          return is_independent_set(g.graph, s);
        };
        solution = robust_max(sel, vc_as_complement_solver(g.graph), baseline,
                              Prediction{predicted});
      } else {
        solution = is_with_predictions(g, predicted);
      }
      record.algorithm = "is-pred";
    }
    cost = set_weight(g.vertex_weight, solution);
    record.problem = args.problem;
    solution_text = write_id_set(solution);
    if (out_path.empty())
      out_path = default_out_path(args.instance_path, record.algorithm);
  } else if (args.problem == "knapsack") {
    KnapsackInstance inst = parse_knapsack_text(read_text_file(args.instance_path));
    ItemSet predicted;
    if (!args.prediction_path.empty())
      predicted = parse_id_set_file(args.prediction_path, inst.item_count());

    ItemSet solution;
    if (args.robust) {
      ItemSet augmented = knapsack_with_predictions(inst, predicted);
      ItemSet baseline = greedy_packing(inst);
      solution = set_weight(inst.worth, augmented) >= set_weight(inst.worth, baseline)
                     ? augmented
                     : baseline;
    } else {
      solution = knapsack_with_predictions(inst, predicted);
    }
    cost = set_weight(inst.worth, solution);
    record.problem = "knapsack";
    record.algorithm = "knapsack-pred";
    solution_text = write_id_set(solution);
    if (out_path.empty())
      out_path = default_out_path(args.instance_path, record.algorithm);
  } else {
    throw CLI::ValidationError("unknown problem: " + args.problem);
  }

  record.cost = cost;
  write_text_file(out_path, solution_text);
  if (!args.csv_path.empty()) write_text_file(args.csv_path, write_csv({record}));

  std::cout << record.problem << " " << record.algorithm << " cost "
            << pretty(cost);
  if (!std::isnan(record.ratio)) std::cout << " ratio " << pretty(record.ratio);
  std::cout << " -> " << out_path << "\n";
  return 0;
}

struct OracleArgs {
  std::string problem;
  std::string instance_path;
  std::string out_path;
  std::string csv_path;
};

int run_oracle(const OracleArgs& args) {
  require_file(args.instance_path);

  ExperimentRecord record;
  record.instance = fs::path(args.instance_path).stem().string();
  record.problem = args.problem;
  record.algorithm = "oracle";
  record.p = std::numeric_limits<double>::quiet_NaN();
  record.alpha = std::numeric_limits<double>::quiet_NaN();
  record.mst_cost = std::numeric_limits<double>::quiet_NaN();
  record.normalized_cost = std::numeric_limits<double>::quiet_NaN();

  std::string out_path = args.out_path;
  std::string solution_text;
  double cost = 0.0;

  if (args.problem == "steiner") {
    SteinerInstance inst = parse_stp_file(args.instance_path);
    std::vector<EdgeId> solution = exact_steiner(inst);
    cost = inst.graph.total_weight(solution);
    solution_text = write_edge_set(inst.graph, solution);
  } else if (args.problem == "vc" || args.problem == "is") {
    SteinerInstance inst = parse_stp_file(args.instance_path);
    VertexWeightedGraph g = load_vertex_weighted(args.instance_path, inst);
    ItemSet solution = args.problem == "vc" ? exact_vc(g) : exact_is(g);
    cost = set_weight(g.vertex_weight, solution);
    solution_text = write_id_set(solution);
  } else if (args.problem == "knapsack") {
    KnapsackInstance inst = parse_knapsack_text(read_text_file(args.instance_path));
    ItemSet solution = exact_knapsack(inst);
    cost = set_weight(inst.worth, solution);
    solution_text = write_id_set(solution);
  } else {
    throw CLI::ValidationError("unknown problem: " + args.problem);
  }

  if (out_path.empty()) {
    fs::path p(args.instance_path);
    p.replace_extension(".sol");
    out_path = p.string();
  }
  record.cost = cost;
  record.opt_cost = cost;
  record.ratio = 1.0;
  write_text_file(out_path, solution_text);
  if (!args.csv_path.empty()) write_text_file(args.csv_path, write_csv({record}));

  std::cout << args.problem << " oracle cost " << pretty(cost) << " -> "
            << out_path << "\n";
  return 0;
}

std::vector<std::string> list_stp_files(const std::string& dir) {
  std::vector<std::string> paths;
  if (!fs::exists(dir)) throw ParseError("cannot open directory: " + dir);
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".stp")
      paths.push_back(entry.path().string());
  std::sort(paths.begin(), paths.end());
  return paths;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"learning-augmented selection-problem solvers"};
  app.require_subcommand(1);

  // solve
  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("problem", solve_args.problem, "steiner | vc | is | knapsack")
      ->required();
  solve->add_option("--instance", solve_args.instance_path, "instance file")->required();
  solve->add_option("--pred", solve_args.prediction_path, "prediction file");
  solve->add_option("--alpha", solve_args.alpha_text,
                    "confidence parameter (>= 1 or 'inf')");
  solve->add_option("--epsilon", solve_args.epsilon,
                    "alpha grid-search precision in (0,1)");
  solve->add_option("--out", solve_args.out_path, "solution output path");
  solve->add_option("--csv", solve_args.csv_path, "write a one-row CSV summary");
  solve->add_option("--opt-file", solve_args.opt_file,
                    "reference solution for ratio reporting (steiner)");
  solve->add_flag("--robust", solve_args.robust,
                  "return the better of augmented and plain runs");
  solve->add_flag("--no-prune", solve_args.no_prune, "keep the raw path union (steiner)");

  // oracle
  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "exact solution of a small instance");
  oracle->add_option("problem", oracle_args.problem, "steiner | vc | is | knapsack")
      ->required();
  oracle->add_option("--instance", oracle_args.instance_path, "instance file")
      ->required();
  oracle->add_option("--out", oracle_args.out_path, "solution output path");
  oracle->add_option("--csv", oracle_args.csv_path, "write a one-row CSV summary");

  // predict synth | predict erm
  CLI::App* predict = app.add_subcommand("predict", "generate prediction files");
  predict->require_subcommand(1);

  std::string synth_instance, synth_reference, synth_out;
  double synth_p = 0.0;
  std::uint64_t synth_seed = 0;
  CLI::App* synth = predict->add_subcommand("synth", "noisy copy of a reference solution");
  synth->add_option("--instance", synth_instance, ".stp instance")->required();
  synth->add_option("--reference", synth_reference, "reference edge-set file")
      ->required();
  synth->add_option("--p", synth_p, "noise level in [0,1]")->required();
  synth->add_option("--seed", synth_seed, "PRNG seed");
  synth->add_option("--out", synth_out, "prediction output path")->required();

  std::string erm_instance, erm_out, erm_dir;
  std::vector<std::string> erm_solutions;
  CLI::App* erm = predict->add_subcommand("erm", "majority vote over solution files");
  erm->add_option("--instance", erm_instance, ".stp instance")->required();
  erm->add_option("--solutions", erm_solutions, "edge-set files")->expected(-1);
  erm->add_option("--solutions-dir", erm_dir, "directory scanned for *.sol files");
  erm->add_option("--out", erm_out, "prediction output path")->required();

  // gen tight-example
  CLI::App* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  int tight_k = 6;
  double tight_eps = 0.1, tight_beta = 6.0;
  std::string tight_stp, tight_pred;
  CLI::App* tight = gen->add_subcommand("tight-example", "cycle-with-hub worst case");
  tight->add_option("--k", tight_k, "terminal count (>= 3)");
  tight->add_option("--eps", tight_eps, "spoke weight offset (> 0)");
  tight->add_option("--beta", tight_beta, "heavy cycle edge weight (> 2)");
  tight->add_option("--out-stp", tight_stp, "instance output path")->required();
  tight->add_option("--out-pred", tight_pred, "prediction output path")->required();

  // experiment synthetic | experiment learned
  CLI::App* experiment = app.add_subcommand("experiment", "batch evaluation to CSV");
  experiment->require_subcommand(1);

  std::string synth_dir, synth_csv;
  std::string synth_p_grid = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1";
  std::string synth_alpha_grid = "1.1,1.2,1.4,2,4,inf";
  std::string synth_seeds = "1";
  double synth_epsilon = 0.25;
  int synth_jobs = 1;
  CLI::App* exp_synth =
      experiment->add_subcommand("synthetic", "noisy ground-truth predictions");
  exp_synth->add_option("--instances", synth_dir, "directory of .stp files")->required();
  exp_synth->add_option("--p-grid", synth_p_grid, "comma-separated noise levels");
  exp_synth->add_option("--alpha-grid", synth_alpha_grid,
                        "comma-separated alphas ('inf' allowed)");
  exp_synth->add_option("--seeds", synth_seeds, "comma-separated seeds");
  exp_synth->add_option("--epsilon", synth_epsilon, "alpha-search precision");
  exp_synth->add_option("--jobs", synth_jobs,
                        "worker threads (output is order-independent)");
  exp_synth->add_option("--out", synth_csv, "CSV output path")->required();

  std::string learned_instance, learned_csv, learned_mode = "fixed-core";
  std::string learned_alpha_grid = "1.1,1.2,1.4,2,4,inf";
  std::string learned_dump;
  double learned_p = 0.0;
  int learned_k = 10;
  std::uint64_t learned_seed = 1;
  int learned_jobs = 1;
  CLI::App* exp_learned =
      experiment->add_subcommand("learned", "leave-one-out ERM predictions");
  exp_learned->add_option("--instance", learned_instance, "base .stp file")->required();
  exp_learned->add_option("--mode", learned_mode, "fixed-core | no-core");
  exp_learned->add_option("--p", learned_p, "resampled terminal fraction");
  exp_learned->add_option("--k", learned_k, "sample count");
  exp_learned->add_option("--seed", learned_seed, "PRNG seed");
  exp_learned->add_option("--alpha-grid", learned_alpha_grid, "comma-separated alphas");
  exp_learned->add_option("--jobs", learned_jobs, "worker threads");
  exp_learned->add_option("--dump-solutions", learned_dump,
                          "write sampled instances and solutions here");
  exp_learned->add_option("--out", learned_csv, "CSV output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsageError;
  }

  try {
    if (*solve) return run_solve(solve_args);
    if (*oracle) return run_oracle(oracle_args);

    if (*synth) {
      require_file(synth_instance);
      SteinerInstance inst = parse_stp_file(synth_instance);
      std::vector<EdgeId> reference = parse_edge_set_file(inst.graph, synth_reference);
      Prediction pred = synth_noise(inst.graph.edge_count(), reference,
                                    NoiseParam{synth_p, synth_seed});
      write_text_file(synth_out, write_edge_set(inst.graph, pred.items));
      std::cout << "prediction with " << pred.items.size() << " edges -> " << synth_out
                << "\n";
      return 0;
    }
    if (*erm) {
      require_file(erm_instance);
      SteinerInstance inst = parse_stp_file(erm_instance);
      std::vector<std::string> solution_paths = erm_solutions;
      if (!erm_dir.empty()) {
        if (!fs::exists(erm_dir)) throw ParseError("cannot open directory: " + erm_dir);
        std::vector<std::string> found;
        for (const auto& entry : fs::directory_iterator(erm_dir))
          if (entry.is_regular_file() && entry.path().extension() == ".sol")
            found.push_back(entry.path().string());
        std::sort(found.begin(), found.end());
        solution_paths.insert(solution_paths.end(), found.begin(), found.end());
      }
      if (solution_paths.empty())
        throw CLI::ValidationError("predict erm needs --solutions or --solutions-dir");
      std::vector<ItemSet> solutions;
      for (const std::string& path : solution_paths)
        solutions.push_back(parse_edge_set_file(inst.graph, path));
      Prediction pred = erm_majority(solutions);
      write_text_file(erm_out, write_edge_set(inst.graph, pred.items));
      std::cout << "prediction with " << pred.items.size() << " edges -> " << erm_out
                << "\n";
      return 0;
    }
    if (*tight) {
      auto [inst, predicted] = tight_example(tight_k, tight_eps, tight_beta);
      write_text_file(tight_stp, write_stp(inst));
      write_text_file(tight_pred, write_edge_set(inst.graph, predicted));
      std::cout << "instance -> " << tight_stp << ", prediction -> " << tight_pred
                << "\n";
      return 0;
    }
    if (*exp_synth) {
      SyntheticExperimentConfig config;
      config.instance_paths = list_stp_files(synth_dir);
      config.p_grid = parse_real_grid(synth_p_grid);
      config.alpha_grid = parse_real_grid(synth_alpha_grid);
      config.seeds = parse_seed_list(synth_seeds);
      config.search_epsilon = synth_epsilon;
      config.jobs = synth_jobs;
      auto rows = run_synthetic_experiment(config);
      write_text_file(synth_csv, write_csv(rows));
      std::cout << rows.size() << " rows -> " << synth_csv << "\n";
      return 0;
    }
    if (*exp_learned) {
      LearnedExperimentConfig config;
      config.instance_path = learned_instance;
      if (learned_mode == "fixed-core") {
        config.mode = ResampleMode::kFixedCore;
      } else if (learned_mode == "no-core") {
        config.mode = ResampleMode::kNoCore;
      } else {
        throw CLI::ValidationError("unknown mode: " + learned_mode);
      }
      config.p = learned_p;
      config.sample_count = learned_k;
      config.seed = learned_seed;
      config.alpha_grid = parse_real_grid(learned_alpha_grid);
      config.jobs = learned_jobs;
      config.dump_dir = learned_dump;
      require_file(learned_instance);
      auto rows = run_learned_experiment(config);
      write_text_file(learned_csv, write_csv(rows));
      std::cout << rows.size() << " rows -> " << learned_csv << "\n";
      return 0;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolverError;
  }
  return kExitUsageError;
}
