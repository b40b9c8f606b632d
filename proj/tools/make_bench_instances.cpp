// Regenerates the bundled benchmark instances under data/. The bundle is
// committed; this tool exists so it can be reproduced or extended.
//
// Selection aims for small instances that are not all trivial for the MST
// heuristic: most of the accepted graphs have a heuristic/optimum gap, and
// the designated learned-experiment base must be solved optimally by the
// scaled heuristic under a perfect prediction for alpha >= 1.4.

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "selpred/oracles.hpp"
#include "selpred/rng.hpp"
#include "selpred/steiner.hpp"
#include "selpred/stp.hpp"

using namespace selpred;

namespace {

constexpr std::uint64_t kBundleSeed = 20240904;
constexpr int kBundleSize = 20;

SteinerInstance random_candidate(SplitMix64& rng) {
  int n = 8 + static_cast<int>(rng.next_below(3));
  SteinerInstance inst;
  inst.graph = Graph(n);
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(v)));
    inst.graph.add_edge(u, v, static_cast<double>(1 + rng.next_below(9)));
  }
  int extra = 3 + static_cast<int>(rng.next_below(8));
  for (int i = 0; i < extra; ++i) {
    int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (u == v || inst.graph.edge_count() >= 22) continue;
    inst.graph.add_edge(u, v, static_cast<double>(1 + rng.next_below(9)));
  }
  int k = 3 + static_cast<int>(rng.next_below(3));
  std::vector<int> vertices(n);
  for (int v = 0; v < n; ++v) vertices[v] = v;
  inst.terminals = sample_without_replacement(vertices, k, rng);
  return inst;
}

bool perfect_prediction_optimal(const SteinerInstance& inst,
                                const std::vector<EdgeId>& opt, double opt_weight) {
  for (double alpha : {1.4, 2.0, std::numeric_limits<double>::infinity()})
    if (alps(inst, opt, alpha).weight_original != opt_weight) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::string out_dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(out_dir + "/instances");

  SplitMix64 rng(kBundleSeed);
  int accepted = 0;
  int with_gap = 0;
  std::string learned_base;

  while (accepted < kBundleSize) {
    SteinerInstance inst = random_candidate(rng);
    std::vector<EdgeId> opt = exact_steiner(inst);
    double opt_weight = inst.graph.total_weight(opt);
    double mst_weight = mehlhorn(inst).weight_original;
    bool gap = mst_weight > opt_weight;

    // Keep the bundle biased toward instances with a heuristic gap.
    int remaining = kBundleSize - accepted;
    int gap_needed = 12 - with_gap;
    if (!gap && remaining <= gap_needed) continue;

    char name[32];
    std::snprintf(name, sizeof(name), "bench_%02d", accepted);
    inst.name = name;
    bool anchors = perfect_prediction_optimal(inst, opt, opt_weight);
    if (learned_base.empty() && gap && anchors && inst.terminals.size() == 4)
      learned_base = name;
    std::string path = out_dir + "/instances/" + name + ".stp";
    write_text_file(path, write_stp(inst));
    std::printf("%s: n=%d m=%d k=%zu opt=%g mst=%g ratio=%.4f anchors=%d\n", name,
                inst.graph.vertex_count(), inst.graph.edge_count(),
                inst.terminals.size(), opt_weight, mst_weight, mst_weight / opt_weight,
                anchors ? 1 : 0);
    if (gap) ++with_gap;
    ++accepted;
  }

  auto [tight, predicted] = tight_example(6, 0.1, 6.0);
  write_text_file(out_dir + "/tight_k6.stp", write_stp(tight));
  write_text_file(out_dir + "/tight_k6.pred", write_edge_set(tight.graph, predicted));

  std::printf("instances with heuristic gap: %d/%d\n", with_gap, kBundleSize);
  std::printf("suggested learned-experiment base: %s\n",
              learned_base.empty() ? "(none)" : learned_base.c_str());
  return 0;
}
