#include <random>

#include "tcent/diffusion.hpp"
#include "tcent/oracle.hpp"
#include "tcent/synth.hpp"

namespace tcent::oracle {

Tvg fuzz_instance(const FuzzConfig& cfg, std::uint32_t i) {
  std::mt19937_64 engine(snapshot_seed(cfg.seed, i));
  auto pick = [&](std::uint32_t hi) { return static_cast<std::uint32_t>(engine() % hi) + 1; };
  ErTvgSpec spec;
  spec.num_nodes = pick(cfg.max_nodes);
  spec.num_instants = pick(cfg.max_instants);
  spec.edge_probability = cfg.probabilities.at(i % cfg.probabilities.size());
  spec.seed = engine();
  return generate_er_tvg(spec);
}

FuzzReport fuzz_equivalence(const FuzzConfig& cfg) {
  FuzzReport report;
  for (std::uint32_t i = 0; i < cfg.instances; ++i) {
    const Tvg tvg = fuzz_instance(cfg, i);
    const ExpandedDigraph g = expand(tvg);
    DiffusionEngine engine(tvg);
    for (TimeIndex t = 0; t < tvg.num_instants(); ++t) {
      for (NodeId u = 0; u < tvg.num_nodes(); ++u) {
        for (std::uint32_t steps = 0; steps <= tvg.num_instants() - t + 1; ++steps) {
          (void)engine.diffuse({u, t}, StopRule{std::nullopt, steps});
          ++report.comparisons;
          if (engine.informed() != reach(g, {u, t}, steps)) {
            ++report.mismatch_count;
            if (report.mismatches.size() < 10) report.mismatches.push_back({i, {u, t}, steps});
          }
        }
      }
    }
    ++report.instances;
  }
  return report;
}

}  // namespace tcent::oracle
