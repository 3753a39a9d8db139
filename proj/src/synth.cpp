#include "tcent/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace tcent {

double paper_default_probability() { return 0.01 * std::log(160.0) / 160.0; }

ErTvgSpec paper_default_spec(std::uint64_t seed) {
  return ErTvgSpec{160, 800, paper_default_probability(), seed};
}

std::uint64_t snapshot_seed(std::uint64_t seed, TimeIndex t) noexcept {
  std::uint64_t z = seed + (std::uint64_t{t} + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Tvg generate_er_tvg(const ErTvgSpec& spec) {
  if (!(spec.edge_probability >= 0.0 && spec.edge_probability <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0, 1]");
  }
  if (spec.num_nodes == 0 || spec.num_instants == 0) {
    throw std::invalid_argument("node and instant counts must be positive");
  }
  constexpr double kUnit = 0x1.0p-53;
  std::vector<Contact> contacts;
  for (TimeIndex t = 0; t < spec.num_instants; ++t) {
    std::mt19937_64 engine(snapshot_seed(spec.seed, t));
    for (NodeId a = 0; a < spec.num_nodes; ++a) {
      for (NodeId b = a + 1; b < spec.num_nodes; ++b) {
        double u = static_cast<double>(engine() >> 11) * kUnit;
        if (u < spec.edge_probability) contacts.push_back({a, b, t});
      }
    }
  }
  return Tvg::build(spec.num_nodes, spec.num_instants, contacts);
}

}  // namespace tcent
