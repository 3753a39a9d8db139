#pragma once

#include <cstdint>

#include "tcent/tvg.hpp"

namespace tcent {

/// Parameters of a TVG made of independent G(n, p) snapshots.
struct ErTvgSpec {
  std::uint32_t num_nodes = 1;
  std::uint32_t num_instants = 1;
  double edge_probability = 0.0;
  std::uint64_t seed = 0;
};

/// 0.01 * ln(160) / 160 ~= 3.17198363452e-4: one percent of the
/// connectivity threshold ln(n)/n for n = 160.
[[nodiscard]] double paper_default_probability();

/// n = 160, T = 800, p = paper_default_probability().
[[nodiscard]] ErTvgSpec paper_default_spec(std::uint64_t seed);

/// Draws every snapshot as an independent Erdos-Renyi G(n, p) graph.
///
/// Reproducibility contract (part of the output format):
///  - snapshot t uses its own std::mt19937_64 seeded with
///    snapshot_seed(seed, t), so snapshots are independent substreams and
///    may be generated in any order or in parallel;
///  - pairs (a, b), a < b, are visited lexicographically with exactly one
///    64-bit draw each; the pair is present iff (draw >> 11) * 2^-53 < p.
///
/// Throws std::invalid_argument if p is outside [0, 1] or n, T are zero.
[[nodiscard]] Tvg generate_er_tvg(const ErTvgSpec& spec);

/// splitmix64 of seed + (t + 1) * golden-ratio increment.
[[nodiscard]] std::uint64_t snapshot_seed(std::uint64_t seed, TimeIndex t) noexcept;

}  // namespace tcent
