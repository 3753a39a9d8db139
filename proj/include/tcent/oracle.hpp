#pragma once

#include <cstdint>
#include <vector>

#include "tcent/tvg.hpp"

namespace tcent::oracle {

/// Static digraph over all |V| * N temporal nodes. Vertex (v, t) has id
/// t * |V| + v. For each contact {u, v} at t with t + 1 < N there are arcs
/// (u, t) -> (v, t+1) and (v, t) -> (u, t+1); every node also has a
/// retention arc (w, t) -> (w, t+1). Contacts of the final instant have no
/// target instant and are kept aside in `final_contacts`.
struct ExpandedDigraph {
  std::uint32_t num_nodes = 0;
  std::uint32_t num_instants = 0;
  std::vector<std::vector<std::uint32_t>> out;  // adjacency by vertex id
  std::vector<std::pair<NodeId, NodeId>> final_contacts;

  [[nodiscard]] std::uint32_t vertex(NodeId v, TimeIndex t) const noexcept { return t * num_nodes + v; }
  [[nodiscard]] std::size_t num_vertices() const noexcept { return out.size(); }
  [[nodiscard]] std::size_t num_arcs() const noexcept;
};

[[nodiscard]] ExpandedDigraph expand(const Tvg& tvg);

/// Nodes v such that (v, start.time + s) is reachable from the start vertex
/// for some s <= steps, by plain BFS on the digraph. When the budget runs
/// past the final instant, the final snapshot's contacts are applied once
/// more as a one-hop closure, matching delivery at the last snapshot.
/// Throws std::out_of_range for an invalid start.
[[nodiscard]] std::vector<NodeId> reach(const ExpandedDigraph& g, TemporalNode start, std::uint32_t steps);


struct FuzzConfig {
  std::uint32_t instances = 1000;
  std::uint64_t seed = 1;
  std::uint32_t max_nodes = 10;
  std::uint32_t max_instants = 12;
  std::vector<double> probabilities{0.1, 0.3, 0.6};
};

struct Mismatch {
  std::uint32_t instance = 0;
  TemporalNode start;
  std::uint32_t steps = 0;
};

struct FuzzReport {
  std::uint32_t instances = 0;
  std::uint64_t comparisons = 0;
  std::vector<Mismatch> mismatches;  // first few only
  std::uint64_t mismatch_count = 0;
};

/// The i-th random TVG of a fuzz run: |V| in [1, max_nodes], N in
/// [1, max_instants], p cycling through `probabilities`.
[[nodiscard]] Tvg fuzz_instance(const FuzzConfig& cfg, std::uint32_t i);

/// For every instance, every temporal start node and every step budget
/// 0..N - start.time (plus one beyond), compares the diffusion engine's
/// informed set with reach() on the expansion.
[[nodiscard]] FuzzReport fuzz_equivalence(const FuzzConfig& cfg);

}  // namespace tcent::oracle
