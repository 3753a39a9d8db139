#pragma once

#include <random>
#include <vector>

#include "tcent/oracle.hpp"
#include "tcent/tvg.hpp"

namespace tcent::testing {

// Nodes a, b, c, d = 0..3; snapshots t0: a-b, t1: b-c, t2: c-d.
inline constexpr NodeId kA = 0, kB = 1, kC = 2, kD = 3;

inline Tvg chain4() {
  const std::vector<Contact> contacts{{kA, kB, 0}, {kB, kC, 1}, {kC, kD, 2}};
  return Tvg::build(4, 3, contacts);
}

inline Tvg complete_snapshot(std::uint32_t n, std::uint32_t instants, TimeIndex at) {
  std::vector<Contact> contacts;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) contacts.push_back({a, b, at});
  return Tvg::build(n, instants, contacts);
}

// Small random TVG from a caller-owned generator, independent of the synth
// module so property tests do not lean on the code they check.
inline Tvg random_small_tvg(std::mt19937_64& rng, std::uint32_t max_nodes, std::uint32_t max_instants, double p) {
  std::uniform_int_distribution<std::uint32_t> nodes(1, max_nodes), instants(1, max_instants);
  std::bernoulli_distribution coin(p);
  const std::uint32_t n = nodes(rng), big_n = instants(rng);
  std::vector<Contact> contacts;
  for (TimeIndex t = 0; t < big_n; ++t)
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = a + 1; b < n; ++b)
        if (coin(rng)) contacts.push_back({a, b, t});
  return Tvg::build(n, big_n, contacts);
}

// Cover steps computed on the expanded digraph: smallest s whose oracle
// reach set holds `required` nodes, or -1 if no budget suffices.
inline long oracle_cover_steps(const Tvg& tvg, TemporalNode start, std::uint32_t required) {
  const auto g = oracle::expand(tvg);
  for (std::uint32_t s = 0; s <= tvg.num_instants() - start.time; ++s) {
    if (oracle::reach(g, start, s).size() >= required) return s;
  }
  return -1;
}

}  // namespace tcent::testing
