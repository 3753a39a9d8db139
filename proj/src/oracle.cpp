#include "tcent/oracle.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace tcent::oracle {

std::size_t ExpandedDigraph::num_arcs() const noexcept {
  std::size_t n = 0;
  for (const auto& arcs : out) n += arcs.size();
  return n;
}

ExpandedDigraph expand(const Tvg& tvg) {
  ExpandedDigraph g;
  g.num_nodes = tvg.num_nodes();
  g.num_instants = tvg.num_instants();
  g.out.resize(std::size_t{g.num_nodes} * g.num_instants);
  for (const Contact& c : tvg.contacts()) {
    if (c.time + 1 < g.num_instants) {
      g.out[g.vertex(c.a, c.time)].push_back(g.vertex(c.b, c.time + 1));
      g.out[g.vertex(c.b, c.time)].push_back(g.vertex(c.a, c.time + 1));
    } else {
      g.final_contacts.emplace_back(c.a, c.b);
    }
  }
  for (TimeIndex t = 0; t + 1 < g.num_instants; ++t) {
    for (NodeId w = 0; w < g.num_nodes; ++w) g.out[g.vertex(w, t)].push_back(g.vertex(w, t + 1));
  }
  return g;
}

std::vector<NodeId> reach(const ExpandedDigraph& g, TemporalNode start, std::uint32_t steps) {
  if (start.node >= g.num_nodes || start.time >= g.num_instants) {
    throw std::out_of_range("oracle start (" + std::to_string(start.node) + ", " + std::to_string(start.time) +
                            ") outside the expansion");
  }
  const std::uint64_t horizon = std::uint64_t{start.time} + steps;
  const TimeIndex last_level = static_cast<TimeIndex>(std::min<std::uint64_t>(horizon, g.num_instants - 1));

  std::vector<bool> seen(g.num_vertices(), false);
  std::deque<std::uint32_t> queue;
  seen[g.vertex(start.node, start.time)] = true;
  queue.push_back(g.vertex(start.node, start.time));
  std::vector<bool> reached(g.num_nodes, false);
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    const TimeIndex t = x / g.num_nodes;
    reached[x % g.num_nodes] = true;
    if (t >= last_level) continue;
    for (std::uint32_t y : g.out[x]) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }

  // Budget extends beyond t_{N-1}: deliver over the final snapshot once.
  if (horizon >= g.num_instants) {
    std::vector<bool> at_final(g.num_nodes, false);
    for (NodeId v = 0; v < g.num_nodes; ++v) at_final[v] = seen[g.vertex(v, g.num_instants - 1)];
    for (const auto& [a, b] : g.final_contacts) {
      if (at_final[a]) reached[b] = true;
      if (at_final[b]) reached[a] = true;
    }
  }

  std::vector<NodeId> result;
  for (NodeId v = 0; v < g.num_nodes; ++v) {
    if (reached[v]) result.push_back(v);
  }
  return result;
}

}  // namespace tcent::oracle
