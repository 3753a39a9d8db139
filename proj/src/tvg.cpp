#include "tcent/tvg.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tcent {

Tvg Tvg::build(std::uint32_t num_nodes, std::uint32_t num_instants,
               std::span<const Contact> contacts) {
  if (num_nodes == 0) throw std::invalid_argument("TVG needs at least one node");
  if (num_instants == 0) throw std::invalid_argument("TVG needs at least one time instant");

  std::vector<Contact> sorted;
  sorted.reserve(contacts.size());
  for (const Contact& c : contacts) {
    if (c.a == c.b) {
      throw DataError("self-contact on node " + std::to_string(c.a) + " at time " +
                      std::to_string(c.time));
    }
    if (c.a >= num_nodes || c.b >= num_nodes) {
      throw DataError("node index out of range in contact at time " + std::to_string(c.time) +
                      " (num_nodes = " + std::to_string(num_nodes) + ")");
    }
    if (c.time >= num_instants) {
      throw DataError("time index " + std::to_string(c.time) + " out of range (num_instants = " +
                      std::to_string(num_instants) + ")");
    }
    sorted.push_back(c.canonical());
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  Tvg g;
  g.num_nodes_ = num_nodes;
  g.num_instants_ = num_instants;
  g.offsets_.assign(std::size_t{num_instants} + 1, 0);
  g.pairs_.reserve(sorted.size());
  for (const Contact& c : sorted) {
    g.pairs_.emplace_back(c.a, c.b);
    ++g.offsets_[c.time + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());

  g.half_src_.resize(2 * sorted.size());
  g.half_dst_.resize(2 * sorted.size());
  std::vector<NodePair> half;
  for (TimeIndex t = 0; t < num_instants; ++t) {
    half.clear();
    for (const auto& [a, b] : g.snapshot(t)) {
      half.emplace_back(a, b);
      half.emplace_back(b, a);
    }
    std::sort(half.begin(), half.end());
    std::size_t base = 2 * std::size_t{g.offsets_[t]};
    for (std::size_t i = 0; i < half.size(); ++i) {
      g.half_src_[base + i] = half[i].first;
      g.half_dst_[base + i] = half[i].second;
    }
  }
  return g;
}

std::span<const Tvg::NodePair> Tvg::snapshot(TimeIndex t) const {
  if (t >= num_instants_) throw std::out_of_range("time index " + std::to_string(t) + " out of range");
  return std::span<const NodePair>(pairs_).subspan(offsets_[t], offsets_[t + 1] - offsets_[t]);
}

std::vector<Contact> Tvg::contacts() const {
  std::vector<Contact> out;
  out.reserve(pairs_.size());
  for (TimeIndex t = 0; t < num_instants_; ++t) {
    for (const auto& [a, b] : snapshot(t)) out.push_back({a, b, t});
  }
  return out;
}

std::span<const NodeId> Tvg::neighbors(NodeId node, TimeIndex t) const {
  if (node >= num_nodes_) throw std::out_of_range("node index " + std::to_string(node) + " out of range");
  if (t >= num_instants_) throw std::out_of_range("time index " + std::to_string(t) + " out of range");
  auto first = half_src_.begin() + 2 * std::ptrdiff_t{offsets_[t]};
  auto last = half_src_.begin() + 2 * std::ptrdiff_t{offsets_[t + 1]};
  auto [lo, hi] = std::equal_range(first, last, node);
  return {half_dst_.data() + (lo - half_src_.begin()), static_cast<std::size_t>(hi - lo)};
}

void Tvg::set_labels(std::map<NodeId, std::string> labels) {
  for (const auto& [id, name] : labels) {
    if (id >= num_nodes_) throw DataError("label for unknown node " + std::to_string(id));
  }
  labels_ = std::move(labels);
}

double churn_rate(const Tvg& tvg) {
  if (tvg.num_instants() < 2) throw std::invalid_argument("churn rate needs at least two snapshots");
  std::uint64_t active = 0;
  std::uint64_t changed = 0;
  for (TimeIndex t = 0; t + 1 < tvg.num_instants(); ++t) {
    auto cur = tvg.snapshot(t);
    auto next = tvg.snapshot(t + 1);
    // Both sorted: merge to count the union and the common part.
    std::size_t i = 0, j = 0, common = 0;
    while (i < cur.size() && j < next.size()) {
      if (cur[i] < next[j]) {
        ++i;
      } else if (next[j] < cur[i]) {
        ++j;
      } else {
        ++common;
        ++i;
        ++j;
      }
    }
    std::size_t uni = cur.size() + next.size() - common;
    active += uni;
    changed += uni - common;
  }
  return active == 0 ? 0.0 : static_cast<double>(changed) / static_cast<double>(active);
}

bool snapshot_connected(const Tvg& tvg, TimeIndex t) {
  const std::uint32_t n = tvg.num_nodes();
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::uint32_t components = n;
  for (const auto& [a, b] : tvg.snapshot(t)) {
    NodeId ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

}  // namespace tcent
