#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tcent {

/// Dense node index in [0, num_nodes).
using NodeId = std::uint32_t;
/// Snapshot index in [0, num_instants).
using TimeIndex = std::uint32_t;

/// Raised for malformed or inconsistent input data (bad indices, corrupt
/// files, self-contacts). Argument misuse raises std::invalid_argument.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (node, instant) pair; the vertex set of the time-expanded view.
struct TemporalNode {
  NodeId node = 0;
  TimeIndex time = 0;

  friend bool operator==(const TemporalNode&, const TemporalNode&) = default;
};

/// Undirected co-presence of two nodes at one instant. A contact {a, b} at
/// t_i stands for the temporal edges (a, t_i, b, t_i+1) and (b, t_i, a, t_i+1).
struct Contact {
  NodeId a = 0;
  NodeId b = 0;
  TimeIndex time = 0;

  /// Same contact with endpoints ordered so that a < b.
  [[nodiscard]] Contact canonical() const noexcept {
    return a < b ? *this : Contact{b, a, time};
  }

  friend auto operator<=>(const Contact& l, const Contact& r) noexcept {
    return std::tie(l.time, l.a, l.b) <=> std::tie(r.time, r.a, r.b);
  }
  friend bool operator==(const Contact&, const Contact&) = default;
};

/// Time-varying graph H = (V, E, T) stored as a sequence of snapshots over a
/// fixed node set. Immutable after construction; safe for concurrent reads.
///
/// Contacts are held in one array sorted by (time, a, b). Each snapshot also
/// owns a sorted list of directed (node, neighbor) half-edges so that
/// neighbor queries are a binary search and return contiguous spans.
class Tvg {
 public:
  using NodePair = std::pair<NodeId, NodeId>;

  /// Builds a TVG from arbitrary contacts. Endpoints are canonicalized and
  /// duplicates dropped. Throws DataError on self-contacts or out-of-range
  /// node/time indices, std::invalid_argument if num_nodes or num_instants
  /// is zero.
  static Tvg build(std::uint32_t num_nodes, std::uint32_t num_instants,
                   std::span<const Contact> contacts);

  [[nodiscard]] std::uint32_t num_nodes() const noexcept { return num_nodes_; }
  [[nodiscard]] std::uint32_t num_instants() const noexcept { return num_instants_; }

  /// Canonical (a < b) contacts of one snapshot, sorted by (a, b).
  [[nodiscard]] std::span<const NodePair> snapshot(TimeIndex t) const;

  /// All contacts sorted by (time, a, b).
  [[nodiscard]] std::vector<Contact> contacts() const;
  [[nodiscard]] std::size_t num_contacts() const noexcept { return pairs_.size(); }

  /// Sorted neighbors of `node` in snapshot `t`. Throws std::out_of_range.
  [[nodiscard]] std::span<const NodeId> neighbors(NodeId node, TimeIndex t) const;

  /// Optional human-readable node names (set by ingestion).
  [[nodiscard]] const std::map<NodeId, std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::map<NodeId, std::string> labels);

  friend bool operator==(const Tvg& l, const Tvg& r) noexcept {
    return l.num_nodes_ == r.num_nodes_ && l.num_instants_ == r.num_instants_ &&
           l.offsets_ == r.offsets_ && l.pairs_ == r.pairs_;
  }

 private:
  std::uint32_t num_nodes_ = 0;
  std::uint32_t num_instants_ = 0;
  // Snapshot t owns pairs_[offsets_[t], offsets_[t+1]) and the half-edges
  // [2*offsets_[t], 2*offsets_[t+1]) of half_src_/half_dst_, sorted by
  // (src, dst).
  std::vector<std::uint32_t> offsets_;
  std::vector<NodePair> pairs_;
  std::vector<NodeId> half_src_;
  std::vector<NodeId> half_dst_;
  std::map<NodeId, std::string> labels_;
};

/// Fraction of node pairs, active in at least one of two consecutive
/// snapshots, whose connection state differs between them. Pooled over all
/// consecutive pairs (i, i+1). Returns 0 when no pair is ever active.
/// Throws std::invalid_argument for fewer than two snapshots.
[[nodiscard]] double churn_rate(const Tvg& tvg);

/// Whether snapshot t, viewed as a static graph on all nodes, is connected.
[[nodiscard]] bool snapshot_connected(const Tvg& tvg, TimeIndex t);

// Canonical text format:
//
//   tvg v1 <num_nodes> <num_instants>
//   <time> <a> <b>          one line per contact, a < b, sorted by (time, a, b)
//
// Output is byte-for-byte deterministic for a given TVG. Labels are not part
// of the format.
void write_tvg(std::ostream& out, const Tvg& tvg);
[[nodiscard]] std::string to_tvg_string(const Tvg& tvg);

/// Parses the canonical format. Accepts LF or CRLF. Throws DataError with
/// the offending line number on malformed input.
[[nodiscard]] Tvg read_tvg(std::istream& in);
[[nodiscard]] Tvg load_tvg_file(const std::string& path);
void save_tvg_file(const std::string& path, const Tvg& tvg);

}  // namespace tcent
