#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcent/tvg.hpp"

namespace tcent {

/// Coverage target tau expressed as the exact number of nodes that must be
/// informed: required_count = ceil(tau * |V|), computed in integer
/// arithmetic from the decimal text of tau.
class CoverageThreshold {
 public:
  /// Parses tau as a plain decimal ("0.1", "1", "0.125") in (0, 1].
  /// Throws std::invalid_argument on anything else.
  static CoverageThreshold from_decimal(std::string_view tau, std::uint32_t num_nodes);
  /// Throws std::invalid_argument unless 1 <= count <= num_nodes.
  static CoverageThreshold from_count(std::uint32_t count, std::uint32_t num_nodes);

  [[nodiscard]] std::uint32_t required_count() const noexcept { return required_; }
  [[nodiscard]] std::uint32_t num_nodes() const noexcept { return num_nodes_; }
  /// Decimal text of tau, or "<count>/<num_nodes>" for count-built thresholds.
  [[nodiscard]] const std::string& text() const noexcept { return text_; }

 private:
  CoverageThreshold(std::uint32_t required, std::uint32_t num_nodes, std::string text)
      : required_(required), num_nodes_(num_nodes), text_(std::move(text)) {}

  std::uint32_t required_;
  std::uint32_t num_nodes_;
  std::string text_;
};

/// When to stop a diffusion. With no field set the diffusion runs until the
/// snapshots are exhausted. A step without growth never stops it.
struct StopRule {
  std::optional<std::uint32_t> required_count;  // stop once |I_s| >= this
  std::optional<std::uint32_t> max_steps;       // stop once s == this
};

/// sizes[s] = |I_s|, the number of informed nodes after s snapshots have
/// been processed, starting from sizes[0] = 1.
struct DiffusionTrace {
  TemporalNode start;
  std::vector<std::uint32_t> sizes;
  bool exhausted = false;  // stopped because no snapshot was left
};

/// Number of steps to reach a coverage target; empty when unreached.
using StepCount = std::optional<std::uint32_t>;

/// Frontier diffusion over one TVG with reusable scratch state. One hop per
/// snapshot: the contacts of snapshot start.time + s take I_s to I_{s+1},
/// and nodes informed during a step relay only from the next snapshot on.
/// The last snapshot is processed too; its recipients count.
///
/// An engine is not thread-safe; use one per worker. The TVG is shared.
class DiffusionEngine {
 public:
  explicit DiffusionEngine(const Tvg& tvg);

  DiffusionTrace diffuse(TemporalNode start, const StopRule& stop = {});

  /// d_t: smallest s with |I_s| >= required_count.
  StepCount cover_steps(TemporalNode start, std::uint32_t required_count);
  StepCount cover_steps(TemporalNode start, const CoverageThreshold& thr) {
    return cover_steps(start, thr.required_count());
  }

  /// d_c: |I_s| for s = min(phi, N - start.time), start node included.
  std::uint32_t constrained_count(TemporalNode start, std::uint32_t phi);

  /// Informed set left by the most recent run, sorted.
  [[nodiscard]] std::vector<NodeId> informed() const;

  [[nodiscard]] const Tvg& tvg() const noexcept { return *tvg_; }

 private:
  static constexpr std::uint32_t kUninformed = UINT32_MAX;

  void reset(TemporalNode start);
  // Applies snapshot start.time + s; returns the new informed count.
  std::uint32_t step(TimeIndex t, std::uint32_t s);

  const Tvg* tvg_;
  std::vector<std::uint32_t> informed_at_;  // step at which a node joined, or kUninformed
  std::vector<NodeId> informed_list_;
};

// One-shot conveniences; each builds a throwaway engine.
[[nodiscard]] DiffusionTrace diffuse(const Tvg& tvg, TemporalNode start, const StopRule& stop = {});
[[nodiscard]] StepCount cover_steps(const Tvg& tvg, TemporalNode start, const CoverageThreshold& thr);
[[nodiscard]] std::uint32_t constrained_count(const Tvg& tvg, TemporalNode start, std::uint32_t phi);

}  // namespace tcent
