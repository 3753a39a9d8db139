#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tcent/diffusion.hpp"
#include "tcent/tvg.hpp"

namespace tcent {

enum class MetricKind { CoverTime, Coverage };

/// Which time-centrality metric to evaluate: CT(t_i, tau) or TCC(t_i, phi).
struct MetricSpec {
  MetricKind kind = MetricKind::CoverTime;
  std::uint32_t required_count = 1;  // CT only
  std::uint32_t phi = 1;             // TCC only
  std::string parameter;             // tau text or phi, for reports

  static MetricSpec cover_time(const CoverageThreshold& thr);
  static MetricSpec coverage(std::uint32_t phi);

  /// "ct" or "tcc".
  [[nodiscard]] std::string name() const;
};

/// A metric value. CT may be infinite; TCC never is. Values are the exact
/// quotient sum / |V| (CT) or sum / |V|^2 (TCC), correctly rounded, so equal
/// rationals compare equal.
struct MetricValue {
  double value = 0.0;
  bool finite = true;

  static MetricValue inf() noexcept { return {0.0, false}; }

  friend bool operator==(const MetricValue& l, const MetricValue& r) noexcept {
    return l.finite == r.finite && (!l.finite || l.value == r.value);
  }
};

/// Half-open range [first, last) of start instants.
struct EvalRange {
  TimeIndex first = 0;
  TimeIndex last = 0;

  [[nodiscard]] std::uint32_t size() const noexcept { return last - first; }
};

/// [0, ceil(0.825 * N)): leaves the tail of the TVG as room for spreading.
[[nodiscard]] EvalRange default_eval_range(std::uint32_t num_instants);

struct MetricTable {
  MetricSpec spec;
  std::uint32_t num_nodes = 0;
  TimeIndex first = 0;
  std::vector<MetricValue> values;           // values[i] is for instant first + i
  std::vector<std::uint32_t> unreached;      // CT: starts that never reach tau; TCC: zeros

  [[nodiscard]] TimeIndex time_at(std::size_t i) const noexcept {
    return first + static_cast<TimeIndex>(i);
  }
};

/// CT(t_i, tau): mean of d_t over all start nodes, or infinite as soon as one
/// start node misses the target. `unreached` (if given) receives how many
/// start nodes missed it.
[[nodiscard]] MetricValue cover_time(const Tvg& tvg, TimeIndex t, const CoverageThreshold& thr,
                                     std::uint32_t* unreached = nullptr);

/// TCC(t_i, phi) = sum over start nodes of d_c, divided by |V|^2.
[[nodiscard]] double tcc(const Tvg& tvg, TimeIndex t, std::uint32_t phi);

/// Evaluates the metric at every instant of `range`. Work is split over
/// `workers` threads (0 = hardware concurrency); the result does not depend
/// on the worker count. Throws std::invalid_argument for an empty range or
/// one reaching past the TVG.
[[nodiscard]] MetricTable metric_sweep(const Tvg& tvg, const MetricSpec& spec, EvalRange range,
                                       unsigned workers = 0);

struct RankedInstant {
  TimeIndex time = 0;
  MetricValue value;

  friend bool operator==(const RankedInstant&, const RankedInstant&) = default;
};

/// True if `l` is more central than `r` under the table's metric: lower CT
/// (infinite last), higher TCC; ties go to the earlier instant.
[[nodiscard]] bool more_central(MetricKind kind, const RankedInstant& l, const RankedInstant& r) noexcept;

/// The k most central instants, most central first (fewer if the table is
/// shorter). Throws std::invalid_argument for k == 0 or an empty table.
[[nodiscard]] std::vector<RankedInstant> rank_instants(const MetricTable& table, std::size_t k);

enum class DistributionKind { Cdf, Ccdf };

/// Empirical distribution over finite values. CDF points are
/// (x, fraction of values <= x); CCDF points are (x, fraction >= x).
struct Distribution {
  DistributionKind kind = DistributionKind::Cdf;
  std::vector<std::pair<double, double>> points;
  std::size_t excluded = 0;  // infinite entries left out
  std::size_t counted = 0;   // finite entries used
};

/// Throws DataError if every value is infinite, std::invalid_argument if the
/// table is empty.
[[nodiscard]] Distribution empirical_distribution(const MetricTable& table, DistributionKind kind);

/// Median of finite values; the mean of the two middle values for even
/// counts. Infinite values sort last, so a median landing on one is
/// infinite. Throws std::invalid_argument on empty input.
[[nodiscard]] MetricValue median(std::vector<MetricValue> values);

struct GroupSummary {
  std::vector<RankedInstant> members;
  MetricValue min;
  MetricValue median;
  MetricValue max;
};

struct TopKComparison {
  MetricSpec spec;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  GroupSummary top;     // most central first
  GroupSummary random;  // in draw order
};

/// Contrasts the k most central instants with k instants drawn uniformly
/// without replacement from the rest of the table (seeded std::mt19937_64,
/// partial Fisher-Yates with rejection-sampled bounded draws). Throws
/// std::invalid_argument unless the table holds at least 2k instants.
[[nodiscard]] TopKComparison compare_topk_random(const MetricTable& table, std::size_t k, std::uint64_t seed);

// CSV formats. Numbers use the shortest text that round-trips the double;
// infinite values are written as `inf`.
//   table:        time_index,value,unreached_starts
//   distribution: value,cum_fraction
//   ranking:      rank,time_index,value
//   comparison:   group,position,time_index,value
[[nodiscard]] std::string format_value(double v);
[[nodiscard]] std::string format_value(const MetricValue& v);
void write_table_csv(std::ostream& out, const MetricTable& table);
void write_distribution_csv(std::ostream& out, const Distribution& dist);
void write_ranking_csv(std::ostream& out, const std::vector<RankedInstant>& ranking);
void write_comparison_csv(std::ostream& out, const TopKComparison& cmp);
void write_comparison_summary(std::ostream& out, const TopKComparison& cmp);

/// Reads a table written by write_table_csv. The metric kind is not stored
/// in the file and must be supplied. Instants must be consecutive.
[[nodiscard]] MetricTable read_table_csv(std::istream& in, MetricKind kind);

}  // namespace tcent
