#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcent/tvg.hpp"

namespace tcent {

/// One detected contact from a sensor log.
struct ContactRecord {
  std::int64_t timestamp = 0;  // seconds, epoch or relative
  std::string label_a;
  std::string label_b;

  friend bool operator==(const ContactRecord&, const ContactRecord&) = default;
};

struct IngestConfig {
  std::int64_t granularity_seconds = 30;
  std::optional<std::int64_t> start_timestamp;  // default: earliest record
  std::optional<std::int64_t> end_timestamp;    // default: latest record
};

struct IngestResult {
  Tvg tvg;
  std::size_t rejected = 0;  // records outside [start, end]
  std::int64_t start = 0;
  std::int64_t end = 0;
};

/// Parses `timestamp,label_a,label_b` lines (LF or CRLF). A first line whose
/// first field is `timestamp` is treated as a header; blank lines are
/// skipped. Labels are kept verbatim. Throws DataError naming the line on
/// malformed input, non-integer timestamps, empty labels or self-contacts.
[[nodiscard]] std::vector<ContactRecord> parse_contacts(std::istream& in);

/// Bins records into snapshots of `granularity_seconds`. Record at s lands
/// in snapshot floor((s - start) / granularity); the TVG has
/// floor((end - start) / granularity) + 1 snapshots. Labels map to dense
/// node ids in order of first appearance among accepted records. Records
/// outside [start, end] are dropped and counted in `rejected`.
[[nodiscard]] IngestResult discretize(std::span<const ContactRecord> records,
                                      const IngestConfig& cfg = {});

/// Writes `node_id,label` rows with a header.
void write_labels_csv(std::ostream& out, const Tvg& tvg);

}  // namespace tcent
