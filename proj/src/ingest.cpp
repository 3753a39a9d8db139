#include "tcent/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <limits>
#include <ostream>
#include <string_view>
#include <unordered_map>

namespace tcent {
namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw DataError("contacts line " + std::to_string(line_no) + ": " + what);
}

bool is_header(std::string_view first_field) {
  std::string lower(first_field);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return lower == "timestamp";
}

}  // namespace

std::vector<ContactRecord> parse_contacts(std::istream& in) {
  std::vector<ContactRecord> records;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    std::string_view view(line);
    auto c1 = view.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
    if (c2 == std::string_view::npos || view.find(',', c2 + 1) != std::string_view::npos) {
      fail(line_no, "expected 'timestamp,label_a,label_b'");
    }
    std::string_view ts = view.substr(0, c1);
    std::string_view a = view.substr(c1 + 1, c2 - c1 - 1);
    std::string_view b = view.substr(c2 + 1);

    if (first_content && is_header(ts)) {
      first_content = false;
      continue;
    }
    first_content = false;

    ContactRecord rec;
    auto [ptr, ec] = std::from_chars(ts.data(), ts.data() + ts.size(), rec.timestamp);
    if (ts.empty() || ec != std::errc{} || ptr != ts.data() + ts.size()) {
      fail(line_no, "timestamp '" + std::string(ts) + "' is not an integer");
    }
    if (a.empty() || b.empty()) fail(line_no, "empty node label");
    if (a == b) fail(line_no, "self-contact for '" + std::string(a) + "'");
    rec.label_a = a;
    rec.label_b = b;
    records.push_back(std::move(rec));
  }
  return records;
}

IngestResult discretize(std::span<const ContactRecord> records, const IngestConfig& cfg) {
  if (cfg.granularity_seconds < 1) throw std::invalid_argument("granularity must be at least 1 second");
  if (records.empty() && !(cfg.start_timestamp && cfg.end_timestamp)) {
    throw std::invalid_argument("no records and no explicit [start, end] range");
  }

  std::int64_t lo = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi = std::numeric_limits<std::int64_t>::min();
  for (const auto& r : records) {
    lo = std::min(lo, r.timestamp);
    hi = std::max(hi, r.timestamp);
  }
  const std::int64_t start = cfg.start_timestamp.value_or(lo);
  const std::int64_t end = cfg.end_timestamp.value_or(hi);
  if (end < start) throw std::invalid_argument("end timestamp precedes start timestamp");

  const std::int64_t bins = (end - start) / cfg.granularity_seconds + 1;
  if (bins > std::numeric_limits<TimeIndex>::max()) throw std::invalid_argument("too many snapshots");

  std::unordered_map<std::string, NodeId> ids;
  std::map<NodeId, std::string> labels;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.try_emplace(label, static_cast<NodeId>(ids.size()));
    if (inserted) labels.emplace(it->second, label);
    return it->second;
  };

  std::vector<Contact> contacts;
  std::size_t rejected = 0;
  for (const auto& r : records) {
    if (r.timestamp < start || r.timestamp > end) {
      ++rejected;
      continue;
    }
    if (r.label_a == r.label_b) throw DataError("self-contact for '" + r.label_a + "'");
    auto t = static_cast<TimeIndex>((r.timestamp - start) / cfg.granularity_seconds);
    NodeId a = id_of(r.label_a);
    NodeId b = id_of(r.label_b);
    contacts.push_back({a, b, t});
  }
  if (ids.empty()) throw DataError("no contacts inside the ingest window; TVG would have no nodes");

  IngestResult result{Tvg::build(static_cast<std::uint32_t>(ids.size()), static_cast<std::uint32_t>(bins),
                                 contacts),
                      rejected, start, end};
  result.tvg.set_labels(std::move(labels));
  return result;
}

void write_labels_csv(std::ostream& out, const Tvg& tvg) {
  out << "node_id,label\n";
  for (const auto& [id, name] : tvg.labels()) out << id << ',' << name << '\n';
}

}  // namespace tcent
