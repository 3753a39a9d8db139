#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <string_view>

#include "tcent/centrality.hpp"

namespace tcent {

std::string format_value(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_value(const MetricValue& v) { return v.finite ? format_value(v.value) : "inf"; }

void write_table_csv(std::ostream& out, const MetricTable& table) {
  out << "time_index,value,unreached_starts\n";
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    out << table.time_at(i) << ',' << format_value(table.values[i]) << ',' << table.unreached[i] << '\n';
  }
}

void write_distribution_csv(std::ostream& out, const Distribution& dist) {
  out << "value,cum_fraction\n";
  for (const auto& [x, f] : dist.points) out << format_value(x) << ',' << format_value(f) << '\n';
}

void write_ranking_csv(std::ostream& out, const std::vector<RankedInstant>& ranking) {
  out << "rank,time_index,value\n";
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    out << i + 1 << ',' << ranking[i].time << ',' << format_value(ranking[i].value) << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const TopKComparison& cmp) {
  out << "group,position,time_index,value\n";
  auto rows = [&](std::string_view group, const GroupSummary& g) {
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      out << group << ',' << i + 1 << ',' << g.members[i].time << ',' << format_value(g.members[i].value) << '\n';
    }
  };
  rows("top", cmp.top);
  rows("random", cmp.random);
}

void write_comparison_summary(std::ostream& out, const TopKComparison& cmp) {
  const std::string metric = cmp.spec.name() + (cmp.spec.kind == MetricKind::CoverTime ? "(tau=" : "(phi=") +
                             cmp.spec.parameter + ")";
  out << "metric " << metric << ", k = " << cmp.k << ", seed = " << cmp.seed << '\n';
  auto line = [&](std::string_view group, const GroupSummary& g) {
    out << "  " << group << ": min " << format_value(g.min) << "  median " << format_value(g.median) << "  max "
        << format_value(g.max) << '\n';
  };
  line("top-k   ", cmp.top);
  line("random-k", cmp.random);
}

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw DataError("table line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

MetricTable read_table_csv(std::istream& in, MetricKind kind) {
  MetricTable table;
  table.spec.kind = kind;
  std::string line;
  std::size_t line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      if (line != "time_index,value,unreached_starts") fail(line_no, "unexpected header '" + line + "'");
      header = false;
      continue;
    }
    std::string_view view(line);
    auto c1 = view.find(',');
    auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
    if (c2 == std::string_view::npos) fail(line_no, "expected three fields");
    std::string_view f_time = view.substr(0, c1);
    std::string_view f_value = view.substr(c1 + 1, c2 - c1 - 1);
    std::string_view f_unreached = view.substr(c2 + 1);

    TimeIndex t = 0;
    std::uint32_t unreached = 0;
    auto r1 = std::from_chars(f_time.data(), f_time.data() + f_time.size(), t);
    auto r2 = std::from_chars(f_unreached.data(), f_unreached.data() + f_unreached.size(), unreached);
    if (r1.ec != std::errc{} || r1.ptr != f_time.data() + f_time.size() || r2.ec != std::errc{} ||
        r2.ptr != f_unreached.data() + f_unreached.size()) {
      fail(line_no, "malformed integer field");
    }
    MetricValue v;
    if (f_value == "inf") {
      v = MetricValue::inf();
    } else {
      auto r3 = std::from_chars(f_value.data(), f_value.data() + f_value.size(), v.value);
      if (r3.ec != std::errc{} || r3.ptr != f_value.data() + f_value.size()) fail(line_no, "malformed value");
    }
    if (table.values.empty()) {
      table.first = t;
    } else if (t != table.time_at(table.values.size())) {
      fail(line_no, "time indices must be consecutive");
    }
    table.values.push_back(v);
    table.unreached.push_back(unreached);
  }
  if (header) throw DataError("table: missing header");
  return table;
}

}  // namespace tcent
