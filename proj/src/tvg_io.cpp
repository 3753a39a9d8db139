#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

#include "tcent/tvg.hpp"

namespace tcent {
namespace {

constexpr std::string_view kMagic = "tvg";
constexpr std::string_view kVersion = "v1";

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_u32(std::string_view s, std::uint32_t& value) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw DataError("tvg line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

void write_tvg(std::ostream& out, const Tvg& tvg) {
  out << kMagic << ' ' << kVersion << ' ' << tvg.num_nodes() << ' ' << tvg.num_instants() << '\n';
  for (TimeIndex t = 0; t < tvg.num_instants(); ++t) {
    for (const auto& [a, b] : tvg.snapshot(t)) out << t << ' ' << a << ' ' << b << '\n';
  }
}

std::string to_tvg_string(const Tvg& tvg) {
  std::ostringstream out;
  write_tvg(out, tvg);
  return out.str();
}

Tvg read_tvg(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint32_t num_nodes = 0, num_instants = 0;
  bool have_header = false;
  std::vector<Contact> contacts;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_ws(line);
    if (fields.empty()) continue;
    if (!have_header) {
      if (fields.size() != 4 || fields[0] != kMagic) fail(line_no, "expected header 'tvg v1 <nodes> <instants>'");
      if (fields[1] != kVersion) fail(line_no, "unsupported format version '" + std::string(fields[1]) + "'");
      if (!parse_u32(fields[2], num_nodes) || !parse_u32(fields[3], num_instants) || num_nodes == 0 ||
          num_instants == 0) {
        fail(line_no, "node and instant counts must be positive integers");
      }
      have_header = true;
      continue;
    }
    Contact c;
    if (fields.size() != 3 || !parse_u32(fields[0], c.time) || !parse_u32(fields[1], c.a) ||
        !parse_u32(fields[2], c.b)) {
      fail(line_no, "expected '<time> <a> <b>'");
    }
    if (c.a == c.b) fail(line_no, "self-contact");
    if (c.a >= num_nodes || c.b >= num_nodes) fail(line_no, "node index out of range");
    if (c.time >= num_instants) fail(line_no, "time index out of range");
    contacts.push_back(c);
  }
  if (!have_header) throw DataError("tvg: empty input, missing header");
  return Tvg::build(num_nodes, num_instants, contacts);
}

Tvg load_tvg_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open TVG file '" + path + "'");
  return read_tvg(in);
}

void save_tvg_file(const std::string& path, const Tvg& tvg) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write TVG file '" + path + "'");
  write_tvg(out, tvg);
  if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace tcent
