#include "colmah/tables.hpp"

#include <charconv>
#include <stdexcept>

namespace colmah {

namespace embedded {
extern const char* const kTable1;
extern const char* const kTable2;
extern const char* const kTable3;
extern const char* const kTable4;
}  // namespace embedded

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  while (true) {
    const auto pos = line.find(sep);
    fields.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line.remove_prefix(pos + 1);
  }
  return fields;
}

std::vector<std::string_view> lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

int to_int(std::string_view s) {
  int out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad integer field '" + std::string(s) + "'");
  }
  return out;
}

}  // namespace

std::vector<TableCell> parse_table_csv(std::string_view csv) {
  const auto rows = lines(csv);
  if (rows.empty() || rows.front() != "c,n,value,source_table") {
    throw std::invalid_argument("table CSV must start with header c,n,value,source_table");
  }
  std::vector<TableCell> cells;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = split(rows[i], ',');
    if (f.size() != 4) throw std::invalid_argument("table CSV row needs 4 fields");
    cells.push_back({to_int(f[0]), to_int(f[1]), ExactInt(std::string(f[2])), std::string(f[3])});
  }
  return cells;
}

const std::vector<TableCell>& derangement_inversion_table() {
  static const auto cells = parse_table_csv(embedded::kTable2);
  return cells;
}

const std::vector<TableCell>& involution_count_table() {
  static const auto cells = parse_table_csv(embedded::kTable3);
  return cells;
}

const std::vector<TableCell>& involution_inversion_table() {
  static const auto cells = parse_table_csv(embedded::kTable4);
  return cells;
}

const std::vector<ListingEntry>& distribution_listing() {
  static const auto entries = [] {
    const auto rows = lines(embedded::kTable1);
    if (rows.empty() || rows.front() != "k,statistic,permutation") {
      throw std::invalid_argument("listing CSV must start with header k,statistic,permutation");
    }
    std::vector<ListingEntry> out;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto f = split(rows[i], ',');
      if (f.size() != 3) throw std::invalid_argument("listing CSV row needs 3 fields");
      const auto kind = parse_statistic(f[1]);
      if (!kind) throw std::invalid_argument("unknown statistic '" + std::string(f[1]) + "'");
      out.push_back({to_int(f[0]), *kind, std::string(f[2])});
    }
    return out;
  }();
  return entries;
}

std::string_view embedded_csv(int which) {
  switch (which) {
    case 1: return embedded::kTable1;
    case 2: return embedded::kTable2;
    case 3: return embedded::kTable3;
    case 4: return embedded::kTable4;
  }
  throw std::invalid_argument("tables are numbered 1 to 4");
}

}  // namespace colmah
