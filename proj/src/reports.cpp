#include "colmah/reports.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "colmah/cap.hpp"
#include "colmah/oracle.hpp"
#include "colmah/special.hpp"
#include "colmah/statistics.hpp"
#include "colmah/tables.hpp"

namespace colmah {
namespace {

std::string str(int x) { return std::to_string(x); }

void add_cell(TableReport& r, std::string section, const TableCell& cell, const ExactInt& actual) {
  const bool ok = cell.value == actual;
  ++r.cells;
  r.mismatches += !ok;
  r.rows.push_back({std::move(section), str(cell.c), str(cell.n), "", cell.value.str(), actual.str(),
                    ok ? "match" : "mismatch"});
}

void add_summary(TableReport& r) {
  r.rows.push_back({"summary", "", "", "", std::to_string(r.cells) + " cells",
                    std::to_string(r.mismatches) + " mismatches", r.clean() ? "pass" : "fail"});
}

// The listed c = 2, n = 3 elements against the enumerated level sets.
TableReport listing_report(const ExactInt& cap) {
  constexpr int n = 3;
  constexpr int c = 2;
  TableReport r;
  r.which = 1;
  for (auto stat : {StatisticKind::InvC, StatisticKind::TildeInvC}) {
    std::map<std::int64_t, std::set<std::string>> listed;
    for (const auto& entry : distribution_listing()) {
      if (entry.statistic == stat) {
        listed[entry.k].insert(format(parse_colored(entry.permutation, c, n)));
      }
    }
    const auto dist = distribution(n, c, ClassKind::All, stat, cap);
    const std::string name(statistic_name(stat));
    for (std::size_t k = 0; k < dist.histogram.size(); ++k) {
      const auto expected = static_cast<std::int64_t>(listed[static_cast<std::int64_t>(k)].size());
      const bool ok = dist.histogram[k] == expected;
      ++r.cells;
      r.mismatches += !ok;
      r.rows.push_back({"histogram_" + name, str(c), str(n), std::to_string(k), std::to_string(expected),
                        dist.histogram[k].str(), ok ? "match" : "mismatch"});
    }
    for (const auto& [k, perms] : listed) {
      std::set<std::string> found;
      for (const auto& sigma : elements_with_value(n, c, stat, k, cap)) found.insert(format(sigma));
      const bool ok = found == perms;
      ++r.cells;
      r.mismatches += !ok;
      r.rows.push_back({"set_" + name, str(c), str(n), std::to_string(k), std::to_string(perms.size()),
                        std::to_string(found.size()), ok ? "match" : "mismatch"});
    }
  }
  add_summary(r);
  return r;
}

TableReport formula_table(int which, const std::vector<TableCell>& cells,
                          ExactInt (*formula)(int, int)) {
  TableReport r;
  r.which = which;
  for (const auto& cell : cells) add_cell(r, "cells", cell, formula(cell.n, cell.c));
  add_summary(r);
  return r;
}

constexpr int kFitMaxColor = 12;
constexpr int kOracleMaxColor = 6;
const ExactInt kOracleCap = 1'000'000;

std::string describe_shift(int color, int shift) {
  std::string index = "n";
  if (shift > 0) index += "+" + str(shift);
  if (shift < 0) index += str(shift);
  return "r_{" + index + "}^(" + str(color) + ")";
}

TableReport involution_count_report(const ExactInt& cap) {
  TableReport r;
  r.which = 3;
  r.must_match = false;
  const auto& cells = involution_count_table();
  for (const auto& cell : cells) {
    const auto computed = involution_count(cell.n, cell.c);
    r.rows.push_back({"printed_vs_formula", str(cell.c), str(cell.n), "", cell.value.str(), computed.str(),
                      cell.value == computed ? "equal" : "differs"});
  }
  for (const auto& fit : involution_table_row_fits()) {
    const bool aligned = fit.found && fit.color == fit.row_label && fit.shift == 0;
    r.rows.push_back({"row_fit", str(fit.row_label), "", "", describe_shift(fit.row_label, 0),
                      fit.found ? describe_shift(fit.color, fit.shift) : "no fit",
                      !fit.found ? "unexplained" : aligned ? "aligned" : "shifted"});
  }
  // Ground truth for the formula is enumeration, not the printed table.
  const ExactInt oracle_cap = cap < kOracleCap ? cap : kOracleCap;
  for (int c = 1; c <= kOracleMaxColor; ++c) {
    for (int n = 0; group_order(n, c) <= oracle_cap; ++n) {
      const auto dist = distribution(n, c, ClassKind::Involutions, StatisticKind::InvC, oracle_cap);
      add_cell(r, "formula_vs_oracle", TableCell{c, n, dist.total_count, "oracle"}, involution_count(n, c));
    }
  }
  add_summary(r);
  return r;
}

}  // namespace

std::vector<RowFit> involution_table_row_fits() {
  std::map<int, std::vector<const TableCell*>> rows;
  for (const auto& cell : involution_count_table()) rows[cell.c].push_back(&cell);
  std::vector<RowFit> fits;
  for (const auto& [label, cells] : rows) {
    RowFit fit{label};
    // Prefer the row's own label, then the nearest shift.
    std::vector<int> colors{label};
    for (int color = 1; color <= kFitMaxColor; ++color) {
      if (color != label) colors.push_back(color);
    }
    for (int shift : {0, -1, 1}) {
      for (int color : colors) {
        bool all = true;
        for (const auto* cell : cells) all = all && involution_count(cell->n + shift, color) == cell->value;
        if (all && !fit.found) {
          fit.found = true;
          fit.color = color;
          fit.shift = shift;
        }
      }
    }
    fits.push_back(fit);
  }
  return fits;
}

TableReport table_report(int which, const ExactInt& cap) {
  switch (which) {
    case 1: return listing_report(cap);
    case 2: return formula_table(2, derangement_inversion_table(), t_colored);
    case 3: return involution_count_report(cap);
    case 4: return formula_table(4, involution_inversion_table(), involution_inv_total);
  }
  throw std::invalid_argument("table must be 1, 2, 3 or 4");
}

std::string table_report_csv(const TableReport& report) {
  std::string out;
  for (const char* column : kTableColumns) out += std::string(out.empty() ? "" : ",") + column;
  out += '\n';
  for (const auto& row : report.rows) {
    out += row.section + ',' + row.c + ',' + row.n + ',' + row.k + ',' + row.expected + ',' + row.actual +
           ',' + row.status + '\n';
  }
  return out;
}

std::string table_report_json(const TableReport& report) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    const std::string* fields[] = {&row.section, &row.c, &row.n, &row.k, &row.expected, &row.actual, &row.status};
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < std::size(fields); ++i) {
      if (fields[i]->empty()) {
        obj[kTableColumns[i]] = nullptr;
      } else {
        obj[kTableColumns[i]] = *fields[i];
      }
    }
    rows.push_back(std::move(obj));
  }
  nlohmann::ordered_json doc = {{"table", report.which},
                                {"must_match", report.must_match},
                                {"cells", report.cells},
                                {"mismatches", report.mismatches},
                                {"rows", rows}};
  return doc.dump(2) + "\n";
}

}  // namespace colmah
