#pragma once

#include <string>
#include <vector>

#include "colmah/exact.hpp"

namespace colmah {

// One row of a table reproduction. Empty fields print as empty CSV cells
// and JSON nulls.
struct TableRow {
  std::string section;
  std::string c;
  std::string n;
  std::string k;
  std::string expected;
  std::string actual;
  std::string status;
};

struct TableReport {
  int which = 0;
  // Tables 1, 2 and 4 must reproduce exactly; table 3 is informational
  // except for its formula-versus-enumeration section.
  bool must_match = true;
  std::size_t cells = 0;
  std::size_t mismatches = 0;
  std::vector<TableRow> rows;

  bool clean() const { return mismatches == 0; }
};

// Throws std::invalid_argument unless which is 1..4. `cap` bounds the
// enumerations used by tables 1 and 3.
TableReport table_report(int which, const ExactInt& cap);

// Best (color, index shift) explaining one printed row of the involution
// count table: cell n equals r_{n+shift}^{(color)} for every cell.
struct RowFit {
  int row_label = 0;
  bool found = false;
  int color = 0;
  int shift = 0;
};
std::vector<RowFit> involution_table_row_fits();

inline const char* kTableColumns[] = {"section", "c", "n", "k", "expected", "actual", "status"};

std::string table_report_csv(const TableReport& report);
std::string table_report_json(const TableReport& report);

}  // namespace colmah
