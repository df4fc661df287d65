#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "colmah/exact.hpp"
#include "colmah/statistics.hpp"

namespace colmah {

// One row of a golden table CSV with header "c,n,value,source_table".
struct TableCell {
  int c = 0;
  int n = 0;
  ExactInt value;
  std::string source;
};

std::vector<TableCell> parse_table_csv(std::string_view csv);

// Published tables embedded at build time from data/*.csv.
const std::vector<TableCell>& derangement_inversion_table();  // which = 2: t_n^(c)
const std::vector<TableCell>& involution_count_table();       // which = 3: r_n^(c), rows misaligned
const std::vector<TableCell>& involution_inversion_table();   // which = 4: i_n^(c)

// The inline c = 2, n = 3 listing: every element of G_{2,3} by value k of
// inv_c or tilde_inv_c. CSV header "k,statistic,permutation".
struct ListingEntry {
  std::int64_t k = 0;
  StatisticKind statistic = StatisticKind::InvC;
  std::string permutation;
};
const std::vector<ListingEntry>& distribution_listing();

std::string_view embedded_csv(int which);

}  // namespace colmah
