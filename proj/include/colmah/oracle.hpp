#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "colmah/cap.hpp"
#include "colmah/exact.hpp"
#include "colmah/perm.hpp"
#include "colmah/special.hpp"
#include "colmah/statistics.hpp"

namespace colmah {

// Streams G_{c,n}: underlying permutations in lexicographic order, and for
// each one every color vector as a base-c counter (last position fastest).
// A non-zero `first_value` restricts the stream to permutations starting
// with that value; those sub-streams, in order 1..n, concatenate to the full
// stream.
class GroupStream {
 public:
  // Throws CapExceeded when c^n n! > cap.
  GroupStream(int n, int c, const ExactInt& cap, int first_value = 0);

  bool done() const { return done_; }
  WindowView view() const { return {values_, colors_, c_}; }
  ColoredPermutation current() const { return ColoredPermutation(c_, values_, colors_); }
  void advance();

 private:
  int n_;
  int c_;
  bool restricted_;
  std::vector<int> values_;
  std::vector<int> colors_;
  bool done_ = false;
};

void for_each_element(int n, int c, const ExactInt& cap,
                      const std::function<void(const ColoredPermutation&)>& visit);

// Exact histogram of a statistic over a class of G_{c,n}.
struct Distribution {
  int c = 1;
  int n = 0;
  ClassKind class_kind = ClassKind::All;
  StatisticKind statistic = StatisticKind::InvC;
  // Indexed by k = 0..max_inv_c(n, c); every statistic here lies in that range.
  std::vector<ExactInt> histogram;
  ExactInt total_count;

  ExactInt first_moment() const;
};

bool in_class(ClassKind kind, WindowView w);

// Enumeration may be split across `threads` workers by first value; the
// result does not depend on the thread count.
Distribution distribution(int n, int c, ClassKind class_kind, StatisticKind statistic,
                          const ExactInt& cap, int threads = 1);
ExactInt total_statistic(int n, int c, ClassKind class_kind, StatisticKind statistic,
                         const ExactInt& cap, int threads = 1);

// Elements of G_{c,n} whose statistic equals k, in stream order.
std::vector<ColoredPermutation> elements_with_value(int n, int c, StatisticKind statistic,
                                                    std::int64_t k, const ExactInt& cap);

// Entry-sum histogram over all colored Lehmer codes of length n.
std::vector<ExactInt> code_sum_histogram(int n, int c, const ExactInt& cap);

// One verification record. `params` and `detail` are plain text; the JSON
// writer renders params as an object.
struct ReportEntry {
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  bool pass = true;
  std::string detail;
};

struct VerifyOptions {
  ExactInt budget = kDefaultCap;
  // Largest number of colors enumerated; the budget alone does not bound c.
  int max_colors = 10;
  // Round-trip checks on every element run only up to this group order.
  std::int64_t bijection_budget = 10'000;
  int threads = 1;
};

// Runs every cross-check: formula-versus-formula identities, golden tables,
// and formula-versus-enumeration for each (c, n) with c <= max_colors and
// c^n n! <= budget. Failures are entries, never exceptions.
std::vector<ReportEntry> verify_suite(const VerifyOptions& options);

// {"identity": ..., "params": {...}, "status": "pass"|"fail", "detail": ...}
std::string report_to_json(const std::vector<ReportEntry>& report);

}  // namespace colmah
