// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "colmah/cap.hpp"
#include "colmah/cli.hpp"
#include "colmah/lehmer.hpp"
#include "colmah/mahonian.hpp"
#include "colmah/oracle.hpp"
#include "colmah/reports.hpp"
#include "colmah/special.hpp"
#include "colmah/tables.hpp"

using namespace colmah;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    o.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  }
  failures += !o.pass;
  std::printf("%s criterion %2d  %-44s %8.3f s  %s\n", o.pass ? "PASS" : "FAIL", id, title, seconds,
              o.detail.c_str());
  std::fflush(stdout);
}

const ExactInt kCap = 1'000'000;
constexpr int kMaxColors = 10;

// (c, n) with c <= kMaxColors and c^n n! <= cap. The cap alone admits every
// c at n = 0 and c up to the cap at n = 1.
std::vector<std::pair<int, int>> enumerable(const ExactInt& cap) {
  std::vector<std::pair<int, int>> out;
  for (int c = 1; c <= kMaxColors; ++c) {
    for (int n = 0; group_order(n, c) <= cap; ++n) out.emplace_back(c, n);
  }
  return out;
}

// Largest-c points just inside the cap for n = 1..4, beyond kMaxColors.
std::vector<std::pair<int, int>> wide_points(const ExactInt& cap) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n <= 4; ++n) {
    int c = kMaxColors;
    while (group_order(n, c + 1) <= cap) ++c;
    if (c > kMaxColors) out.emplace_back(c, n);
  }
  return out;
}

struct Census {
  Distribution all;
  Distribution derangements;
  Distribution involutions;
};
std::map<std::pair<int, int>, Census> census;

const Census& census_of(int c, int n) {
  auto it = census.find({c, n});
  if (it == census.end()) {
    Census x{distribution(n, c, ClassKind::All, StatisticKind::InvC, kCap),
             distribution(n, c, ClassKind::Derangements, StatisticKind::InvC, kCap),
             distribution(n, c, ClassKind::Involutions, StatisticKind::InvC, kCap)};
    it = census.emplace(std::pair{c, n}, std::move(x)).first;
  }
  return it->second;
}

std::string at(int c, int n) { return "(c=" + std::to_string(c) + ", n=" + std::to_string(n) + ")"; }

}  // namespace

int main() {
  criterion(1, "derangement inversion table (63 cells)", 1.0, [] {
    Outcome o;
    const auto r = table_report(2, kCap);
    o.require(r.cells == 63, std::to_string(r.cells) + " cells");
    o.require(r.clean(), std::to_string(r.mismatches) + " mismatches");
    o.require(t_colored(7, 9) == ExactInt("2671026822324"), "t_7^(9)");
    o.detail = o.pass ? "63 cells, 0 mismatches, t_7^(9) = 2671026822324" : o.detail;
    return o;
  });

  criterion(2, "involution inversion table (72 cells)", 1.0, [] {
    Outcome o;
    const auto r = table_report(4, kCap);
    o.require(r.cells == 72, std::to_string(r.cells) + " cells");
    o.require(r.clean(), std::to_string(r.mismatches) + " mismatches");
    if (o.pass) o.detail = "72 cells, 0 mismatches";
    return o;
  });

  criterion(3, "c=2, n=3 distribution listing", 1.0, [] {
    Outcome o;
    const std::vector<ExactInt> published{1, 3, 5, 7, 8, 8, 7, 5, 3, 1};
    o.require(distribution(3, 2, ClassKind::All, StatisticKind::InvC, kCap).histogram == published,
              "inv_c histogram");
    o.require(distribution(3, 2, ClassKind::All, StatisticKind::TildeInvC, kCap).histogram == published,
              "tilde_inv_c histogram");
    for (std::size_t k = 0; k < published.size(); ++k) {
      const auto level = elements_with_value(3, 2, StatisticKind::InvC, static_cast<std::int64_t>(k), kCap);
      std::set<std::string> distinct;
      for (const auto& s : level) distinct.insert(format(s));
      o.require(distinct.size() == published[k], "level set size at k=" + std::to_string(k));
    }
    const auto r = table_report(1, kCap);
    o.require(r.clean(), std::to_string(r.mismatches) + " listed sets differ from enumeration");
    if (o.pass) o.detail = "both histograms (1,3,5,7,8,8,7,5,3,1); all listed level sets equal";
    return o;
  });

  criterion(4, "involution count table: oracle + misalignment", 0, [] {
    Outcome o;
    std::size_t pairs = 0;
    for (int c = 1; c <= 6; ++c) {
      for (int n = 0; group_order(n, c) <= kCap; ++n, ++pairs) {
        o.require(involution_count(n, c) == census_of(c, n).involutions.total_count, "r_n at " + at(c, n));
      }
    }
    const auto r = table_report(3, kCap);
    o.require(r.clean(), "formula vs oracle section has mismatches");
    std::size_t documented = 0;
    std::string fits;
    for (const auto& row : r.rows) {
      if (row.section != "row_fit") continue;
      documented += row.status == "shifted";
      fits += (fits.empty() ? "" : " ") + row.c + ":" + row.actual;
    }
    o.require(documented == 8, "expected 8 documented shifted rows, got " + std::to_string(documented));
    if (o.pass) o.detail = std::to_string(pairs) + " (c,n) pairs match enumeration; rows " + fits;
    return o;
  });

  criterion(5, "seven-way method agreement n<=8, c<=4", 10.0, [] {
    Outcome o;
    for (auto m : kAllMethods) {
      o.require(i_colored(m, 4, 2, 3) == 10, "i_3(4,2) by " + std::string(method_name(m)));
      o.require(i_colored(m, 4, 2, 1) == 5, "i_1(4,2) by " + std::string(method_name(m)));
      if (m != MahonianMethod::KnuthNetto) {
        o.require(i_colored(m, 4, 5, 2) == 32, "i_2(4,5) by " + std::string(method_name(m)));
      }
    }
    std::size_t values = 0;
    for (int c = 1; c <= 4; ++c) {
      for (int n = 0; n <= 8; ++n) {
        const auto reference = i_colored_row(MahonianMethod::GenFunc, n, c);
        for (auto m : kAllMethods) {
          if (m == MahonianMethod::KnuthNetto) {
            for (int k = 0; k <= n; ++k, ++values) {
              const ExactInt expected = k < static_cast<int>(reference.size()) ? reference[k] : ExactInt(0);
              o.require(i_colored_knuth_netto(n, k, c) == expected, "knuth_netto at " + at(c, n));
            }
          } else {
            const auto row = i_colored_row(m, n, c);
            values += row.size();
            o.require(row == reference, std::string(method_name(m)) + " at " + at(c, n));
          }
        }
      }
    }
    if (o.pass) o.detail = std::to_string(values) + " values agree; spot values 10, 5, 32";
    return o;
  });

  criterion(6, "equidistribution: group, codes, product", 120.0, [] {
    Outcome o;
    auto pairs = enumerable(kCap);
    for (const auto& p : wide_points(kCap)) pairs.push_back(p);
    for (const auto& [c, n] : pairs) {
      const auto& hist = c <= kMaxColors ? census_of(c, n).all.histogram
                                         : distribution(n, c, ClassKind::All, StatisticKind::InvC, kCap).histogram;
      const auto codes = code_sum_histogram(n, c, kCap);
      const auto gf = gf_colored(n, c);
      bool same = hist.size() == codes.size() && hist == codes &&
                  static_cast<std::int64_t>(hist.size()) == gf.degree() + 1;
      for (std::size_t k = 0; same && k < hist.size(); ++k) same = hist[k] == gf.coefficient(k);
      o.require(same, "histograms differ at " + at(c, n));
    }
    if (o.pass) {
      o.detail = std::to_string(pairs.size()) + " (c,n) pairs, c <= 10 plus largest c for n = 1..4";
    }
    return o;
  });

  criterion(7, "inversion totals", 0, [] {
    Outcome o;
    for (int c = 1; c <= kMaxColors; ++c) {
      o.require(total_inversions_closed(1, c) == binomial(c, 2), "I_{c,1} at c=" + std::to_string(c));
      for (int n = 0; n <= 30; ++n) {
        const auto closed = total_inversions_closed(n, c);
        o.require(total_inversions_recurrence(n, c) == closed, "recurrence at " + at(c, n));
        o.require(total_inversions_ratio_chain(n, c) == closed, "ratio chain at " + at(c, n));
      }
    }
    std::size_t oracle = 0;
    for (const auto& [c, n] : enumerable(kCap)) {
      if (n > 8) continue;
      ++oracle;
      o.require(census_of(c, n).all.first_moment() == total_inversions_closed(n, c), "oracle at " + at(c, n));
    }
    if (o.pass) o.detail = "formulas agree n<=30, c<=10; oracle agrees on " + std::to_string(oracle) + " pairs";
    return o;
  });

  criterion(8, "derangements", 0, [] {
    Outcome o;
    for (int c = 1; c <= kMaxColors; ++c) {
      for (int n = 0; n <= 30; ++n) {
        o.require(derangement_count(n, c) == derangement_count_recurrence(n, c), "recurrence at " + at(c, n));
      }
    }
    const auto pairs = enumerable(kCap);
    for (const auto& [c, n] : pairs) {
      const auto& d = census_of(c, n).derangements;
      o.require(d.total_count == derangement_count(n, c), "count at " + at(c, n));
      o.require(d.first_moment() == t_colored(n, c), "total at " + at(c, n));
    }
    for (int n = 0; n <= 12; ++n) o.require(t_classical(n) == t_colored(n, 1), "c=1 at n=" + std::to_string(n));
    if (o.pass) o.detail = "oracle agrees on " + std::to_string(pairs.size()) + " pairs; classical case n<=12";
    return o;
  });

  criterion(9, "involutions", 0, [] {
    Outcome o;
    for (int c = 1; c <= kMaxColors; ++c) {
      for (int n = 0; n <= 30; ++n) {
        o.require(involution_count(n, c) == involution_count_recurrence(n, c), "recurrence at " + at(c, n));
      }
    }
    const auto pairs = enumerable(kCap);
    for (const auto& [c, n] : pairs) {
      const auto& d = census_of(c, n).involutions;
      o.require(d.total_count == involution_count(n, c), "count at " + at(c, n));
      o.require(d.first_moment() == involution_inv_total(n, c), "total at " + at(c, n));
    }
    for (int n = 0; n <= 12; ++n) {
      o.require(involution_inv_total_classical(n) == involution_inv_total(n, 1), "c=1 at n=" + std::to_string(n));
    }
    if (o.pass) o.detail = "oracle agrees on " + std::to_string(pairs.size()) + " pairs; classical case n<=12";
    return o;
  });

  criterion(10, "bijection round-trips and row symmetry", 0, [] {
    Outcome o;
    const ExactInt small = 10'000;
    auto pairs = enumerable(small);
    for (const auto& p : wide_points(small)) pairs.push_back(p);
    std::size_t codes = 0;
    for (const auto& [c, n] : pairs) {
      std::set<std::string> images;
      for (CodeStream s(n, c, small); !s.done(); s.advance(), ++codes) {
        const auto l = s.current();
        const auto sigma = code_to_colored_perm(l);
        o.require(perm_to_code(sigma) == l, "code/perm at " + format(l));
        images.insert(format(sigma));
        const auto [a, b] = split_color(l);
        o.require(join_color(a, b, c) == l, "split/join at " + format(l));
        o.require(encode(decode(a)) == a && decode(encode(decode(a))) == decode(a), "encode/decode at " + format(a));
        o.require(join_radix(split_radix(l), c) == l, "radix split at " + format(l));
        o.require(complement(complement(l)) == l, "complement at " + format(l));
      }
      o.require(images.size() == group_order(n, c), "not a bijection at " + at(c, n));
    }
    for (int c = 1; c <= 4; ++c) {
      for (int n = 0; n <= 8; ++n) {
        for (auto m : kAllMethods) {
          if (m == MahonianMethod::KnuthNetto) continue;
          const auto row = i_colored_row(m, n, c);
          o.require(std::equal(row.begin(), row.end(), row.rbegin()), "row not palindromic at " + at(c, n));
        }
      }
    }
    if (o.pass) o.detail = std::to_string(codes) + " codes over " + std::to_string(pairs.size()) + " (c,n) pairs";
    return o;
  });

  criterion(11, "verify at the default budget", 300.0, [] {
    Outcome o;
    ::unsetenv("MAHONIAN_CAP");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli({"verify"}, out, err);
    o.require(code == 0, "exit code " + std::to_string(code));
    if (o.pass) o.detail = "exit 0 at budget 10^7";
    return o;
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
