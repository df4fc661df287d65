#include "colmah/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "colmah/lehmer.hpp"
#include "colmah/mahonian.hpp"
#include "colmah/tables.hpp"

namespace colmah {

GroupStream::GroupStream(int n, int c, const ExactInt& cap, int first_value)
    : n_(n), c_(c), restricted_(first_value != 0), values_(n), colors_(n, 0) {
  if (n_ < 0 || c_ < 1) throw std::invalid_argument("GroupStream: need n >= 0 and c >= 1");
  if (first_value < 0 || first_value > n_) {
    throw std::invalid_argument("GroupStream: first value outside [1, n]");
  }
  check_cap(n_, c_, cap);
  for (int i = 0; i < n_; ++i) values_[i] = i + 1;
  if (restricted_) std::rotate(values_.begin(), values_.begin() + (first_value - 1), values_.begin() + first_value);
}

void GroupStream::advance() {
  for (int i = n_ - 1; i >= 0; --i) {
    if (++colors_[i] < c_) return;
    colors_[i] = 0;
  }
  const auto begin = values_.begin() + (restricted_ ? 1 : 0);
  if (!std::next_permutation(begin, values_.end())) done_ = true;
}

void for_each_element(int n, int c, const ExactInt& cap,
                      const std::function<void(const ColoredPermutation&)>& visit) {
  for (GroupStream s(n, c, cap); !s.done(); s.advance()) visit(s.current());
}

namespace {

// Word-sized histogram; counts never exceed the enumerated group order.
struct Counts {
  std::vector<std::uint64_t> bins;

  Counts& operator+=(const Counts& other) {
    for (std::size_t k = 0; k < bins.size(); ++k) bins[k] += other.bins[k];
    return *this;
  }
};

std::vector<ExactInt> to_exact(const std::vector<std::uint64_t>& bins) {
  return {bins.begin(), bins.end()};
}

// Runs `visit(acc, window)` over G_{c,n}, one accumulator per first value,
// and sums the accumulators in first-value order.
template <typename Accumulator, typename Visit>
Accumulator accumulate(int n, int c, const ExactInt& cap, int threads, const Accumulator& zero,
                       Visit visit) {
  check_cap(n, c, cap);
  if (n == 0) {
    Accumulator acc = zero;
    GroupStream s(0, c, cap);
    visit(acc, s.view());
    return acc;
  }
  std::vector<Accumulator> parts(n, zero);
  auto run = [&](int v) {
    for (GroupStream s(n, c, cap, v); !s.done(); s.advance()) visit(parts[v - 1], s.view());
  };
  threads = std::clamp(threads, 1, n);
  if (threads == 1) {
    for (int v = 1; v <= n; ++v) run(v);
  } else {
    std::atomic<int> next{1};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int v = next++; v <= n; v = next++) run(v);
      });
    }
    for (auto& worker : pool) worker.join();
  }
  Accumulator total = zero;
  for (const auto& part : parts) total += part;
  return total;
}

std::size_t bins_for(int n, int c) { return static_cast<std::size_t>(kernel::max_inv_c(n, c) + 1); }

}  // namespace

ExactInt Distribution::first_moment() const {
  ExactInt total = 0;
  for (std::size_t k = 1; k < histogram.size(); ++k) total += histogram[k] * k;
  return total;
}

bool in_class(ClassKind kind, WindowView w) {
  switch (kind) {
    case ClassKind::All: return true;
    case ClassKind::Derangements: return is_derangement(w);
    case ClassKind::Involutions: return is_involution(w);
  }
  return false;
}

Distribution distribution(int n, int c, ClassKind class_kind, StatisticKind statistic,
                          const ExactInt& cap, int threads) {
  const Counts zero{std::vector<std::uint64_t>(bins_for(n, c), 0)};
  const auto counts = accumulate(n, c, cap, threads, zero, [&](Counts& acc, WindowView w) {
    if (in_class(class_kind, w)) ++acc.bins[kernel::evaluate(statistic, w)];
  });
  Distribution d{c, n, class_kind, statistic, to_exact(counts.bins), 0};
  for (const auto& count : d.histogram) d.total_count += count;
  return d;
}

ExactInt total_statistic(int n, int c, ClassKind class_kind, StatisticKind statistic,
                         const ExactInt& cap, int threads) {
  return distribution(n, c, class_kind, statistic, cap, threads).first_moment();
}

std::vector<ColoredPermutation> elements_with_value(int n, int c, StatisticKind statistic,
                                                    std::int64_t k, const ExactInt& cap) {
  std::vector<ColoredPermutation> out;
  for (GroupStream s(n, c, cap); !s.done(); s.advance()) {
    if (kernel::evaluate(statistic, s.view()) == k) out.push_back(s.current());
  }
  return out;
}

std::vector<ExactInt> code_sum_histogram(int n, int c, const ExactInt& cap) {
  std::vector<std::uint64_t> bins(bins_for(n, c), 0);
  for (CodeStream s(n, c, cap); !s.done(); s.advance()) ++bins[s.sum()];
  return to_exact(bins);
}

// ---------------------------------------------------------------------------
// Verification suite

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;

class Recorder {
 public:
  void add(std::string identity, Params params, bool pass, std::string detail) {
    entries_.push_back({std::move(identity), std::move(params), pass, std::move(detail)});
  }
  std::vector<ReportEntry> take() { return std::move(entries_); }

 private:
  std::vector<ReportEntry> entries_;
};

Params cn(int c, int n) { return {{"c", std::to_string(c)}, {"n", std::to_string(n)}}; }

std::string mismatch(const std::string& what, const ExactInt& a, const ExactInt& b) {
  return what + ": " + a.str() + " vs " + b.str();
}

// Everything one pass over G_{c,n} needs for the oracle identities.
struct Census {
  Counts inv_c;
  Counts tilde;
  Counts derangements;
  Counts involutions;
  std::uint64_t sigma_max_hits = 0;

  Census& operator+=(const Census& o) {
    inv_c += o.inv_c;
    tilde += o.tilde;
    derangements += o.derangements;
    involutions += o.involutions;
    sigma_max_hits += o.sigma_max_hits;
    return *this;
  }
};

ExactInt sum_of(const std::vector<ExactInt>& v) {
  ExactInt total = 0;
  for (const auto& x : v) total += x;
  return total;
}

ExactInt moment_of(const std::vector<ExactInt>& v) {
  ExactInt total = 0;
  for (std::size_t k = 1; k < v.size(); ++k) total += v[k] * k;
  return total;
}

void check_formula_identities(Recorder& rec) {
  // Seven methods, n <= 8, c <= 4.
  {
    bool ok = true;
    std::string detail = "all methods agree";
    for (int c = 1; c <= 4 && ok; ++c) {
      for (int n = 0; n <= 8 && ok; ++n) {
        const auto reference = i_colored_row(MahonianMethod::GenFunc, n, c);
        for (auto method : kAllMethods) {
          if (method == MahonianMethod::KnuthNetto) {
            for (int k = 0; k <= n; ++k) {
              const auto got = i_colored_knuth_netto(n, k, c);
              const auto want = k < static_cast<int>(reference.size()) ? reference[k] : ExactInt(0);
              if (got != want) {
                ok = false;
                detail = "knuth_netto (c=" + std::to_string(c) + ",n=" + std::to_string(n) +
                         ",k=" + std::to_string(k) + ") " + mismatch("value", got, want);
              }
            }
          } else if (i_colored_row(method, n, c) != reference) {
            ok = false;
            detail = std::string(method_name(method)) + " row differs at c=" + std::to_string(c) +
                     ", n=" + std::to_string(n);
          }
        }
        if (ok && sum_of(reference) != group_order(n, c)) {
          ok = false;
          detail = "row sum differs from c^n n! at c=" + std::to_string(c) + ", n=" + std::to_string(n);
        }
        if (ok && !std::equal(reference.begin(), reference.end(), reference.rbegin())) {
          ok = false;
          detail = "row not palindromic at c=" + std::to_string(c) + ", n=" + std::to_string(n);
        }
      }
    }
    rec.add("mahonian_methods_agree", {{"n", "0..8"}, {"c", "1..4"}}, ok, detail);
  }

  // Totals: closed form, recurrence, ratio chain, n <= 30, c <= 10.
  {
    bool ok = true;
    std::string detail = "closed = recurrence = ratio chain";
    for (int c = 1; c <= 10 && ok; ++c) {
      if (total_inversions_closed(1, c) != binomial(c, 2)) {
        ok = false;
        detail = "I_{c,1} != C(c,2) at c=" + std::to_string(c);
      }
      for (int n = 0; n <= 30 && ok; ++n) {
        const auto closed = total_inversions_closed(n, c);
        const auto rec_value = total_inversions_recurrence(n, c);
        const auto chain = total_inversions_ratio_chain(n, c);
        if (closed != rec_value || closed != chain) {
          ok = false;
          detail = "c=" + std::to_string(c) + ",n=" + std::to_string(n) + " closed " + closed.str() +
                   " recurrence " + rec_value.str() + " chain " + chain.str();
        }
      }
    }
    rec.add("total_inversions_formulas", {{"n", "0..30"}, {"c", "1..10"}}, ok, detail);
  }

  // Derangement and involution counts: closed form vs recurrence.
  {
    bool ok_d = true;
    bool ok_r = true;
    std::string detail_d = "formula = recurrence";
    std::string detail_r = "formula = recurrence";
    for (int c = 1; c <= 10; ++c) {
      for (int n = 0; n <= 30; ++n) {
        if (ok_d && derangement_count(n, c) != derangement_count_recurrence(n, c)) {
          ok_d = false;
          detail_d = "differs at c=" + std::to_string(c) + ", n=" + std::to_string(n);
        }
        if (ok_r && involution_count(n, c) != involution_count_recurrence(n, c)) {
          ok_r = false;
          detail_r = "differs at c=" + std::to_string(c) + ", n=" + std::to_string(n);
        }
      }
    }
    rec.add("derangement_count_recurrence", {{"n", "0..30"}, {"c", "1..10"}}, ok_d, detail_d);
    rec.add("involution_count_recurrence", {{"n", "0..30"}, {"c", "1..10"}}, ok_r, detail_r);
  }

  // Classical specialisations, n <= 12.
  {
    bool ok_t = true;
    bool ok_i = true;
    for (int n = 0; n <= 12; ++n) {
      ok_t = ok_t && t_classical(n) == t_colored(n, 1);
      ok_i = ok_i && involution_inv_total_classical(n) == involution_inv_total(n, 1);
    }
    rec.add("t_classical_equals_t_colored_c1", {{"n", "0..12"}}, ok_t,
            ok_t ? "agree" : "disagree");
    rec.add("involution_total_classical_equals_c1", {{"n", "0..12"}}, ok_i,
            ok_i ? "agree" : "disagree");
  }

  // Bounded compositions: inclusion-exclusion vs DP.
  {
    bool ok = true;
    std::string detail = "agree";
    for (int parts = 0; parts <= 8 && ok; ++parts) {
      for (int c = 1; c <= 5 && ok; ++c) {
        for (int total = 0; total <= 40 && ok; ++total) {
          if (com_bounded(parts, total, c) != com_bounded_dp(parts, total, c)) {
            ok = false;
            detail = "parts=" + std::to_string(parts) + ",c=" + std::to_string(c) +
                     ",total=" + std::to_string(total);
          }
        }
      }
    }
    rec.add("com_bounded_inclusion_exclusion", {{"parts", "0..8"}, {"c", "1..5"}, {"total", "0..40"}},
            ok, detail);
  }

  // Bounded partitions: DP vs coefficients of prod [c]_{q^i}.
  {
    bool ok = true;
    for (int n = 0; n <= 8 && ok; ++n) {
      for (int c = 1; c <= 4 && ok; ++c) {
        auto product = QPolynomial::one();
        for (int i = 1; i <= n; ++i) product *= q_integer(c).substitute_power(i);
        const auto degree = std::max<std::int64_t>(product.degree(), 0);
        const auto row = p_bounded_row(n, c - 1, degree + 3);
        for (std::int64_t m = 0; m <= degree + 3; ++m) ok = ok && row[m] == product.coefficient(m);
      }
    }
    rec.add("p_bounded_generating_function", {{"n", "0..8"}, {"c", "1..4"}}, ok,
            ok ? "agree" : "disagree");
  }

  // Golden tables.
  {
    std::size_t bad = 0;
    for (const auto& cell : derangement_inversion_table()) bad += t_colored(cell.n, cell.c) != cell.value;
    rec.add("table2_derangement_inversions",
            {{"cells", std::to_string(derangement_inversion_table().size())}}, bad == 0,
            std::to_string(bad) + " mismatches");
  }
  {
    std::size_t bad = 0;
    for (const auto& cell : involution_inversion_table()) {
      bad += involution_inv_total(cell.n, cell.c) != cell.value;
    }
    rec.add("table4_involution_inversions",
            {{"cells", std::to_string(involution_inversion_table().size())}}, bad == 0,
            std::to_string(bad) + " mismatches");
  }
}

void check_macmahon(Recorder& rec, const ExactInt& budget) {
  int checked = -1;
  for (int n = 0; n <= 7 && factorial(n) <= budget; ++n) {
    std::map<std::int64_t, std::int64_t> by_inv;
    std::map<std::int64_t, std::int64_t> by_maj;
    for (GroupStream s(n, 1, budget); !s.done(); s.advance()) {
      ++by_inv[kernel::inv(s.view().values)];
      ++by_maj[kernel::maj(s.view().values)];
    }
    if (by_inv != by_maj) {
      rec.add("macmahon_equidistribution", {{"n", std::to_string(n)}}, false,
              "inv and maj histograms differ");
      return;
    }
    checked = n;
  }
  if (checked >= 0) {
    rec.add("macmahon_equidistribution", {{"n", "0.." + std::to_string(checked)}}, true,
            "inv and maj equidistributed");
  }
}

void check_enumerated(Recorder& rec, int n, int c, const VerifyOptions& options) {
  const std::size_t bins = bins_for(n, c);
  const Counts empty{std::vector<std::uint64_t>(bins, 0)};
  const Census zero{empty, empty, empty, empty, 0};
  const auto max_k = kernel::max_inv_c(n, c);

  const auto census = accumulate(n, c, options.budget, options.threads, zero, [&](Census& acc, WindowView w) {
    const auto k = kernel::evaluate(StatisticKind::InvC, w);
    ++acc.inv_c.bins[k];
    ++acc.tilde.bins[kernel::evaluate(StatisticKind::TildeInvC, w)];
    if (is_derangement(w)) ++acc.derangements.bins[k];
    if (is_involution(w)) ++acc.involutions.bins[k];
    if (k == max_k) {
      // sigma_max for c >= 2; with one color it is the identity and the
      // reversal n ... 1 is the maximiser instead.
      const bool is_max = c == 1 ? std::is_sorted(w.values.begin(), w.values.end(), std::greater<>())
                                 : std::all_of(w.colors.begin(), w.colors.end(), [&](int x) { return x == c - 1; }) &&
                                       std::is_sorted(w.values.begin(), w.values.end());
      if (is_max) ++acc.sigma_max_hits;
    }
  });

  const auto inv_hist = to_exact(census.inv_c.bins);
  const auto tilde_hist = to_exact(census.tilde.bins);
  const auto gf = gf_colored(n, c);
  std::vector<ExactInt> gf_row(bins);
  for (std::size_t k = 0; k < bins; ++k) gf_row[k] = gf.coefficient(static_cast<std::int64_t>(k));
  const auto codes = code_sum_histogram(n, c, options.budget);

  rec.add("group_order", cn(c, n), sum_of(inv_hist) == group_order(n, c),
          mismatch("enumerated vs c^n n!", sum_of(inv_hist), group_order(n, c)));
  rec.add("inv_c_distribution_equals_generating_function", cn(c, n),
          inv_hist == gf_row && codes == gf_row,
          inv_hist == gf_row ? (codes == gf_row ? "group, codes and product agree"
                                                : "code-sum histogram differs")
                             : "inv_c histogram differs from product");
  rec.add("tilde_inv_c_equidistributed", cn(c, n), tilde_hist == inv_hist,
          tilde_hist == inv_hist ? "histograms agree" : "histograms differ");
  {
    const bool positive = std::all_of(inv_hist.begin(), inv_hist.end(), [](const ExactInt& x) { return x > 0; });
    const bool palindrome = std::equal(inv_hist.begin(), inv_hist.end(), inv_hist.rbegin());
    const bool unique_max = census.sigma_max_hits == 1 && census.inv_c.bins[max_k] == 1;
    rec.add("inv_c_support_and_symmetry", cn(c, n), positive && palindrome && unique_max,
            std::string(positive ? "" : "zero inside support; ") + (palindrome ? "" : "not palindromic; ") +
                (unique_max ? "maximum attained once, by the expected element" : "maximum not attained by a unique expected element"));
  }
  {
    const auto moment = moment_of(inv_hist);
    const auto closed = total_inversions_closed(n, c);
    const auto recurrence = total_inversions_recurrence(n, c);
    rec.add("total_inversions_oracle", cn(c, n), moment == closed && moment == recurrence,
            "oracle " + moment.str() + ", closed " + closed.str() + ", recurrence " + recurrence.str());
  }
  {
    const auto hist = to_exact(census.derangements.bins);
    const auto count = sum_of(hist);
    const auto formula = derangement_count(n, c);
    rec.add("derangement_count_oracle", cn(c, n), count == formula,
            mismatch("oracle vs formula", count, formula));
    const auto total = moment_of(hist);
    const auto closed = t_colored(n, c);
    rec.add("derangement_inversions_oracle", cn(c, n), total == closed,
            mismatch("oracle vs formula", total, closed));
  }
  {
    const auto hist = to_exact(census.involutions.bins);
    const auto count = sum_of(hist);
    const auto formula = involution_count(n, c);
    rec.add("involution_count_oracle", cn(c, n), count == formula,
            mismatch("oracle vs formula", count, formula));
    const auto total = moment_of(hist);
    const auto closed = involution_inv_total(n, c);
    rec.add("involution_inversions_oracle", cn(c, n), total == closed,
            mismatch("oracle vs formula", total, closed));
  }
}

void check_bijections(Recorder& rec, int n, int c, const ExactInt& cap) {
  std::string failure;
  auto fail = [&](const std::string& what) {
    if (failure.empty()) failure = what;
  };
  const auto max_k = kernel::max_inv_c(n, c);
  std::set<std::string> images;
  for (CodeStream s(n, c, cap); !s.done() && failure.empty(); s.advance()) {
    const auto code = s.current();
    const auto sigma = code_to_colored_perm(code);
    if (perm_to_code(sigma) != code) fail("perm_to_code(code_to_colored_perm) != id at " + format(code));
    if (kernel::evaluate(StatisticKind::TildeInvC, sigma.view()) != code.sum()) {
      fail("tilde_inv_c not transported at " + format(code));
    }
    images.insert(format(sigma));
    const auto [a, b] = split_color(code);
    if (join_color(a, b, c) != code) fail("split_color/join_color at " + format(code));
    if (decode(a) != decode(encode(decode(a)))) fail("encode/decode at " + format(a));
    if (encode(decode(a)) != a) fail("encode(decode) at " + format(a));
    const auto radix = split_radix(code);
    if (join_radix(radix, c) != code) fail("split_radix/join_radix at " + format(code));
    const auto comp = complement(code);
    if (complement(comp) != code) fail("complement not an involution at " + format(code));
    if (comp.sum() != max_k - code.sum()) fail("complement sum at " + format(code));
  }
  if (failure.empty() && images.size() != static_cast<std::size_t>(group_order(n, c))) {
    fail("code_to_colored_perm is not injective");
  }
  const auto id = ColoredPermutation::identity(n, c);
  for (GroupStream s(n, c, cap); !s.done() && failure.empty(); s.advance()) {
    const auto sigma = s.current();
    if (compose(sigma, inverse(sigma)) != id) fail("sigma o sigma^-1 != id at " + format(sigma));
    if (parse_colored(format(sigma), c, n) != sigma) fail("parse(format) != id at " + format(sigma));
    const bool inv_a = is_involution(sigma);
    if (inv_a != involution_by_cycles(sigma) || inv_a != involution_by_color_conditions(sigma)) {
      fail("involution criteria disagree at " + format(sigma));
    }
  }
  rec.add("bijection_round_trips", cn(c, n), failure.empty(),
          failure.empty() ? "codes, splits, complement and group inverse round-trip" : failure);
}

}  // namespace

std::vector<ReportEntry> verify_suite(const VerifyOptions& options) {
  Recorder rec;
  check_formula_identities(rec);
  check_macmahon(rec, options.budget);

  int covered = 0;
  for (int c = 1; c <= options.max_colors; ++c) {
    for (int n = 0;; ++n) {
      const auto order = group_order(n, c);
      if (order > options.budget) break;
      check_enumerated(rec, n, c, options);
      if (order <= options.bijection_budget) check_bijections(rec, n, c, options.budget);
      ++covered;
      // n = 0 and n = 1 with c = 1 both have order 1; keep growing n.
    }
  }
  rec.add("enumeration_coverage",
          {{"budget", options.budget.str()}, {"max_colors", std::to_string(options.max_colors)}}, true,
          covered == 0 ? "empty coverage: budget admits no group" :
                         std::to_string(covered) + " (c, n) pairs enumerated");
  return rec.take();
}

std::string report_to_json(const std::vector<ReportEntry>& report) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& entry : report) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : entry.params) params[key] = value;
    array.push_back({{"identity", entry.identity},
                     {"params", params},
                     {"status", entry.pass ? "pass" : "fail"},
                     {"detail", entry.detail}});
  }
  return array.dump(2);
}

}  // namespace colmah
