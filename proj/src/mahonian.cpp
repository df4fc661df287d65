#include "colmah/mahonian.hpp"

#include <string>

#include "colmah/statistics.hpp"

namespace colmah {
namespace {

void check_params(int n, int c) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (c < 1) throw std::invalid_argument("c must be at least 1");
}

std::int64_t row_max(int n, int c) { return kernel::max_inv_c(n, c); }

ExactInt at(const std::vector<ExactInt>& row, std::int64_t k) {
  if (k < 0 || k >= static_cast<std::int64_t>(row.size())) return 0;
  return row[static_cast<std::size_t>(k)];
}

std::vector<ExactInt> padded(const QPolynomial& p, std::int64_t max_k) {
  std::vector<ExactInt> row(static_cast<std::size_t>(max_k + 1));
  for (std::int64_t k = 0; k <= max_k; ++k) row[k] = p.coefficient(k);
  return row;
}

std::vector<ExactInt> classical_row(int n) { return padded(gf_colored(n, 1), row_max(n, 1)); }

std::vector<ExactInt> recurrence_row(int n, int c) {
  std::vector<ExactInt> prev{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<ExactInt> row(static_cast<std::size_t>(row_max(m, c) + 1));
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(row.size()); ++k) {
      row[k] = at(row, k - 1) + at(prev, k) - at(prev, k - static_cast<std::int64_t>(c) * m);
    }
    prev = std::move(row);
  }
  return prev;
}

std::vector<ExactInt> summation_row(int n, int c) {
  std::vector<ExactInt> prev{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<ExactInt> row(static_cast<std::size_t>(row_max(m, c) + 1));
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(row.size()); ++k) {
      for (std::int64_t j = 0; j < static_cast<std::int64_t>(c) * m; ++j) row[k] += at(prev, k - j);
    }
    prev = std::move(row);
  }
  return prev;
}

std::vector<ExactInt> partition_conv_row(int n, int c) {
  const auto max_k = row_max(n, c);
  const auto mahonian = classical_row(n);
  const auto partitions = p_bounded_row(n, c - 1, max_k);
  std::vector<ExactInt> row(static_cast<std::size_t>(max_k + 1));
  for (std::int64_t k = 0; k <= max_k; ++k) {
    for (std::int64_t j = 0; j <= k; ++j) row[k] += at(mahonian, j) * partitions[k - j];
  }
  return row;
}

std::vector<ExactInt> composition_split_row(int n, int c) {
  const auto max_k = row_max(n, c);
  const auto mahonian = classical_row(n);
  std::vector<ExactInt> compositions(static_cast<std::size_t>(max_k + 1));
  for (std::int64_t b = 0; b <= max_k; ++b) compositions[b] = com_bounded(n, b, c);
  std::vector<ExactInt> row(static_cast<std::size_t>(max_k + 1));
  for (std::int64_t k = 0; k <= max_k; ++k) {
    for (std::int64_t a = 0; static_cast<std::int64_t>(c) * a <= k; ++a) {
      row[k] += compositions[k - static_cast<std::int64_t>(c) * a] * at(mahonian, a);
    }
  }
  return row;
}

// Walks the lattice one step at a time with state (level x, height y, length
// of the current run of north steps at level x). Counts every endpoint
// (n, y) with y <= max_k.
std::vector<ExactInt> lattice_path_row(int n, int c, std::int64_t max_k) {
  const std::int64_t max_run = std::max<std::int64_t>(static_cast<std::int64_t>(c) * n, 1);
  const std::int64_t heights = max_k + 1;
  auto index = [&](std::int64_t x, std::int64_t y, std::int64_t run) {
    return static_cast<std::size_t>((x * heights + y) * max_run + run);
  };
  std::vector<ExactInt> ways(static_cast<std::size_t>((n + 1) * heights * max_run));
  ways[index(0, 0, 0)] = 1;
  for (std::int64_t x = 0; x <= n; ++x) {
    const std::int64_t run_limit = static_cast<std::int64_t>(c) * x - 1;
    for (std::int64_t y = 0; y <= max_k; ++y) {
      for (std::int64_t run = 0; run < max_run; ++run) {
        const auto& w = ways[index(x, y, run)];
        if (w == 0) continue;
        if (x < n) ways[index(x + 1, y, 0)] += w;
        if (y < max_k && run + 1 <= run_limit) ways[index(x, y + 1, run + 1)] += w;
      }
    }
  }
  std::vector<ExactInt> row(static_cast<std::size_t>(heights));
  for (std::int64_t y = 0; y <= max_k; ++y) {
    for (std::int64_t run = 0; run < max_run; ++run) row[y] += ways[index(n, y, run)];
  }
  return row;
}

// Multisets of size m from n kinds: C(n+m-1, m), with the empty multiset
// counted once even when n = 0.
ExactInt multichoose(std::int64_t n, std::int64_t m) {
  if (m < 0) return 0;
  if (n == 0) return m == 0 ? 1 : 0;
  return binomial(n + m - 1, m);
}

}  // namespace

QPolynomial q_integer(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("q_integer needs m >= 0");
  return QPolynomial(std::vector<ExactInt>(static_cast<std::size_t>(m), ExactInt(1)));
}

QPolynomial gf_colored(int n, int c) {
  check_params(n, c);
  auto product = QPolynomial::one();
  for (int i = 1; i <= n; ++i) product *= q_integer(static_cast<std::int64_t>(c) * i);
  return product;
}

ExactInt i_classical(int n, std::int64_t k) { return gf_colored(n, 1).coefficient(k); }

std::string_view method_name(MahonianMethod method) {
  switch (method) {
    case MahonianMethod::GenFunc: return "gen_func";
    case MahonianMethod::Recurrence: return "recurrence";
    case MahonianMethod::Summation: return "summation";
    case MahonianMethod::KnuthNetto: return "knuth_netto";
    case MahonianMethod::PartitionConv: return "partition_conv";
    case MahonianMethod::CompositionSplit: return "composition_split";
    case MahonianMethod::LatticePath: return "lattice_path";
  }
  return "?";
}

std::optional<MahonianMethod> parse_method(std::string_view name) {
  for (auto method : kAllMethods) {
    if (method_name(method) == name) return method;
  }
  return std::nullopt;
}

std::vector<ExactInt> i_colored_row(MahonianMethod method, int n, int c) {
  check_params(n, c);
  switch (method) {
    case MahonianMethod::GenFunc: return padded(gf_colored(n, c), row_max(n, c));
    case MahonianMethod::Recurrence: return recurrence_row(n, c);
    case MahonianMethod::Summation: return summation_row(n, c);
    case MahonianMethod::KnuthNetto:
      throw DomainError("knuth_netto is only defined for 0 <= k <= n; no full row");
    case MahonianMethod::PartitionConv: return partition_conv_row(n, c);
    case MahonianMethod::CompositionSplit: return composition_split_row(n, c);
    case MahonianMethod::LatticePath: return lattice_path_row(n, c, row_max(n, c));
  }
  throw std::logic_error("unknown method");
}

ExactInt i_colored(MahonianMethod method, int n, std::int64_t k, int c) {
  switch (method) {
    case MahonianMethod::GenFunc: return i_colored_gen_func(n, k, c);
    case MahonianMethod::Recurrence: return i_colored_recurrence(n, k, c);
    case MahonianMethod::Summation: return i_colored_summation(n, k, c);
    case MahonianMethod::KnuthNetto: return i_colored_knuth_netto(n, k, c);
    case MahonianMethod::PartitionConv: return i_colored_partition_conv(n, k, c);
    case MahonianMethod::CompositionSplit: return i_colored_composition_split(n, k, c);
    case MahonianMethod::LatticePath: return i_colored_lattice_path(n, k, c);
  }
  throw std::logic_error("unknown method");
}

ExactInt i_colored_gen_func(int n, std::int64_t k, int c) { return gf_colored(n, c).coefficient(k); }

ExactInt i_colored_recurrence(int n, std::int64_t k, int c) {
  check_params(n, c);
  return at(recurrence_row(n, c), k);
}

ExactInt i_colored_summation(int n, std::int64_t k, int c) {
  check_params(n, c);
  return at(summation_row(n, c), k);
}

ExactInt i_colored_knuth_netto(int n, std::int64_t k, int c) {
  check_params(n, c);
  if (k < 0 || k > n) {
    throw DomainError("knuth_netto requires 0 <= k <= n (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  ExactInt total = multichoose(n, k);
  for (std::int64_t j = 1;; ++j) {
    const std::int64_t shift = c * (j * (3 * j - 1) / 2);
    if (k - shift < 0) break;
    const ExactInt sign = (j % 2 == 0) ? 1 : -1;
    total += sign * multichoose(n, k - shift - c * j);
    total += sign * multichoose(n, k - shift);
  }
  return total;
}

ExactInt i_colored_partition_conv(int n, std::int64_t k, int c) {
  check_params(n, c);
  if (k < 0 || k > row_max(n, c)) return 0;
  const auto mahonian = classical_row(n);
  const auto partitions = p_bounded_row(n, c - 1, k);
  ExactInt total = 0;
  for (std::int64_t j = 0; j <= k; ++j) total += at(mahonian, j) * partitions[k - j];
  return total;
}

ExactInt i_colored_composition_split(int n, std::int64_t k, int c) {
  check_params(n, c);
  if (k < 0 || k > row_max(n, c)) return 0;
  ExactInt total = 0;
  for (std::int64_t a = 0; static_cast<std::int64_t>(c) * a <= k; ++a) {
    total += com_bounded(n, k - static_cast<std::int64_t>(c) * a, c) * i_classical(n, a);
  }
  return total;
}

ExactInt i_colored_lattice_path(int n, std::int64_t k, int c) {
  check_params(n, c);
  if (k < 0 || k > row_max(n, c)) return 0;
  return lattice_path_row(n, c, k)[static_cast<std::size_t>(k)];
}

std::vector<ExactInt> p_bounded_row(int limit_part, int limit_mult, std::int64_t max_m) {
  if (limit_part < 0 || limit_mult < 0 || max_m < 0) {
    throw std::invalid_argument("p_bounded arguments must be non-negative");
  }
  std::vector<ExactInt> ways(static_cast<std::size_t>(max_m + 1));
  ways[0] = 1;
  for (std::int64_t part = 1; part <= limit_part; ++part) {
    std::vector<ExactInt> next(ways.size());
    for (std::int64_t m = 0; m <= max_m; ++m) {
      for (std::int64_t used = 0; used <= limit_mult && used * part <= m; ++used) {
        next[m] += ways[m - used * part];
      }
    }
    ways = std::move(next);
  }
  return ways;
}

ExactInt p_bounded(int limit_part, int limit_mult, std::int64_t m) {
  if (m < 0) return 0;
  return p_bounded_row(limit_part, limit_mult, m)[static_cast<std::size_t>(m)];
}

ExactInt com_bounded(int parts, std::int64_t total, int c) {
  if (parts < 0 || c < 1) throw std::invalid_argument("com_bounded needs parts >= 0, c >= 1");
  if (total < 0) return 0;
  if (parts == 0) return total == 0 ? 1 : 0;
  ExactInt sum = 0;
  for (std::int64_t j = 0; j <= parts; ++j) {
    const auto term = binomial(parts, j) * binomial(total - c * j + parts - 1, parts - 1);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

ExactInt com_bounded_dp(int parts, std::int64_t total, int c) {
  if (parts < 0 || c < 1) throw std::invalid_argument("com_bounded needs parts >= 0, c >= 1");
  if (total < 0) return 0;
  std::vector<ExactInt> ways(static_cast<std::size_t>(total + 1));
  ways[0] = 1;
  for (int p = 0; p < parts; ++p) {
    std::vector<ExactInt> next(ways.size());
    for (std::int64_t t = 0; t <= total; ++t) {
      for (std::int64_t part = 0; part < c && part <= t; ++part) next[t] += ways[t - part];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(total)];
}

std::pair<ExactInt, ExactInt> pentagonal(std::int64_t j) {
  if (j < 1) throw std::invalid_argument("pentagonal needs j >= 1");
  return {ExactInt(j) * (3 * j - 1) / 2, ExactInt(j) * (3 * j + 1) / 2};
}

ExactInt total_inversions_closed(int n, int c) {
  check_params(n, c);
  const ExactInt numerator = power(c, n) * factorial(n) * (ExactInt(c) * binomial(n + 1, 2) - n);
  return require_integer(Rational(numerator, 2), "total_inversions_closed");
}

ExactInt total_inversions_recurrence(int n, int c) {
  check_params(n, c);
  if (n == 0) return 0;
  ExactInt total = binomial(c, 2);
  ExactInt order = c;  // c^m m!
  for (int m = 2; m <= n; ++m) {
    order *= static_cast<std::int64_t>(c) * m;
    const ExactInt head =
        require_integer(Rational(order * (static_cast<std::int64_t>(c) * m - 1), 2),
                        "total_inversions_recurrence");
    total = head + ExactInt(static_cast<std::int64_t>(c) * m) * total;
  }
  return total;
}

Rational total_inversions_ratio(int n, int c) {
  check_params(n, c);
  if (n < 2) throw DomainError("the ratio is stated for n >= 2");
  const std::int64_t cn = static_cast<std::int64_t>(c) * n;
  const std::int64_t denominator = static_cast<std::int64_t>(n - 1) * (cn - 2);
  if (denominator == 0) {
    throw DomainError("ratio undefined at (c, n) = (" + std::to_string(c) + ", " +
                      std::to_string(n) + "): the previous total is zero");
  }
  return Rational(ExactInt(c) * n * n * (cn + c - 2), ExactInt(denominator));
}

ExactInt total_inversions_ratio_chain(int n, int c) {
  check_params(n, c);
  // I_{1,1} = 0, so for c = 1 the chain can only start at I_{1,2} = 1.
  const int start = c == 1 ? 2 : 1;
  if (n < start) return n == 0 ? ExactInt(0) : binomial(c, 2);
  Rational total = c == 1 ? Rational(1) : Rational(binomial(c, 2));
  for (int m = start + 1; m <= n; ++m) total *= total_inversions_ratio(m, c);
  return require_integer(total, "total_inversions_ratio_chain");
}

}  // namespace colmah
