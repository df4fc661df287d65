#include "colmah/statistics.hpp"

#include <numeric>

namespace colmah {

std::string_view statistic_name(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::InvC: return "inv_c";
    case StatisticKind::TildeInvC: return "tilde_inv_c";
    case StatisticKind::InvUnderlying: return "inv";
    case StatisticKind::Col: return "col";
  }
  return "?";
}

std::optional<StatisticKind> parse_statistic(std::string_view name) {
  for (auto kind : {StatisticKind::InvC, StatisticKind::TildeInvC, StatisticKind::InvUnderlying,
                    StatisticKind::Col}) {
    if (statistic_name(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace kernel {

std::int64_t inv(std::span<const int> values) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (values[i] > values[j]) ++count;
    }
  }
  return count;
}

std::int64_t maj(std::span<const int> values) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    if (values[i] > values[i + 1]) total += static_cast<std::int64_t>(i) + 1;
  }
  return total;
}

std::int64_t col(std::span<const int> colors) {
  return std::accumulate(colors.begin(), colors.end(), std::int64_t{0});
}

std::int64_t cross_term(WindowView w) {
  std::int64_t count = 0;
  for (int j = 0; j < w.size(); ++j) {
    if (w.colors[j] == 0) continue;
    for (int i = 0; i < j; ++i) {
      if (w.values[i] < w.values[j]) ++count;
    }
  }
  return count;
}

std::int64_t evaluate(StatisticKind kind, WindowView w) {
  switch (kind) {
    case StatisticKind::InvC: return inv(w.values) + col(w.colors) + w.c * cross_term(w);
    case StatisticKind::TildeInvC: return w.c * inv(w.values) + col(w.colors);
    case StatisticKind::InvUnderlying: return inv(w.values);
    case StatisticKind::Col: return col(w.colors);
  }
  return 0;
}

std::int64_t max_inv_c(std::int64_t n, std::int64_t c) {
  return (c - 1) * n + c * n * (n - 1) / 2;
}

}  // namespace kernel

ExactInt inv(const Permutation& pi) { return kernel::inv(pi.values()); }
ExactInt maj(const Permutation& pi) { return kernel::maj(pi.values()); }
ExactInt col(const ColoredPermutation& sigma) { return kernel::col(sigma.colors()); }
ExactInt cross_term(const ColoredPermutation& sigma) { return kernel::cross_term(sigma.view()); }

ExactInt inv_c(const ColoredPermutation& sigma) {
  return kernel::evaluate(StatisticKind::InvC, sigma.view());
}

ExactInt tilde_inv_c(const ColoredPermutation& sigma) {
  return kernel::evaluate(StatisticKind::TildeInvC, sigma.view());
}

ExactInt max_inv_c(std::int64_t n, std::int64_t c) {
  return ExactInt(c - 1) * n + ExactInt(c) * binomial(n, 2);
}

ExactInt evaluate(StatisticKind kind, const ColoredPermutation& sigma) {
  return kernel::evaluate(kind, sigma.view());
}

}  // namespace colmah
