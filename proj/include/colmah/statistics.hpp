#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "colmah/exact.hpp"
#include "colmah/perm.hpp"

namespace colmah {

enum class StatisticKind { InvC, TildeInvC, InvUnderlying, Col };

// CLI vocabulary: inv_c, tilde_inv_c, inv, col.
std::string_view statistic_name(StatisticKind kind);
std::optional<StatisticKind> parse_statistic(std::string_view name);

ExactInt inv(const Permutation& pi);
ExactInt maj(const Permutation& pi);

ExactInt col(const ColoredPermutation& sigma);
// Pairs i < j with sigma_i < sigma_j and col(sigma_j) != 0.
ExactInt cross_term(const ColoredPermutation& sigma);
// inv(|sigma|) + col(sigma) + c * cross_term(sigma).
ExactInt inv_c(const ColoredPermutation& sigma);
// c * inv(|sigma|) + col(sigma).
ExactInt tilde_inv_c(const ColoredPermutation& sigma);

// (c-1) n + c C(n,2). Attained only by sigma_max for c >= 2 and only by the
// reversal n ... 1 for c = 1.
ExactInt max_inv_c(std::int64_t n, std::int64_t c);

ExactInt evaluate(StatisticKind kind, const ColoredPermutation& sigma);

// Machine-word kernels behind the functions above. Exact for n up to a few
// thousand, which is far beyond anything enumerable.
namespace kernel {
std::int64_t inv(std::span<const int> values);
std::int64_t maj(std::span<const int> values);
std::int64_t col(std::span<const int> colors);
std::int64_t cross_term(WindowView w);
std::int64_t evaluate(StatisticKind kind, WindowView w);
std::int64_t max_inv_c(std::int64_t n, std::int64_t c);
}  // namespace kernel

}  // namespace colmah
