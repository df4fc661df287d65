#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "colmah/exact.hpp"
#include "colmah/qpoly.hpp"

namespace colmah {

// Raised when a formula is evaluated outside the range it is stated for.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// [m]_q = 1 + q + ... + q^{m-1}; [0]_q is the zero polynomial.
QPolynomial q_integer(std::int64_t m);

// prod_{i=1}^n [c*i]_q. Coefficient k is i_c(n, k).
QPolynomial gf_colored(int n, int c);

// Classical Mahonian number: permutations of [n] with k inversions.
ExactInt i_classical(int n, std::int64_t k);

enum class MahonianMethod {
  GenFunc,
  Recurrence,
  Summation,
  KnuthNetto,
  PartitionConv,
  CompositionSplit,
  LatticePath,
};

inline constexpr MahonianMethod kAllMethods[] = {
    MahonianMethod::GenFunc,       MahonianMethod::Recurrence,
    MahonianMethod::Summation,     MahonianMethod::KnuthNetto,
    MahonianMethod::PartitionConv, MahonianMethod::CompositionSplit,
    MahonianMethod::LatticePath,
};

std::string_view method_name(MahonianMethod method);
std::optional<MahonianMethod> parse_method(std::string_view name);

// i_c(n, k) by the chosen method; zero for k outside [0, max_inv_c(n, c)].
// KnuthNetto throws DomainError unless 0 <= k <= n.
ExactInt i_colored(MahonianMethod method, int n, std::int64_t k, int c);

// Full row k = 0..max_inv_c(n, c). Not available for KnuthNetto, whose
// domain is only 0 <= k <= n (throws DomainError).
std::vector<ExactInt> i_colored_row(MahonianMethod method, int n, int c);

ExactInt i_colored_gen_func(int n, std::int64_t k, int c);
// i_c(n,k) = i_c(n,k-1) + i_c(n-1,k) - i_c(n-1,k-cn), rows memoized per call.
ExactInt i_colored_recurrence(int n, std::int64_t k, int c);
// i_c(n,k) = sum_{j=0}^{cn-1} i_c(n-1,k-j).
ExactInt i_colored_summation(int n, std::int64_t k, int c);
ExactInt i_colored_knuth_netto(int n, std::int64_t k, int c);
// sum_j i(n,j) p_{<=n,c-1}(k-j).
ExactInt i_colored_partition_conv(int n, std::int64_t k, int c);
// sum over c*a + b = k of Com(n parts, total b, each < c) * i(n,a).
ExactInt i_colored_composition_split(int n, std::int64_t k, int c);
// North/east lattice paths (0,0) -> (n,k), at most c*j - 1 consecutive
// north steps at level j >= 1 and none at level 0.
ExactInt i_colored_lattice_path(int n, std::int64_t k, int c);

// Partitions of m into parts <= limit_part, each used at most limit_mult times.
ExactInt p_bounded(int limit_part, int limit_mult, std::int64_t m);
// Values p_bounded(limit_part, limit_mult, m) for m = 0..max_m.
std::vector<ExactInt> p_bounded_row(int limit_part, int limit_mult, std::int64_t max_m);

// Compositions of `total` into `parts` non-negative parts, each < c, by
// inclusion-exclusion sum_j (-1)^j C(parts,j) C(total - c j + parts - 1, parts - 1).
ExactInt com_bounded(int parts, std::int64_t total, int c);
// Same count by a direct dynamic program over parts.
ExactInt com_bounded_dp(int parts, std::int64_t total, int c);

// (j(3j-1)/2, j(3j+1)/2) for j >= 1.
std::pair<ExactInt, ExactInt> pentagonal(std::int64_t j);

// Total of inv_c over G_{c,n}: (c^n n! / 2)(c C(n+1,2) - n).
ExactInt total_inversions_closed(int n, int c);
// I_{c,1} = C(c,2), I_{c,n} = c^n n! (cn-1)/2 + cn I_{c,n-1}; I_{c,0} = 0.
ExactInt total_inversions_recurrence(int n, int c);
// I_{c,n} / I_{c,n-1} = c n^2 (cn + c - 2) / ((n-1)(cn - 2)) for n >= 2.
// Throws DomainError where I_{c,n-1} = 0, i.e. (c, n) = (1, 2).
Rational total_inversions_ratio(int n, int c);
// Multiplies ratios starting from the first non-zero total: I_{c,1} for
// c >= 2, I_{1,2} = 1 for c = 1.
ExactInt total_inversions_ratio_chain(int n, int c);

}  // namespace colmah
