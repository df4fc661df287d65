#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "colmah/exact.hpp"

namespace colmah {

enum class ClassKind { All, Derangements, Involutions };

// CLI vocabulary: all, derangements, involutions.
std::string_view class_name(ClassKind kind);
std::optional<ClassKind> parse_class(std::string_view name);

// d_n^(c) = n! sum_k (-1)^k c^{n-k} / k!, summed as integers n!/k!.
ExactInt derangement_count(int n, int c);
// d_0 = 1, d_{m+1} = (cm + c) d_m + (-1)^{m+1}.
ExactInt derangement_count_recurrence(int n, int c);

// Total inversions over classical derangements of size n.
ExactInt t_classical(int n);

// The four summands of the total of inv_c over colored derangements:
// a from inv(|sigma|), b from col(sigma), c1 and c2 from the cross term
// (pairs avoiding the fixed points, and pairs whose left end is fixed).
struct DerangementTerms {
  ExactInt a;
  ExactInt b;
  ExactInt c1;
  ExactInt c2;

  ExactInt total() const { return a + b + c1 + c2; }
};

DerangementTerms t_colored_terms(int n, int c);
ExactInt t_colored(int n, int c);

// r_n^(c); zero for n < 0.
ExactInt involution_count(int n, int c);
// r_{m+1} = a r_m + c m r_{m-1}, a = ((-1)^c + 3) / 2, read off the
// exponential generating function exp((((-1)^c + 3) x + c x^2) / 2).
ExactInt involution_count_recurrence(int n, int c);

// Total inversions over classical involutions of size n.
ExactInt involution_inv_total_classical(int n);
// Total of inv_c over colored involutions of size n.
ExactInt involution_inv_total(int n, int c);

}  // namespace colmah
