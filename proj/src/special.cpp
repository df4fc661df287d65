#include "colmah/special.hpp"

#include <stdexcept>

#include "colmah/mahonian.hpp"

namespace colmah {
namespace {

void check_params(int n, int c) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (c < 1) throw std::invalid_argument("c must be at least 1");
}

int sign(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }

// (-1)^c as an integer.
int parity_sign(int c) { return c % 2 == 0 ? 1 : -1; }

}  // namespace

std::string_view class_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::All: return "all";
    case ClassKind::Derangements: return "derangements";
    case ClassKind::Involutions: return "involutions";
  }
  return "?";
}

std::optional<ClassKind> parse_class(std::string_view name) {
  for (auto kind : {ClassKind::All, ClassKind::Derangements, ClassKind::Involutions}) {
    if (class_name(kind) == name) return kind;
  }
  return std::nullopt;
}

ExactInt derangement_count(int n, int c) {
  check_params(n, c);
  ExactInt total = 0;
  ExactInt falling = 1;  // n! / k!, built from k = n downwards
  for (int k = n; k >= 0; --k) {
    total += sign(k) * power(c, n - k) * falling;
    falling *= k;
  }
  return total;
}

ExactInt derangement_count_recurrence(int n, int c) {
  check_params(n, c);
  ExactInt d = 1;
  for (int m = 0; m < n; ++m) d = ExactInt(static_cast<std::int64_t>(c) * m + c) * d + sign(m + 1);
  return d;
}

ExactInt t_classical(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  Rational sum = 0;
  for (int k = 0; k <= n - 1; ++k) {
    sum += Rational(ExactInt(sign(k)) * (3 * n + k) * (n - k - 1), factorial(k));
  }
  return require_integer(sum * factorial(n) / 12, "t_classical");
}

DerangementTerms t_colored_terms(int n, int c) {
  check_params(n, c);
  const ExactInt n_fact = factorial(n);

  Rational a = 0;
  for (int k = 0; k <= n - 1; ++k) {
    a += Rational(ExactInt(sign(k)) * power(c, n - k) * (n - k - 1) * (3 * n + k), factorial(k));
  }
  a *= Rational(n_fact, 12);

  Rational b = 0;
  for (int k = 0; k <= n; ++k) {
    ExactInt inner = 0;
    const std::int64_t free = n - k;
    for (std::int64_t i = 0; i <= free * (c - 1); ++i) inner += i * com_bounded(static_cast<int>(free), i, c);
    b += Rational(sign(k) * inner, factorial(k));
  }
  b *= n_fact;

  Rational c1 = 0;
  for (int k = 0; k <= n; ++k) {
    c1 += Rational(ExactInt(sign(k)) * power(c, n - k) * binomial(n - k, 2), factorial(k));
  }
  c1 *= Rational(n_fact * (c - 1), 2);

  Rational c2 = 0;
  for (int k = 1; k <= n - 1; ++k) {
    c2 += Rational(ExactInt(sign(k)) * power(c, n - k) * (2 * (n - k) + 1), factorial(k - 1));
  }
  c2 *= Rational(n_fact * (c - 1), 6);

  return {require_integer(a, "t_colored term A"), require_integer(b, "t_colored term B"),
          require_integer(c1, "t_colored term C1"), require_integer(c2, "t_colored term C2")};
}

ExactInt t_colored(int n, int c) { return t_colored_terms(n, c).total(); }

ExactInt involution_count(int n, int c) {
  if (c < 1) throw std::invalid_argument("c must be at least 1");
  if (n < 0) return 0;
  const std::int64_t fixed_colorings = 3 + parity_sign(c);
  Rational total = 0;
  for (int k = n % 2; k <= n; k += 2) {
    const int pairs = (n - k) / 2;
    total += Rational(binomial(n, k) * power(fixed_colorings, k) * power(c, pairs) * factorial(n - k),
                      power(2, (n + k) / 2) * factorial(pairs));
  }
  return require_integer(total, "involution_count");
}

ExactInt involution_count_recurrence(int n, int c) {
  if (c < 1) throw std::invalid_argument("c must be at least 1");
  if (n < 0) return 0;
  const std::int64_t a = (parity_sign(c) + 3) / 2;
  ExactInt previous = 0;  // r_{-1}
  ExactInt current = 1;   // r_0
  for (int m = 0; m < n; ++m) {
    ExactInt next = a * current + ExactInt(static_cast<std::int64_t>(c) * m) * previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

ExactInt involution_inv_total_classical(int n) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  return binomial(n, 2) * involution_count(n - 2, 1) + 2 * binomial(n, 3) * involution_count(n - 3, 1) +
         6 * binomial(n, 4) * involution_count(n - 4, 1);
}

ExactInt involution_inv_total(int n, int c) {
  check_params(n, c);
  const int s = parity_sign(c);
  const ExactInt cc = c;
  Rational total = Rational(ExactInt(n) * c * (s + 1), 4) * involution_count(n - 1, c);
  total += cc * (c + 1 + s) * binomial(n, 2) * involution_count(n - 2, c);
  total += 2 * cc * cc * (s + 2) * binomial(n, 3) * involution_count(n - 3, c);
  total += 6 * cc * cc * cc * binomial(n, 4) * involution_count(n - 4, c);
  return require_integer(total, "involution_inv_total");
}

}  // namespace colmah
