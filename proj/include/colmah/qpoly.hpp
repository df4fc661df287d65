#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "colmah/exact.hpp"

namespace colmah {

// Dense polynomial in q with exact coefficients, index = exponent. Kept
// normalized: no trailing zeros, so the zero polynomial is empty.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<ExactInt> coefficients);

  static QPolynomial one() { return QPolynomial({ExactInt(1)}); }

  std::span<const ExactInt> coefficients() const { return coefficients_; }
  // -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  // Zero outside [0, degree].
  ExactInt coefficient(std::int64_t k) const;

  // p(q^m) for m >= 1.
  QPolynomial substitute_power(int m) const;
  // p(1), the coefficient sum.
  ExactInt value_at_one() const;
  // p'(1) = sum k * a_k.
  ExactInt derivative_at_one() const;
  bool is_palindromic() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void normalize();

  std::vector<ExactInt> coefficients_;
};

// JSON array of decimal strings, lowest degree first.
std::string to_json(const QPolynomial& p);
QPolynomial qpoly_from_json(const std::string& text);

}  // namespace colmah
