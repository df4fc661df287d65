#include "colmah/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace colmah {

QPolynomial::QPolynomial(std::vector<ExactInt> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

void QPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

ExactInt QPolynomial::coefficient(std::int64_t k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

QPolynomial QPolynomial::substitute_power(int m) const {
  if (m < 1) throw std::invalid_argument("substitute_power needs m >= 1");
  if (is_zero()) return {};
  std::vector<ExactInt> out(static_cast<std::size_t>(degree()) * m + 1);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) out[k * m] = coefficients_[k];
  return QPolynomial(std::move(out));
}

ExactInt QPolynomial::value_at_one() const {
  ExactInt total = 0;
  for (const auto& a : coefficients_) total += a;
  return total;
}

ExactInt QPolynomial::derivative_at_one() const {
  ExactInt total = 0;
  for (std::size_t k = 1; k < coefficients_.size(); ++k) total += coefficients_[k] * k;
  return total;
}

bool QPolynomial::is_palindromic() const {
  return std::equal(coefficients_.begin(), coefficients_.end(), coefficients_.rbegin());
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) {
    coefficients_[k] += other.coefficients_[k];
  }
  normalize();
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactInt> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return QPolynomial(std::move(out));
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) { return *this = *this * other; }

std::string to_json(const QPolynomial& p) {
  auto array = nlohmann::json::array();
  for (const auto& a : p.coefficients()) array.push_back(a.str());
  return array.dump();
}

QPolynomial qpoly_from_json(const std::string& text) {
  const auto array = nlohmann::json::parse(text);
  if (!array.is_array()) throw std::invalid_argument("q-polynomial JSON must be an array");
  std::vector<ExactInt> coefficients;
  for (const auto& item : array) coefficients.emplace_back(item.get<std::string>());
  return QPolynomial(std::move(coefficients));
}

}  // namespace colmah
