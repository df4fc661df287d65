#include "colmah/exact.hpp"

namespace colmah {

ExactInt binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  ExactInt result = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

ExactInt factorial(std::int64_t n) {
  if (n < 0) throw std::domain_error("factorial of a negative integer");
  ExactInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

ExactInt power(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw std::domain_error("negative exponent");
  return boost::multiprecision::pow(ExactInt(base), static_cast<unsigned>(exp));
}

ExactInt require_integer(const Rational& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw std::logic_error(std::string("non-integral intermediate in ") + what +
                           ": " + value.str());
  }
  return boost::multiprecision::numerator(value);
}

}  // namespace colmah
