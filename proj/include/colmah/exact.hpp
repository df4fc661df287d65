#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace colmah {

// Unbounded integer used for every count and total.
using ExactInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient with the convention C(a, b) = 0 unless 0 <= b <= a.
ExactInt binomial(std::int64_t a, std::int64_t b);

// n! for n >= 0.
ExactInt factorial(std::int64_t n);

// base^exp for exp >= 0.
ExactInt power(std::int64_t base, std::int64_t exp);

// Converts a rational that must be integral. Throws std::logic_error naming
// `what` when the denominator is not one.
ExactInt require_integer(const Rational& value, const char* what);

inline std::string to_string(const ExactInt& value) { return value.str(); }

}  // namespace colmah
