#pragma once

#include <cstdint>
#include <stdexcept>

#include "colmah/exact.hpp"

namespace colmah {

// Default limit on the number of elements any exhaustive stream may visit.
inline constexpr std::int64_t kDefaultCap = 10'000'000;

// |G_{c,n}| = c^n n!, which is also the number of colored Lehmer codes.
ExactInt group_order(std::int64_t n, std::int64_t c);

// Reads MAHONIAN_CAP when set to a non-negative integer, else kDefaultCap.
ExactInt cap_from_environment();

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(ExactInt size, ExactInt cap);
  const ExactInt& size() const { return size_; }
  const ExactInt& cap() const { return cap_; }

 private:
  ExactInt size_;
  ExactInt cap_;
};

// Throws CapExceeded when group_order(n, c) > cap.
void check_cap(std::int64_t n, std::int64_t c, const ExactInt& cap);

}  // namespace colmah
