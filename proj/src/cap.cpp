#include "colmah/cap.hpp"

#include <cstdlib>
#include <string>

namespace colmah {

ExactInt group_order(std::int64_t n, std::int64_t c) { return power(c, n) * factorial(n); }

ExactInt cap_from_environment() {
  const char* raw = std::getenv("MAHONIAN_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultCap;
  try {
    ExactInt parsed(raw);
    if (parsed >= 0) return parsed;
  } catch (const std::exception&) {
  }
  return kDefaultCap;
}

CapExceeded::CapExceeded(ExactInt size, ExactInt cap)
    : std::runtime_error("enumeration size " + size.str() + " exceeds cap " + cap.str()),
      size_(std::move(size)),
      cap_(std::move(cap)) {}

void check_cap(std::int64_t n, std::int64_t c, const ExactInt& cap) {
  auto size = group_order(n, c);
  if (size > cap) throw CapExceeded(std::move(size), cap);
}

}  // namespace colmah
