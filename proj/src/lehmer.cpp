#include "colmah/lehmer.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "colmah/cap.hpp"

namespace colmah {
namespace {

void check_bounds(std::span<const int> entries, int c) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int bound = c * static_cast<int>(i + 1);
    if (entries[i] < 0 || entries[i] >= bound) {
      throw std::invalid_argument("code entry " + std::to_string(i + 1) + " = " +
                                  std::to_string(entries[i]) + " outside [0, " +
                                  std::to_string(bound - 1) + "]");
    }
  }
}

std::int64_t sum_of(std::span<const int> entries) {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
}

std::string format_entries(std::span<const int> entries) {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(entries[i]);
  }
  return out + ")";
}

}  // namespace

LehmerCode::LehmerCode(std::vector<int> entries) : entries_(std::move(entries)) {
  check_bounds(entries_, 1);
}

std::int64_t LehmerCode::sum() const { return sum_of(entries_); }

ColoredLehmerCode::ColoredLehmerCode(int c, std::vector<int> entries)
    : c_(c), entries_(std::move(entries)) {
  if (c_ < 1) throw std::invalid_argument("number of colors must be at least 1");
  check_bounds(entries_, c_);
}

std::int64_t ColoredLehmerCode::sum() const { return sum_of(entries_); }

LehmerCode encode(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> position(n + 1);
  for (int p = 0; p < n; ++p) position[pi[p]] = p;
  std::vector<int> entries(n, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j < i; ++j) {
      if (position[j] > position[i]) ++entries[i - 1];
    }
  }
  return LehmerCode(std::move(entries));
}

Permutation decode(const LehmerCode& code) {
  std::vector<int> word;
  word.reserve(code.size());
  for (int i = 1; i <= code.size(); ++i) {
    const int from_right = code.entries()[i - 1];
    word.insert(word.end() - from_right, i);
  }
  return Permutation(std::move(word));
}

ColoredLehmerCode complement(const ColoredLehmerCode& code) {
  std::vector<int> out(code.size());
  for (int i = 1; i <= code.size(); ++i) out[i - 1] = code.c() * i - 1 - code.entries()[i - 1];
  return ColoredLehmerCode(code.c(), std::move(out));
}

ColorSplit split_color(const ColoredLehmerCode& code) {
  const int c = code.c();
  std::vector<int> a(code.size());
  std::vector<int> b(code.size());
  for (int i = 0; i < code.size(); ++i) {
    a[i] = code.entries()[i] / c;
    b[i] = code.entries()[i] % c;
  }
  return {LehmerCode(std::move(a)), std::move(b)};
}

ColoredLehmerCode join_color(const LehmerCode& quotient, std::span<const int> colors, int c) {
  if (static_cast<int>(colors.size()) != quotient.size()) {
    throw std::invalid_argument("join_color: length mismatch");
  }
  std::vector<int> out(colors.size());
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 0 || colors[i] >= c) {
      throw std::invalid_argument("join_color: color " + std::to_string(colors[i]) +
                                  " outside [0, " + std::to_string(c - 1) + "]");
    }
    out[i] = c * quotient.entries()[i] + colors[i];
  }
  return ColoredLehmerCode(c, std::move(out));
}

RadixSplit split_radix(const ColoredLehmerCode& code) {
  std::vector<int> q(code.size());
  std::vector<int> r(code.size());
  for (int i = 1; i <= code.size(); ++i) {
    q[i - 1] = code.entries()[i - 1] / i;
    r[i - 1] = code.entries()[i - 1] % i;
  }
  return {std::move(q), LehmerCode(std::move(r))};
}

ColoredLehmerCode join_radix(const RadixSplit& split, int c) {
  const int n = split.remainder.size();
  if (static_cast<int>(split.multiplicities.size()) != n) {
    throw std::invalid_argument("join_radix: length mismatch");
  }
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) {
    const int q = split.multiplicities[i - 1];
    if (q < 0 || q >= c) throw std::invalid_argument("join_radix: multiplicity out of range");
    out[i - 1] = q * i + split.remainder.entries()[i - 1];
  }
  return ColoredLehmerCode(c, std::move(out));
}

std::vector<int> radix_partition(const RadixSplit& split) {
  std::vector<int> parts;
  for (std::size_t i = 0; i < split.multiplicities.size(); ++i) {
    parts.insert(parts.end(), split.multiplicities[i], static_cast<int>(i + 1));
  }
  return parts;
}

ColoredPermutation code_to_colored_perm(const ColoredLehmerCode& code) {
  const auto [a, b] = split_color(code);
  const auto pi = decode(a);
  std::vector<int> values(pi.values().begin(), pi.values().end());
  std::vector<int> colors(values.size());
  for (std::size_t p = 0; p < values.size(); ++p) colors[p] = b[values[p] - 1];
  return ColoredPermutation(code.c(), std::move(values), std::move(colors));
}

ColoredLehmerCode perm_to_code(const ColoredPermutation& sigma) {
  const auto a = encode(sigma.underlying());
  std::vector<int> b(sigma.size());
  for (int p = 0; p < sigma.size(); ++p) b[sigma.values()[p] - 1] = sigma.colors()[p];
  return join_color(a, b, sigma.c());
}

std::string format(const LehmerCode& code) { return format_entries(code.entries()); }
std::string format(const ColoredLehmerCode& code) { return format_entries(code.entries()); }

ColoredLehmerCode parse_code(std::string_view text, int c) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw ParseError("code must be parenthesised: '" + std::string(text) + "'");
  }
  text = text.substr(1, text.size() - 2);
  std::vector<int> entries;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto field = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
      throw ParseError("malformed code entry '" + std::string(field) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw ParseError("trailing comma in code");
  }
  try {
    return ColoredLehmerCode(c, std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

CodeStream::CodeStream(int n, int c, const ExactInt& cap, std::vector<int> prefix)
    : n_(n), c_(c), fixed_(prefix.size()), entries_(std::move(prefix)) {
  if (n_ < 0 || c_ < 1) throw std::invalid_argument("CodeStream: need n >= 0 and c >= 1");
  if (static_cast<int>(fixed_) > n_) throw std::invalid_argument("CodeStream: prefix too long");
  check_cap(n_, c_, cap);
  check_bounds(entries_, c_);
  entries_.resize(n_, 0);
  sum_ = sum_of(entries_);
}

void CodeStream::advance() {
  for (std::size_t i = entries_.size(); i-- > fixed_;) {
    const int radix = c_ * static_cast<int>(i + 1);
    if (entries_[i] + 1 < radix) {
      ++entries_[i];
      ++sum_;
      return;
    }
    sum_ -= entries_[i];
    entries_[i] = 0;
  }
  done_ = true;
}

}  // namespace colmah
