#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "colmah/exact.hpp"
#include "colmah/perm.hpp"

namespace colmah {

// Classical Lehmer code: entry i (1-based) counts the values j < i that sit
// to the right of i, so 0 <= l_i < i.
class LehmerCode {
 public:
  LehmerCode() = default;
  explicit LehmerCode(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  std::int64_t sum() const;

  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;

 private:
  std::vector<int> entries_;
};

// Colored Lehmer code: 0 <= l_i < c*i.
class ColoredLehmerCode {
 public:
  ColoredLehmerCode(int c, std::vector<int> entries);

  int c() const { return c_; }
  int size() const { return static_cast<int>(entries_.size()); }
  std::span<const int> entries() const { return entries_; }
  std::int64_t sum() const;

  friend bool operator==(const ColoredLehmerCode&, const ColoredLehmerCode&) = default;

 private:
  int c_;
  std::vector<int> entries_;
};

LehmerCode encode(const Permutation& pi);
// Inserts 1..n in turn, value i landing l_i places from the right.
Permutation decode(const LehmerCode& code);

// l_i -> c*i - 1 - l_i. Maps codes of sum k to codes of sum max_inv_c - k.
ColoredLehmerCode complement(const ColoredLehmerCode& code);

// l_i = c*a_i + b_i with 0 <= b_i < c.
struct ColorSplit {
  LehmerCode quotient;
  std::vector<int> colors;
};
ColorSplit split_color(const ColoredLehmerCode& code);
ColoredLehmerCode join_color(const LehmerCode& quotient, std::span<const int> colors, int c);

// l_i = q_i*i + r_i with 0 <= r_i < i, hence 0 <= q_i < c. The weights
// sum(i*q_i) are partitions into parts <= n, each used at most c-1 times.
struct RadixSplit {
  std::vector<int> multiplicities;
  LehmerCode remainder;
};
RadixSplit split_radix(const ColoredLehmerCode& code);
ColoredLehmerCode join_radix(const RadixSplit& split, int c);
// Parts of the partition encoded by the multiplicities, non-decreasing.
std::vector<int> radix_partition(const RadixSplit& split);

// Realises tilde_inv_c: |sigma| = decode(a) and value i carries color b_i,
// where (a, b) = split_color(code). tilde_inv_c(result) == code.sum().
ColoredPermutation code_to_colored_perm(const ColoredLehmerCode& code);
ColoredLehmerCode perm_to_code(const ColoredPermutation& sigma);

// Wire format "(0,1,2,0)"; "()" for n = 0.
std::string format(const LehmerCode& code);
std::string format(const ColoredLehmerCode& code);
ColoredLehmerCode parse_code(std::string_view text, int c);

// Mixed-radix counter over all c^n n! colored codes (radices c, 2c, ..., nc),
// lexicographic with the last entry fastest. A fixed prefix restricts the
// stream to the codes starting with it, which is how the stream is split.
class CodeStream {
 public:
  // Throws CapExceeded when the (unrestricted) stream is larger than `cap`.
  CodeStream(int n, int c, const ExactInt& cap, std::vector<int> prefix = {});

  bool done() const { return done_; }
  std::span<const int> entries() const { return entries_; }
  ColoredLehmerCode current() const { return ColoredLehmerCode(c_, entries_); }
  std::int64_t sum() const { return sum_; }
  void advance();

 private:
  int n_;
  int c_;
  std::size_t fixed_;
  std::vector<int> entries_;
  std::int64_t sum_ = 0;
  bool done_ = false;
};

}  // namespace colmah
