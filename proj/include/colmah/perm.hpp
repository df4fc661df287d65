#pragma once

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace colmah {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The colored element value^[color] of the alphabet with c colors.
struct ColoredElement {
  int value = 1;
  int color = 0;

  friend auto operator<=>(const ColoredElement&, const ColoredElement&) = default;
};

// A classical permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `values` is a permutation of 1..n.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  // Value at 0-based position `pos`.
  int operator[](std::size_t pos) const { return values_[pos]; }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

// Non-owning window (values and colors, both 0-based positions) of an
// element of G_{c,n}.
struct WindowView {
  std::span<const int> values;
  std::span<const int> colors;
  int c = 1;

  int size() const { return static_cast<int>(values.size()); }
};

// Element of G_{c,n} stored by its one-line window. The action on the whole
// colored alphabet follows from sigma(i^[j]) = sigma(i)^[j].
class ColoredPermutation {
 public:
  // Throws std::invalid_argument on c < 1, a non-permutation, mismatched
  // lengths or a color outside [0, c-1].
  ColoredPermutation(int c, std::vector<int> values, std::vector<int> colors);
  ColoredPermutation(int c, const Permutation& underlying);

  static ColoredPermutation identity(int n, int c);
  // 1^[c-1] 2^[c-1] ... n^[c-1], the unique maximiser of inv_c when c >= 2.
  static ColoredPermutation sigma_max(int n, int c);

  int c() const { return c_; }
  int size() const { return static_cast<int>(values_.size()); }
  std::span<const int> values() const { return values_; }
  std::span<const int> colors() const { return colors_; }
  // Image of the uncolored element i (1-based).
  ColoredElement image(int i) const { return {values_[i - 1], colors_[i - 1]}; }

  Permutation underlying() const { return Permutation(values_); }
  WindowView view() const { return {values_, colors_, c_}; }

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

 private:
  int c_;
  std::vector<int> values_;
  std::vector<int> colors_;
};

// Parses space-separated tokens "v[k]" ("v" alone means color 0). When
// `expected_n` is non-negative the token count must equal it.
ColoredPermutation parse_colored(std::string_view text, int c, int expected_n = -1);
Permutation parse_permutation(std::string_view text);

// Canonical text: "v[k]" tokens with "[0]" suppressed.
std::string format(const ColoredPermutation& sigma);
std::string format(const Permutation& pi);
std::string format(const ColoredElement& x);
// Display form using a combining overline per color unit. Not parseable.
std::string format_bars(const ColoredPermutation& sigma);

ColoredElement apply(const ColoredPermutation& sigma, ColoredElement x);

// (sigma o tau)(x) = sigma(tau(x)). Throws std::invalid_argument on
// mismatched (c, n).
ColoredPermutation compose(const ColoredPermutation& sigma, const ColoredPermutation& tau);
ColoredPermutation inverse(const ColoredPermutation& sigma);

using Cycle = std::vector<ColoredElement>;

// Orbits of sigma on all c*n colored elements. Each cycle starts at its
// minimal element (by value, then color); cycles are sorted by that element.
std::vector<Cycle> cycle_decomposition(const ColoredPermutation& sigma);
std::string format_cycles(const std::vector<Cycle>& cycles);

// sigma o sigma = identity.
bool is_involution(const ColoredPermutation& sigma);
// Every cycle has length at most two.
bool involution_by_cycles(const ColoredPermutation& sigma);
// Fixed values need 2*color = 0 (mod c); swapped pairs need c1 + c2 = 0 (mod c).
bool involution_by_color_conditions(const ColoredPermutation& sigma);

// No position i with sigma_i = i and color 0.
bool is_derangement(const ColoredPermutation& sigma);
bool is_derangement(WindowView w);
bool is_involution(WindowView w);

}  // namespace colmah
