#include "colmah/perm.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace colmah {
namespace {

void check_permutation(std::span<const int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("value " + std::to_string(v) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
    if (seen[v]) throw std::invalid_argument("duplicate value " + std::to_string(v));
    seen[v] = true;
  }
}

int parse_int(std::string_view s, std::string_view token) {
  int out = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("malformed token '" + std::string(token) + "'");
  }
  return out;
}

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n')) ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n') ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  return tokens;
}

ColoredElement parse_token(std::string_view token) {
  const auto open = token.find('[');
  if (open == std::string_view::npos) return {parse_int(token, token), 0};
  if (token.back() != ']') throw ParseError("malformed token '" + std::string(token) + "'");
  return {parse_int(token.substr(0, open), token),
          parse_int(token.substr(open + 1, token.size() - open - 2), token)};
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  check_permutation(values_);
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

ColoredPermutation::ColoredPermutation(int c, std::vector<int> values, std::vector<int> colors)
    : c_(c), values_(std::move(values)), colors_(std::move(colors)) {
  if (c_ < 1) throw std::invalid_argument("number of colors must be at least 1");
  if (values_.size() != colors_.size()) {
    throw std::invalid_argument("values and colors differ in length");
  }
  check_permutation(values_);
  for (int k : colors_) {
    if (k < 0 || k >= c_) {
      throw std::invalid_argument("color " + std::to_string(k) + " outside [0, " +
                                  std::to_string(c_ - 1) + "]");
    }
  }
}

ColoredPermutation::ColoredPermutation(int c, const Permutation& underlying)
    : ColoredPermutation(c, std::vector<int>(underlying.values().begin(), underlying.values().end()),
                         std::vector<int>(underlying.size(), 0)) {}

ColoredPermutation ColoredPermutation::identity(int n, int c) {
  return ColoredPermutation(c, Permutation::identity(n));
}

ColoredPermutation ColoredPermutation::sigma_max(int n, int c) {
  auto id = Permutation::identity(n);
  return ColoredPermutation(c, std::vector<int>(id.values().begin(), id.values().end()),
                            std::vector<int>(n, c - 1));
}

ColoredPermutation parse_colored(std::string_view text, int c, int expected_n) {
  const auto tokens = split_tokens(text);
  if (expected_n >= 0 && static_cast<int>(tokens.size()) != expected_n) {
    throw ParseError("expected " + std::to_string(expected_n) + " tokens, got " +
                     std::to_string(tokens.size()));
  }
  std::vector<int> values;
  std::vector<int> colors;
  for (auto token : tokens) {
    const auto e = parse_token(token);
    values.push_back(e.value);
    colors.push_back(e.color);
  }
  try {
    return ColoredPermutation(c, std::move(values), std::move(colors));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Permutation parse_permutation(std::string_view text) {
  const auto sigma = parse_colored(text, 1);
  return sigma.underlying();
}

std::string format(const ColoredElement& x) {
  std::string out = std::to_string(x.value);
  if (x.color != 0) out += "[" + std::to_string(x.color) + "]";
  return out;
}

std::string format(const ColoredPermutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) out += ' ';
    out += format(sigma.image(i));
  }
  return out;
}

std::string format(const Permutation& pi) {
  std::string out;
  for (int i = 0; i < pi.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(pi[i]);
  }
  return out;
}

std::string format_bars(const ColoredPermutation& sigma) {
  std::string out;
  for (int i = 1; i <= sigma.size(); ++i) {
    if (i > 1) out += ' ';
    const auto e = sigma.image(i);
    out += std::to_string(e.value);
    for (int k = 0; k < e.color; ++k) out += "\xCC\x85";  // U+0305 combining overline
  }
  return out;
}

ColoredElement apply(const ColoredPermutation& sigma, ColoredElement x) {
  const auto img = sigma.image(x.value);
  return {img.value, (img.color + x.color) % sigma.c()};
}

ColoredPermutation compose(const ColoredPermutation& sigma, const ColoredPermutation& tau) {
  if (sigma.c() != tau.c() || sigma.size() != tau.size()) {
    throw std::invalid_argument("compose: mismatched (c, n)");
  }
  const int n = sigma.size();
  std::vector<int> values(n);
  std::vector<int> colors(n);
  for (int i = 1; i <= n; ++i) {
    const auto e = apply(sigma, tau.image(i));
    values[i - 1] = e.value;
    colors[i - 1] = e.color;
  }
  return ColoredPermutation(sigma.c(), std::move(values), std::move(colors));
}

ColoredPermutation inverse(const ColoredPermutation& sigma) {
  // sigma(i) = v^[k]  =>  sigma^{-1}(v) = i^[-k].
  const int n = sigma.size();
  const int c = sigma.c();
  std::vector<int> values(n);
  std::vector<int> colors(n);
  for (int i = 1; i <= n; ++i) {
    const auto e = sigma.image(i);
    values[e.value - 1] = i;
    colors[e.value - 1] = (c - e.color) % c;
  }
  return ColoredPermutation(c, std::move(values), std::move(colors));
}

std::vector<Cycle> cycle_decomposition(const ColoredPermutation& sigma) {
  const int n = sigma.size();
  const int c = sigma.c();
  std::vector<bool> seen(static_cast<std::size_t>(n) * c, false);
  auto index = [c](ColoredElement x) { return static_cast<std::size_t>(x.value - 1) * c + x.color; };

  // Scanning in (value, color) order visits each orbit first at its minimum,
  // so the output is already sorted by representative.
  std::vector<Cycle> cycles;
  for (int v = 1; v <= n; ++v) {
    for (int k = 0; k < c; ++k) {
      ColoredElement start{v, k};
      if (seen[index(start)]) continue;
      Cycle cycle;
      for (auto x = start; !seen[index(x)]; x = apply(sigma, x)) {
        seen[index(x)] = true;
        cycle.push_back(x);
      }
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

std::string format_cycles(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const auto& cycle : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += format(cycle[i]);
    }
    out += ')';
  }
  return out;
}

bool is_involution(const ColoredPermutation& sigma) {
  return compose(sigma, sigma) == ColoredPermutation::identity(sigma.size(), sigma.c());
}

bool involution_by_cycles(const ColoredPermutation& sigma) {
  const auto cycles = cycle_decomposition(sigma);
  return std::all_of(cycles.begin(), cycles.end(),
                     [](const Cycle& cyc) { return cyc.size() <= 2; });
}

bool is_involution(WindowView w) {
  for (int i = 0; i < w.size(); ++i) {
    const int j = w.values[i] - 1;
    if (w.values[j] - 1 != i) return false;
    // For i == j this reads 2*color = 0 (mod c).
    if ((w.colors[i] + w.colors[j]) % w.c != 0) return false;
  }
  return true;
}

bool involution_by_color_conditions(const ColoredPermutation& sigma) {
  return is_involution(sigma.view());
}

bool is_derangement(WindowView w) {
  for (int i = 0; i < w.size(); ++i) {
    if (w.values[i] == i + 1 && w.colors[i] == 0) return false;
  }
  return true;
}

bool is_derangement(const ColoredPermutation& sigma) { return is_derangement(sigma.view()); }

}  // namespace colmah
