#include "doctest.h"

#include <set>
#include <sstream>

#include "colmah/cap.hpp"
#include "colmah/lehmer.hpp"
#include "colmah/statistics.hpp"

using namespace colmah;

namespace {
LehmerCode lc(std::vector<int> v) { return LehmerCode(std::move(v)); }
ColoredLehmerCode code(int c, std::vector<int> v) { return ColoredLehmerCode(c, std::move(v)); }
}  // namespace

TEST_CASE("encode and decode") {
  CHECK(encode(parse_permutation("3 2 1 4")) == lc({0, 1, 2, 0}));
  CHECK(encode(Permutation::identity(4)) == lc({0, 0, 0, 0}));
  CHECK(encode(parse_permutation("3 2 1")) == lc({0, 1, 2}));
  CHECK(decode(lc({0, 1, 2, 0})) == parse_permutation("3 2 1 4"));
  CHECK(decode(lc({0, 0, 0})) == Permutation::identity(3));
  CHECK(decode(lc({0, 1, 2})) == parse_permutation("3 2 1"));
  CHECK_THROWS_AS(lc({1}), std::invalid_argument);
  CHECK_THROWS_AS(lc({0, 2}), std::invalid_argument);
}

TEST_CASE("complement") {
  CHECK(complement(code(1, {0, 1, 2, 0})) == code(1, {0, 0, 0, 3}));
  CHECK(complement(code(2, {1, 3})) == code(2, {0, 0}));
  const auto c = complement(code(3, {0, 0}));
  CHECK(c == code(3, {2, 5}));
  CHECK(c.sum() == 7);
  CHECK(max_inv_c(2, 3) == 7);
}

TEST_CASE("color split") {
  const auto [a, b] = split_color(code(2, {1, 3, 0, 5}));
  CHECK(a == lc({0, 1, 0, 2}));
  CHECK(b == std::vector<int>{1, 1, 0, 1});
  const auto [a3, b3] = split_color(code(3, {2, 4}));
  CHECK(a3 == lc({0, 1}));
  CHECK(b3 == std::vector<int>{2, 1});
  CHECK(join_color(lc({0, 1, 0, 2}), std::vector<int>{1, 1, 0, 1}, 2) == code(2, {1, 3, 0, 5}));
  CHECK(join_color(lc({0, 1}), std::vector<int>{2, 1}, 3) == code(3, {2, 4}));
  CHECK(join_color(lc({0, 0}), std::vector<int>{0, 0}, 4) == code(4, {0, 0}));
  CHECK_THROWS_AS(join_color(lc({0, 0}), std::vector<int>{0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(join_color(lc({0}), std::vector<int>{2}, 2), std::invalid_argument);
}

TEST_CASE("radix split") {
  const auto r = split_radix(code(2, {1, 3, 0, 5}));
  CHECK(r.multiplicities == std::vector<int>{1, 1, 0, 1});
  CHECK(r.remainder == lc({0, 1, 0, 1}));
  const auto r3 = split_radix(code(3, {2, 5}));
  CHECK(r3.multiplicities == std::vector<int>{2, 2});
  CHECK(r3.remainder == lc({0, 1}));
  CHECK(radix_partition(r3) == std::vector<int>{1, 1, 2, 2});
  CHECK(join_radix(r3, 3) == code(3, {2, 5}));
  const auto z = split_radix(code(3, {0, 0, 0}));
  CHECK(z.multiplicities == std::vector<int>{0, 0, 0});
  CHECK(radix_partition(z).empty());
}

TEST_CASE("colored code to permutation") {
  CHECK(code_to_colored_perm(code(3, {0, 0, 0})) == ColoredPermutation::identity(3, 3));
  const auto s = code_to_colored_perm(code(2, {0, 0, 1}));
  CHECK(format(s) == "1 2 3[1]");
  CHECK(tilde_inv_c(s) == 1);
  const auto m = code_to_colored_perm(code(2, {1, 3, 5}));
  CHECK(format(m) == "3[1] 2[1] 1[1]");
  CHECK(tilde_inv_c(m) == 9);
  CHECK(perm_to_code(parse_colored("3[1] 2 1[2] 4[1]", 3)) == code(3, {2, 3, 7, 1}));
}

TEST_CASE("wire format") {
  CHECK(format(code(2, {0, 1, 2, 0})) == "(0,1,2,0)");
  CHECK(parse_code("(0,1,2,0)", 2) == code(2, {0, 1, 2, 0}));
  CHECK(parse_code("()", 2).size() == 0);
  CHECK_THROWS_AS(parse_code("0,1", 2), ParseError);
  CHECK_THROWS_AS(parse_code("(0,)", 2), ParseError);
  CHECK_THROWS_AS(parse_code("(0,x)", 2), ParseError);
  CHECK_THROWS_AS(parse_code("(2)", 2), ParseError);
}

TEST_CASE("code stream") {
  std::vector<std::string> seen;
  for (CodeStream s(0, 3, 10); !s.done(); s.advance()) seen.push_back(format(s.current()));
  CHECK(seen == std::vector<std::string>{"()"});
  seen.clear();
  for (CodeStream s(2, 1, 10); !s.done(); s.advance()) seen.push_back(format(s.current()));
  CHECK(seen == std::vector<std::string>{"(0,0)", "(0,1)"});

  // All 32 codes of length 4 with two colors and entry sum 5.
  const std::set<std::string> listed{
      "0005", "0014", "0023", "0032", "0041", "0050", "0104", "0113", "0122", "0131", "0140",
      "0203", "0212", "0221", "0230", "0302", "0311", "0320", "1004", "1013", "1022", "1031",
      "1040", "1103", "1112", "1121", "1130", "1202", "1211", "1220", "1301", "1310"};
  std::set<std::string> found;
  for (CodeStream s(4, 2, 1000); !s.done(); s.advance()) {
    if (s.sum() != 5) continue;
    std::string digits;
    for (int x : s.entries()) digits += std::to_string(x);
    found.insert(digits);
  }
  CHECK(found == listed);

  std::size_t count = 0;
  for (CodeStream s(3, 2, 1000, {1}); !s.done(); s.advance()) {
    CHECK(s.entries()[0] == 1);
    ++count;
  }
  CHECK(count == 4 * 6);
  CHECK_THROWS_AS(CodeStream(4, 2, 383), CapExceeded);
}

TEST_CASE("round trips over every code up to order 10^4") {
  for (int c = 1; c <= 4; ++c) {
    for (int n = 0; group_order(n, c) <= 10'000; ++n) {
      std::set<std::string> images;
      for (CodeStream s(n, c, 10'000); !s.done(); s.advance()) {
        const auto l = s.current();
        CHECK(l.sum() == s.sum());
        const auto sigma = code_to_colored_perm(l);
        CHECK(perm_to_code(sigma) == l);
        CHECK(tilde_inv_c(sigma) == l.sum());
        images.insert(format(sigma));
        const auto [a, b] = split_color(l);
        CHECK(join_color(a, b, c) == l);
        CHECK(encode(decode(a)) == a);
        CHECK(join_radix(split_radix(l), c) == l);
        CHECK(complement(complement(l)) == l);
        CHECK(complement(l).sum() == max_inv_c(n, c) - l.sum());
        CHECK(parse_code(format(l), c) == l);
      }
      CHECK(images.size() == static_cast<std::size_t>(group_order(n, c)));
    }
  }
}
