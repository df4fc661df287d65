#include "doctest.h"

#include "brute.hpp"
#include "colmah/statistics.hpp"

using namespace colmah;

TEST_CASE("classical statistics") {
  const auto p = parse_permutation("2 3 1 4");
  CHECK(inv(p) == 2);
  CHECK(maj(p) == 2);
  CHECK(inv(Permutation::identity(5)) == 0);
  CHECK(maj(Permutation::identity(5)) == 0);
  CHECK(inv(parse_permutation("3 2 1")) == 3);
  CHECK(maj(parse_permutation("2 1")) == 1);
  CHECK(inv(Permutation::identity(0)) == 0);
}

TEST_CASE("worked example splits into its three summands") {
  const auto s = parse_colored("3[1] 2 1[2] 4[1]", 3);
  CHECK(inv(s.underlying()) == 3);
  CHECK(col(s) == 4);
  CHECK(cross_term(s) == 3);
  CHECK(inv_c(s) == 16);
  CHECK(tilde_inv_c(s) == 13);
}

TEST_CASE("edge values") {
  for (int c = 1; c <= 5; ++c) {
    CHECK(inv_c(ColoredPermutation::identity(4, c)) == 0);
    CHECK(col(ColoredPermutation::sigma_max(4, c)) == 4 * (c - 1));
  }
  CHECK(inv_c(ColoredPermutation::sigma_max(4, 3)) == 26);
  CHECK(max_inv_c(4, 3) == 26);
  CHECK(max_inv_c(0, 7) == 0);
  CHECK(max_inv_c(3, 2) == 9);
  CHECK(cross_term(parse_colored("1[1] 2[1]", 2)) == 1);
  CHECK(tilde_inv_c(parse_colored("1 2 3[1]", 2)) == 1);
  CHECK(tilde_inv_c(parse_colored("3[1] 2[1] 1[1]", 2)) == 9);
}

TEST_CASE("names round-trip") {
  for (auto k : {StatisticKind::InvC, StatisticKind::TildeInvC, StatisticKind::InvUnderlying, StatisticKind::Col}) {
    CHECK(parse_statistic(statistic_name(k)) == k);
  }
  CHECK(statistic_name(StatisticKind::TildeInvC) == "tilde_inv_c");
  CHECK_FALSE(parse_statistic("INV_C").has_value());
}

TEST_CASE("library statistics match the definitions on every small element") {
  for (int c = 1; c <= 4; ++c) {
    for (int n = 0; n <= 4; ++n) {
      brute::each(n, c, [&](const brute::Element& e) {
        const ColoredPermutation s(c, e.values, e.colors);
        const auto a = brute::inv_c(e, c);
        CHECK(inv_c(s) == a);
        CHECK(tilde_inv_c(s) == brute::tilde_inv_c(e, c));
        CHECK(kernel::evaluate(StatisticKind::InvC, s.view()) == a);
        CHECK(evaluate(StatisticKind::Col, s) == col(s));
        CHECK(a <= kernel::max_inv_c(n, c));
        if (c >= 2 && a == kernel::max_inv_c(n, c)) CHECK(s == ColoredPermutation::sigma_max(n, c));
      });
    }
  }
}
