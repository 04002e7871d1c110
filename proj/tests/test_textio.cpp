#include "helpers.hpp"
#include "lambdabuild/textio.hpp"

using namespace lambdabuild;
using testutil::Q;
using testutil::S;

namespace {

void expect_parse_error(const char* text, std::size_t position) {
  try {
    (void)parse_series(text);
    FAIL("no error for " << text);
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::ParseError);
    CHECK(e.position() == position);
    CHECK_FALSE(e.expected().empty());
  }
}

}  // namespace

TEST_SUITE("textio") {
  TEST_CASE("series grammar") {
    CHECK(S("X^(1/2) - 2 + 3*X^(-1)").terms().size() == 3);
    CHECK(S("1") == PuiseuxSeries(1));
    CHECK(S("-X^(3)") == PuiseuxSeries::monomial(3, -1));
    CHECK(S("X") == PuiseuxSeries::x());
    CHECK(S("  2 * X ^ ( 1/2 )") == PuiseuxSeries::monomial(Q(1, 2), 2));
    CHECK(S("3*X^2 + X") == PuiseuxSeries::monomial(2, 3) + PuiseuxSeries::x());
    CHECK(S("X - -2") == PuiseuxSeries::x() + PuiseuxSeries(2));
    CHECK(S("1/2 - 1/2").is_exact_zero());
  }

  TEST_CASE("parse errors carry position and expected token") {
    expect_parse_error("", 0);
    expect_parse_error("3*X^ + X", 5);
    expect_parse_error("X^(1/0)", 5);
    expect_parse_error("X +", 3);
    expect_parse_error("2X", 1);
    expect_parse_error("X^(1/2", 6);
  }

  TEST_CASE("matrices") {
    const Mat m = parse_matrix(R"m([["1","X"],[0,1]])m");
    CHECK(m.n() == 2);
    CHECK(m(0, 1) == PuiseuxSeries::x());
    CHECK(parse_matrix(format_matrix(m)) == m);
    CHECK_THROWS_AS(parse_matrix(R"m([["1","X"],["0"]])m"), ParseError);
    CHECK_THROWS_AS(parse_matrix("not json"), ParseError);
    CHECK_THROWS_AS(parse_matrix(R"m([["1","X^("],["0","1"]])m"), ParseError);
  }

  TEST_CASE("points and other literals") {
    CHECK(parse_point("(1/2, -1/2)") == ApartmentPoint{Q(1, 2), Q(-1, 2)});
    CHECK(parse_point("1,0,-1") == ApartmentPoint{1, 0, -1});
    const RootGroupElement u = parse_root_group("(1,2):X^(1/2) + 1");
    CHECK(u.i == 0);
    CHECK(u.j == 1);
    CHECK(u.t == S("X^(1/2) + 1"));
    CHECK(u.str() == "(1,2):X^(1/2) + 1");
    CHECK(parse_ctpoint("(1/3, 4/9)").height() == LambdaValue::z_third(Q(4, 9)));
    CHECK(parse_hpoint("(X, X^(1/2))").y() == S("X^(1/2)"));
    CHECK(parse_rational("-7/21") == Q(-1, 3));
    CHECK_THROWS_AS(parse_lambda("w:3"), ParseError);
    CHECK_THROWS_AS(parse_root_group("(1,1):X"), ParseError);
  }
}
