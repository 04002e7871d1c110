#include "helpers.hpp"
#include "lambdabuild/ordgroup.hpp"
#include "lambdabuild/sampling.hpp"

using namespace lambdabuild;
using testutil::Q;

TEST_SUITE("ordgroup") {
  TEST_CASE("addition in each group") {
    CHECK(add(LambdaValue::q(Q(1, 2)), LambdaValue::q(Q(1, 3))) == LambdaValue::q(Q(5, 6)));
    CHECK(add(LambdaValue::lex(1, 5), LambdaValue::lex(0, -5)) == LambdaValue::lex(1, 0));
    CHECK(add(LambdaValue::z_third(Q(1, 3)), LambdaValue::z_third(Q(2, 9))) == LambdaValue::z_third(Q(5, 9)));
    CHECK(add(LambdaValue::z(2), LambdaValue::z(-5)) == LambdaValue::z(-3));
  }

  TEST_CASE("mixed groups are rejected") {
    CHECK_ERRC(add(LambdaValue::q(1), LambdaValue::z(1)), Errc::GroupMismatch);
    CHECK_ERRC(cmp(LambdaValue::lex(1, 0), LambdaValue::z(1)), Errc::GroupMismatch);
    CHECK_ERRC(LambdaValue::z_third(Q(1, 2)), Errc::GroupMismatch);
  }

  TEST_CASE("comparison") {
    CHECK(cmp(LambdaValue::lex(1, -100), LambdaValue::lex(0, 100)) > 0);
    CHECK(cmp(LambdaValue::q(Q(1, 3)), LambdaValue::q(Q(1, 3))) == 0);
    CHECK(cmp(LambdaValue::z_third(Q(4, 9)), LambdaValue::z_third(Q(1, 3))) > 0);
    CHECK(cmp(LambdaValue::z(-2), LambdaValue::z(1)) < 0);
  }

  TEST_CASE("halving maximum") {
    CHECK(halving_max(LambdaValue::q(3))->rational() == Q(3, 2));
    CHECK(halving_max(LambdaValue::z(3))->rational() == 1);
    CHECK_FALSE(halving_max(LambdaValue::z_third(1)).has_value());
    CHECK(halving_max(LambdaValue::z_third(Q(2, 9)))->rational() == Q(1, 9));
    CHECK(halving_max(LambdaValue::lex(4, 3)).value() == LambdaValue::lex(2, 1));
    CHECK_FALSE(halving_max(LambdaValue::lex(3, 8)).has_value());
    CHECK_ERRC(halving_max(LambdaValue::q(0)), Errc::NonPositiveInput);
    CHECK_ERRC(halving_max(LambdaValue::z(-1)), Errc::NonPositiveInput);
  }

  TEST_CASE("textual forms") {
    CHECK(LambdaValue::q(Q(3, 2)).str() == "3/2");
    CHECK(LambdaValue::z(3).str() == "z:3");
    CHECK(LambdaValue::z_third(Q(4, 9)).str() == "z3:4/9");
    CHECK(LambdaValue::lex(1, 5).str() == "lex:(1,5)");
    for (const char* t : {"3/2", "z:3", "z3:4/9", "lex:(1,5)", "-1/3", "z:-4", "lex:(-1,0)"})
      CHECK(parse_lambda(t).str() == t);
  }

  TEST_CASE("interval") {
    LambdaInterval iv(LambdaValue::z(1), LambdaValue::z(4));
    CHECK(iv.contains(LambdaValue::z(1)));
    CHECK_FALSE(iv.contains(LambdaValue::z(5)));
    CHECK(iv.length() == LambdaValue::z(3));
  }

  TEST_CASE("property: ordered group laws on random values") {
    Sampler s(11);
    auto draw = [&](GroupTag tag) {
      switch (tag) {
        case GroupTag::Q: return LambdaValue::q(Q(s.uniform(-20, 20), s.uniform(1, 6)));
        case GroupTag::Z: return LambdaValue::z(s.uniform(-20, 20));
        case GroupTag::Z_third: {
          long k = s.uniform(0, 4), d = 1;
          for (long i = 0; i < k; ++i) d *= 3;
          return LambdaValue::z_third(Q(s.uniform(-50, 50), d));
        }
        default: return LambdaValue::lex(s.uniform(-3, 3), s.uniform(-3, 3));
      }
    };
    for (GroupTag tag : {GroupTag::Q, GroupTag::Z, GroupTag::Z_third, GroupTag::ZxZ_lex}) {
      for (int t = 0; t < 200; ++t) {
        const LambdaValue a = draw(tag), b = draw(tag), c = draw(tag);
        CHECK(add(a, b) == add(b, a));
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
        if (cmp(a, b) <= 0) CHECK(cmp(add(a, c), add(b, c)) <= 0);
        if (a.sign() >= 0 && b.sign() >= 0) CHECK(add(a, b).sign() >= 0);
        const long k = s.uniform(1, 5);
        if (a.times(k).sign() == 0) CHECK(a.sign() == 0);
        CHECK(add(a, a.negated()) == LambdaValue::zero(tag));
      }
    }
  }
}
