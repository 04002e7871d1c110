#include "helpers.hpp"
#include "lambdabuild/building.hpp"
#include "lambdabuild/lambdaspaces.hpp"
#include "lambdabuild/sampling.hpp"

using namespace lambdabuild;
using testutil::M;
using testutil::Q;
using testutil::S;

namespace {

CTPoint ct(const Rational& base, const Rational& height) {
  return CTPoint(LambdaValue::z_third(base), LambdaValue::z_third(height));
}

}  // namespace

TEST_SUITE("lambdaspaces") {
  TEST_CASE("tree distance") {
    CHECK(tree_distance(HPoint(0, 1), HPoint(0, S("X"))) == 1);
    CHECK(tree_distance(HPoint(S("X"), S("X^(1/2)")), HPoint(S("X"), S("X^(1/2)"))) == 0);
    CHECK(tree_distance(HPoint(0, 1), HPoint(1, 1)) == 0);
    CHECK(tree_distance(HPoint(0, 1), HPoint(S("X"), 1)) == 2);
    CHECK_ERRC(HPoint(0, S("-1")), Errc::NonPositiveY);
    CHECK_ERRC(HPoint(0, PuiseuxSeries()), Errc::NonPositiveY);
  }

  TEST_CASE("Moebius action") {
    const HPoint p(S("2 + X^(-1)"), S("X^(1/2)"));
    const HPoint q = mobius_act(Mat::identity(2), p);
    CHECK(q.x() == p.x());
    CHECK(q.y() == p.y());
    const HPoint r = mobius_act(Mat::monomial_diagonal({Q(1, 2), Q(-1, 2)}), HPoint(0, 1));
    CHECK(r.x().is_exact_zero());
    CHECK(r.y() == S("X"));
    const HPoint t = mobius_act(M(R"m([["1","X"],["0","1"]])m"), p);
    CHECK(t.x() == p.x() + S("X"));
    CHECK(t.y() == p.y());
    // z -> -1/z sends i to i
    const HPoint w = mobius_act(M(R"m([[0,1],[-1,0]])m"), HPoint(0, 1));
    CHECK(w.x().is_exact_zero());
    CHECK(w.y() == S("1"));
  }

  TEST_CASE("four-point condition examples") {
    const HPoint a(0, 1);
    CHECK(four_point_check(a, a, a, a));
    CHECK(four_point_check(HPoint(0, 1), HPoint(0, S("X")), HPoint(0, S("X^(2)")), HPoint(1, 1)));
  }

  TEST_CASE("circle tree") {
    CHECK(circle_tree_distance(ct(0, 0), ct(Q(1, 3), 0)) == LambdaValue::z_third(Q(1, 3)));
    CHECK(circle_tree_distance(ct(0, 1), ct(Q(1, 3), 0)) == LambdaValue::z_third(Q(4, 3)));
    CHECK(circle_tree_distance(ct(Q(1, 3), Q(1, 3)), ct(Q(1, 3), Q(4, 9))) == LambdaValue::z_third(Q(1, 9)));
    CHECK(circle_tree_distance(ct(0, 0), ct(Q(2, 3), 0)) == LambdaValue::z_third(Q(1, 3)));
    CHECK_ERRC(ct(1, 0), Errc::NonPositiveInput);
    CHECK_ERRC(CTPoint(LambdaValue::q(0), LambdaValue::q(0)), Errc::GroupMismatch);
  }

  TEST_CASE("property: tree distance is a pseudometric satisfying the four-point condition") {
    Sampler s(71);
    for (int t = 0; t < 300; ++t) {
      const HPoint a = s.hpoint(), b = s.hpoint(), c = s.hpoint(), d = s.hpoint();
      const Rational ab = tree_distance(a, b);
      CHECK(ab >= 0);
      CHECK(ab == tree_distance(b, a));
      CHECK(tree_distance(a, a) == 0);
      CHECK(tree_distance(a, c) <= ab + tree_distance(b, c));
      CHECK(four_point_check(a, b, c, d));
    }
  }

  TEST_CASE("property: invariance under exact Moebius maps") {
    Sampler s(72);
    for (int t = 0; t < 200; ++t) {
      const HPoint a = s.hpoint(), b = s.hpoint();
      const Mat g = t % 2 ? s.monomial_diagonal(2) : Mat::elementary(2, 0, 1, s.series(2));
      const HPoint ga = mobius_act(g, a), gb = mobius_act(g, b);
      REQUIRE(ga.is_exact());
      CHECK(tree_distance(ga, gb) == tree_distance(a, b));
    }
  }

  TEST_CASE("property: the rank one building distance is twice the tree distance") {
    for (long k = 1; k <= 12; ++k) {
      const Rational c = Q(k, 3);
      const Rational tree = tree_distance(HPoint(0, 1), HPoint(0, PuiseuxSeries::monomial(2 * c, 1)));
      const Rational building = distance(BuildingPoint::origin(2), BuildingPoint(Mat::monomial_diagonal({c, -c})));
      CHECK(tree == 2 * c);
      CHECK(building == 4 * c);
    }
  }

  TEST_CASE("property: circle tree arcs never tie and satisfy the triangle inequality") {
    Sampler s(73);
    auto draw = [&] {
      long k = s.uniform(1, 4), d = 1;
      for (long i = 0; i < k; ++i) d *= 3;
      Rational base(s.uniform(0, d - 1), d), height(s.coin() ? 0 : s.uniform(0, 2 * d), d);
      base.canonicalize();
      height.canonicalize();
      return ct(base, height);
    };
    for (int t = 0; t < 300; ++t) {
      const CTPoint a = draw(), b = draw(), c = draw();
      const Rational arc = abs(Rational(a.base().rational() - b.base().rational()));
      if (arc != 0) CHECK(arc != 1 - arc);
      CHECK(cmp(circle_tree_distance(a, c), add(circle_tree_distance(a, b), circle_tree_distance(b, c))) <= 0);
      CHECK(circle_tree_distance(a, b) == circle_tree_distance(b, a));
    }
  }
}
