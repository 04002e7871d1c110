#include "lambdabuild/lambdaspaces.hpp"

#include <algorithm>
#include <array>

#include "lambdabuild/error.hpp"

namespace lambdabuild {

HPoint::HPoint(PuiseuxSeries x, PuiseuxSeries y) : x_(std::move(x)), y_(std::move(y)) {
  if (y_.is_exact_zero() || y_.sign() <= 0) throw Error(Errc::NonPositiveY, y_.str());
}

Rational tree_distance(const HPoint& p, const HPoint& q) {
  // The cross ratio satisfies cr = cosh d + sqrt(cosh^2 d - 1) with both
  // summands positive and of the same leading exponent, so (-v)(cr) = (-v)(cosh d).
  PuiseuxSeries dx = p.x() - q.x();
  PuiseuxSeries dy = p.y() - q.y();
  PuiseuxSeries den = PuiseuxSeries(2) * p.y() * q.y();
  PuiseuxSeries num = dx * dx + dy * dy + den;
  return num.neg_val().value() - den.neg_val().value();
}

HPoint mobius_act(const Mat& g, const HPoint& p, const Rational& relative_floor) {
  if (g.n() != 2) throw Error(Errc::DimensionMismatch, "Moebius action needs a 2 x 2 matrix");
  const PuiseuxSeries &a = g(0, 0), &b = g(0, 1), &c = g(1, 0), &d = g(1, 1);
  const PuiseuxSeries cxd = c * p.x() + d;
  const PuiseuxSeries y2 = p.y() * p.y();
  const PuiseuxSeries den = cxd * cxd + c * c * y2;
  const PuiseuxSeries xnum = (a * p.x() + b) * cxd + a * c * y2;
  PuiseuxSeries inv;
  if (auto e = den.exact_inverse()) inv = *e;
  else inv = den.invert(relative_floor - den.neg_val().value());
  return HPoint(xnum * inv, p.y() * inv);
}

bool four_point_check(const HPoint& p1, const HPoint& p2, const HPoint& p3, const HPoint& p4) {
  std::array<Rational, 3> s{tree_distance(p1, p2) + tree_distance(p3, p4),
                            tree_distance(p1, p3) + tree_distance(p2, p4),
                            tree_distance(p1, p4) + tree_distance(p2, p3)};
  std::sort(s.begin(), s.end());
  return s[1] == s[2];
}

CTPoint::CTPoint(LambdaValue base, LambdaValue height) : base_(std::move(base)), height_(std::move(height)) {
  if (base_.tag() != GroupTag::Z_third || height_.tag() != GroupTag::Z_third)
    throw Error(Errc::GroupMismatch, "circle-tree coordinates live in Z[1/3]");
  if (base_.rational() < 0 || base_.rational() >= 1) throw Error(Errc::NonPositiveInput, "base must lie in [0, 1)");
  if (height_.rational() < 0) throw Error(Errc::NonPositiveInput, "height must be >= 0");
}

LambdaValue circle_tree_distance(const CTPoint& p, const CTPoint& q) {
  if (p.base() == q.base()) return abs(sub(p.height(), q.height()));
  const LambdaValue arc = abs(sub(p.base(), q.base()));
  const LambdaValue other = sub(LambdaValue::z_third(1), arc);
  const LambdaValue shorter = cmp(arc, other) <= 0 ? arc : other;
  return add(add(p.height(), q.height()), shorter);
}

}  // namespace lambdabuild
