#pragma once

#include <string>

#include "lambdabuild/exactlin.hpp"
#include "lambdabuild/ordgroup.hpp"

namespace lambdabuild {

// Point x + iy of the upper half plane over the Puiseux field, y > 0.
class HPoint {
 public:
  HPoint(PuiseuxSeries x, PuiseuxSeries y);  // throws NonPositiveY
  const PuiseuxSeries& x() const { return x_; }
  const PuiseuxSeries& y() const { return y_; }
  bool is_exact() const { return x_.is_exact() && y_.is_exact(); }
  std::string str() const { return "(" + x_.str() + ", " + y_.str() + ")"; }

 private:
  PuiseuxSeries x_, y_;
};

// (-v) of cosh d(p, q) = 1 + |p - q|^2 / (2 y_p y_q), evaluated without division.
Rational tree_distance(const HPoint& p, const HPoint& q);

// Moebius action of a 2 x 2 determinant-one matrix. The denominator
// |cz + d|^2 is inverted exactly when it is a monomial and to `floor` below
// its leading term otherwise.
HPoint mobius_act(const Mat& g, const HPoint& p, const Rational& relative_floor = Rational(-32));

bool four_point_check(const HPoint& p1, const HPoint& p2, const HPoint& p3, const HPoint& p4);

// Circle of circumference 1 over Z[1/3] with a ray glued at every point.
class CTPoint {
 public:
  CTPoint(LambdaValue base, LambdaValue height);
  const LambdaValue& base() const { return base_; }
  const LambdaValue& height() const { return height_; }
  std::string str() const { return "(" + base_.str() + ", " + height_.str() + ")"; }

 private:
  LambdaValue base_, height_;
};

LambdaValue circle_tree_distance(const CTPoint& p, const CTPoint& q);

}  // namespace lambdabuild
