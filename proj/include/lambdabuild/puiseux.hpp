#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "lambdabuild/rational.hpp"

namespace lambdabuild {

/**
 * Finitely supported Puiseux series sum c_q X^q with rational exponents and
 * rational coefficients.
 *
 * The generator X is infinitely large: (-v)(X) = 1 and (-v)(f) is the leading
 * (largest) exponent. The valuation ring O is {f : (-v)(f) <= 0}.
 *
 * An optional precision floor e marks every term with exponent <= e as
 * unknown. Series without a floor are exact. Arithmetic propagates floors so
 * that the stored terms are always correct.
 */
class PuiseuxSeries {
 public:
  using TermMap = std::map<Rational, Rational>;  // exponent -> nonzero coefficient

  PuiseuxSeries() = default;
  PuiseuxSeries(long c);
  PuiseuxSeries(const Rational& c);

  static PuiseuxSeries monomial(const Rational& exponent, const Rational& coeff);
  static PuiseuxSeries x() { return monomial(1, 1); }
  static PuiseuxSeries from_terms(TermMap terms, std::optional<Rational> floor = std::nullopt);

  const TermMap& terms() const { return terms_; }
  const std::optional<Rational>& precision_floor() const { return floor_; }
  bool is_exact() const { return !floor_.has_value(); }
  bool is_exact_zero() const { return terms_.empty() && !floor_; }
  bool is_monomial() const { return is_exact() && terms_.size() == 1; }
  bool is_constant() const;

  // Leading exponent; -inf for the exact zero.
  ExtRational neg_val() const;
  Rational leading_coefficient() const;
  int sign() const;

  // Known terms only; throws when the whole series is below its floor.
  Rational coefficient(const Rational& exponent) const;

  // Inverse up to X^floor; the result always records `floor`.
  PuiseuxSeries invert(const Rational& floor) const;
  // Exact inverse, available only for monomials.
  std::optional<PuiseuxSeries> exact_inverse() const;
  PuiseuxSeries truncated(const Rational& floor) const;
  PuiseuxSeries without_floor() const;

  PuiseuxSeries operator-() const;
  PuiseuxSeries& operator+=(const PuiseuxSeries& o);
  PuiseuxSeries& operator-=(const PuiseuxSeries& o);
  PuiseuxSeries& operator*=(const PuiseuxSeries& o);
  friend PuiseuxSeries operator+(PuiseuxSeries a, const PuiseuxSeries& b) { return a += b; }
  friend PuiseuxSeries operator-(PuiseuxSeries a, const PuiseuxSeries& b) { return a -= b; }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

  // Structural equality: same known terms and same floor.
  friend bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b);

  std::string str() const;

 private:
  // Largest exponent that may carry a nonzero contribution (leading term or floor).
  std::optional<Rational> top() const;
  void apply_floor();

  TermMap terms_;
  std::optional<Rational> floor_;
};

// Order of the field: the sign of the leading coefficient of f - g.
std::strong_ordering cmp(const PuiseuxSeries& f, const PuiseuxSeries& g);

// Exact f / g when g is a monomial, otherwise f * invert(g, floor).
PuiseuxSeries divide(const PuiseuxSeries& f, const PuiseuxSeries& g, const Rational& floor);

}  // namespace lambdabuild
