#pragma once

#include <compare>
#include <optional>
#include <string>

#include "lambdabuild/rational.hpp"

namespace lambdabuild {

enum class GroupTag { Q, Z, Z_third, ZxZ_lex };

std::string group_tag_name(GroupTag tag);

// An element of one of the four supported ordered abelian groups.
//
// Q and Z_third keep their payload in `rational`; Z keeps an integer in
// `rational` with denominator 1; ZxZ_lex keeps the pair in (first, second).
class LambdaValue {
 public:
  static LambdaValue q(const Rational& v);
  static LambdaValue z(const mpz_class& v);
  static LambdaValue z_third(const Rational& v);  // GroupMismatch unless the denominator is a power of 3
  static LambdaValue lex(const mpz_class& first, const mpz_class& second);
  static LambdaValue zero(GroupTag tag);

  GroupTag tag() const { return tag_; }
  const Rational& rational() const { return rational_; }
  const mpz_class& first() const { return first_; }
  const mpz_class& second() const { return second_; }

  int sign() const;
  LambdaValue negated() const;
  LambdaValue times(long k) const;

  std::string str() const;  // the textual forms "3/2", "z:3", "z3:4/9", "lex:(1,5)"

  friend bool operator==(const LambdaValue& a, const LambdaValue& b);

 private:
  GroupTag tag_ = GroupTag::Q;
  Rational rational_;
  mpz_class first_, second_;
};

LambdaValue add(const LambdaValue& a, const LambdaValue& b);
LambdaValue sub(const LambdaValue& a, const LambdaValue& b);
std::strong_ordering cmp(const LambdaValue& a, const LambdaValue& b);
LambdaValue abs(const LambdaValue& a);

// max{t : 0 <= 2t <= lambda0}, absent when the supremum is not attained.
std::optional<LambdaValue> halving_max(const LambdaValue& lambda0);

// Closed interval [lo, hi] in a single group.
class LambdaInterval {
 public:
  LambdaInterval(LambdaValue lo, LambdaValue hi);
  const LambdaValue& lo() const { return lo_; }
  const LambdaValue& hi() const { return hi_; }
  bool contains(const LambdaValue& v) const;
  LambdaValue length() const { return sub(hi_, lo_); }

 private:
  LambdaValue lo_, hi_;
};

}  // namespace lambdabuild
