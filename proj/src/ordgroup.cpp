#include "lambdabuild/ordgroup.hpp"

#include "lambdabuild/error.hpp"

namespace lambdabuild {

namespace {

bool denominator_is_power_of_three(const Rational& v) {
  mpz_class d = v.get_den();
  while (d % 3 == 0) d /= 3;
  return d == 1;
}

void require_same(const LambdaValue& a, const LambdaValue& b) {
  if (a.tag() != b.tag())
    throw Error(Errc::GroupMismatch, group_tag_name(a.tag()) + " vs " + group_tag_name(b.tag()));
}

mpz_class floor_half(const mpz_class& v) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), 1);
  return r;
}

}  // namespace

std::string group_tag_name(GroupTag tag) {
  switch (tag) {
    case GroupTag::Q: return "Q";
    case GroupTag::Z: return "Z";
    case GroupTag::Z_third: return "Z[1/3]";
    case GroupTag::ZxZ_lex: return "ZxZ_lex";
  }
  return "?";
}

LambdaValue LambdaValue::q(const Rational& v) {
  LambdaValue r;
  r.tag_ = GroupTag::Q;
  r.rational_ = v;
  r.rational_.canonicalize();
  return r;
}

LambdaValue LambdaValue::z(const mpz_class& v) {
  LambdaValue r;
  r.tag_ = GroupTag::Z;
  r.rational_ = Rational(v);
  return r;
}

LambdaValue LambdaValue::z_third(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  if (!denominator_is_power_of_three(c))
    throw Error(Errc::GroupMismatch, to_string(c) + " is not in Z[1/3]");
  LambdaValue r;
  r.tag_ = GroupTag::Z_third;
  r.rational_ = c;
  return r;
}

LambdaValue LambdaValue::lex(const mpz_class& first, const mpz_class& second) {
  LambdaValue r;
  r.tag_ = GroupTag::ZxZ_lex;
  r.first_ = first;
  r.second_ = second;
  return r;
}

LambdaValue LambdaValue::zero(GroupTag tag) {
  switch (tag) {
    case GroupTag::Q: return q(0);
    case GroupTag::Z: return z(0);
    case GroupTag::Z_third: return z_third(0);
    case GroupTag::ZxZ_lex: return lex(0, 0);
  }
  return q(0);
}

int LambdaValue::sign() const {
  if (tag_ == GroupTag::ZxZ_lex) {
    int s = sgn(first_);
    return s != 0 ? s : sgn(second_);
  }
  return sgn(rational_);
}

LambdaValue LambdaValue::negated() const {
  LambdaValue r = *this;
  r.rational_ = -rational_;
  r.first_ = -first_;
  r.second_ = -second_;
  return r;
}

LambdaValue LambdaValue::times(long k) const {
  LambdaValue r = *this;
  r.rational_ = rational_ * k;
  r.first_ = first_ * k;
  r.second_ = second_ * k;
  return r;
}

std::string LambdaValue::str() const {
  switch (tag_) {
    case GroupTag::Q: return to_string(rational_);
    case GroupTag::Z: return "z:" + to_string(rational_);
    case GroupTag::Z_third: return "z3:" + to_string(rational_);
    case GroupTag::ZxZ_lex: return "lex:(" + first_.get_str() + "," + second_.get_str() + ")";
  }
  return "?";
}

bool operator==(const LambdaValue& a, const LambdaValue& b) {
  if (a.tag_ != b.tag_) return false;
  if (a.tag_ == GroupTag::ZxZ_lex) return a.first_ == b.first_ && a.second_ == b.second_;
  return a.rational_ == b.rational_;
}

LambdaValue add(const LambdaValue& a, const LambdaValue& b) {
  require_same(a, b);
  switch (a.tag()) {
    case GroupTag::Q: return LambdaValue::q(a.rational() + b.rational());
    case GroupTag::Z: return LambdaValue::z(a.rational().get_num() + b.rational().get_num());
    case GroupTag::Z_third: return LambdaValue::z_third(a.rational() + b.rational());
    case GroupTag::ZxZ_lex: return LambdaValue::lex(a.first() + b.first(), a.second() + b.second());
  }
  return a;
}

LambdaValue sub(const LambdaValue& a, const LambdaValue& b) { return add(a, b.negated()); }

std::strong_ordering cmp(const LambdaValue& a, const LambdaValue& b) {
  require_same(a, b);
  int s = sub(a, b).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

LambdaValue abs(const LambdaValue& a) { return a.sign() < 0 ? a.negated() : a; }

std::optional<LambdaValue> halving_max(const LambdaValue& lambda0) {
  if (lambda0.sign() <= 0) throw Error(Errc::NonPositiveInput, lambda0.str());
  switch (lambda0.tag()) {
    case GroupTag::Q:
      return LambdaValue::q(lambda0.rational() / 2);
    case GroupTag::Z:
      return LambdaValue::z(floor_half(lambda0.rational().get_num()));
    case GroupTag::Z_third: {
      // lambda0 = a/3^k in lowest terms; a/2 stays in Z[1/3] iff a is even.
      // For odd a the candidates m/3^j with 2m/3^j <= a/3^k approach a/(2*3^k)
      // from below without reaching it.
      const mpz_class a = lambda0.rational().get_num();
      if (a % 2 != 0) return std::nullopt;
      return LambdaValue::z_third(Rational(a / 2, lambda0.rational().get_den()));
    }
    case GroupTag::ZxZ_lex: {
      // lambda0 = (p, q). If p is even, t = (p/2, y) needs 2y <= q, and any
      // t with first coordinate below p/2 is smaller, so the maximum is
      // (p/2, floor(q/2)). If p is odd, t = ((p-1)/2, y) satisfies 2t < lambda0
      // for every y, so the set has no maximum.
      const mpz_class& p = lambda0.first();
      if (p % 2 != 0) return std::nullopt;
      return LambdaValue::lex(p / 2, floor_half(lambda0.second()));
    }
  }
  return std::nullopt;
}

LambdaInterval::LambdaInterval(LambdaValue lo, LambdaValue hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (cmp(lo_, hi_) > 0) throw Error(Errc::NonPositiveInput, "interval with lo > hi");
}

bool LambdaInterval::contains(const LambdaValue& v) const { return cmp(lo_, v) <= 0 && cmp(v, hi_) <= 0; }

}  // namespace lambdabuild
