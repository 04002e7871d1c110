#include "lambdabuild/rational.hpp"

#include "lambdabuild/error.hpp"

namespace lambdabuild {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational floor_rational(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

const Rational& ExtRational::value() const {
  if (!finite_) throw Error(Errc::InsufficientPrecision, "value of -inf requested");
  return value_;
}

bool operator==(const ExtRational& a, const ExtRational& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  return compare(a.value_, b.value_);
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
  if (!a.finite_ || !b.finite_) return ExtRational();
  return ExtRational(Rational(a.value_ + b.value_));
}

ExtRational operator-(const ExtRational& a, const Rational& b) {
  if (!a.finite_) return ExtRational();
  return ExtRational(Rational(a.value_ - b));
}

std::string ExtRational::str() const { return finite_ ? to_string(value_) : std::string("-inf"); }

ExtRational max(const ExtRational& a, const ExtRational& b) { return a < b ? b : a; }

}  // namespace lambdabuild
