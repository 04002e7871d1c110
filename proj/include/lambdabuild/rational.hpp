#pragma once

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lambdabuild {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational abs(const Rational& q);
Rational floor_rational(const Rational& q);
bool is_integer(const Rational& q);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

// Q extended by a bottom element, used for valuations of zero and for absent bounds.
class ExtRational {
 public:
  ExtRational() = default;  // the bottom element
  ExtRational(const Rational& v) : finite_(true), value_(v) {}
  ExtRational(long v) : finite_(true), value_(v) {}

  static ExtRational neg_inf() { return ExtRational(); }

  bool is_neg_inf() const { return !finite_; }
  bool is_finite() const { return finite_; }
  const Rational& value() const;

  friend bool operator==(const ExtRational& a, const ExtRational& b);
  friend std::strong_ordering operator<=>(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator+(const ExtRational& a, const ExtRational& b);
  friend ExtRational operator-(const ExtRational& a, const Rational& b);

  std::string str() const;

 private:
  bool finite_ = false;
  Rational value_;
};

ExtRational max(const ExtRational& a, const ExtRational& b);

}  // namespace lambdabuild
