#include "lambdabuild/puiseux.hpp"

#include "lambdabuild/error.hpp"

namespace lambdabuild {

PuiseuxSeries::PuiseuxSeries(long c) : PuiseuxSeries(Rational(c)) {}

PuiseuxSeries::PuiseuxSeries(const Rational& c) {
  if (c != 0) terms_.emplace(Rational(0), c);
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& exponent, const Rational& coeff) {
  if (coeff == 0) throw Error(Errc::ZeroCoefficient, "monomial with coefficient 0");
  PuiseuxSeries s;
  s.terms_.emplace(exponent, coeff);
  return s;
}

PuiseuxSeries PuiseuxSeries::from_terms(TermMap terms, std::optional<Rational> floor) {
  PuiseuxSeries s;
  for (auto& [e, c] : terms)
    if (c != 0) s.terms_.emplace(e, c);
  s.floor_ = std::move(floor);
  s.apply_floor();
  return s;
}

bool PuiseuxSeries::is_constant() const {
  return is_exact() && (terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0));
}

void PuiseuxSeries::apply_floor() {
  if (!floor_) return;
  terms_.erase(terms_.begin(), terms_.upper_bound(*floor_));
}

std::optional<Rational> PuiseuxSeries::top() const {
  if (!terms_.empty()) return terms_.rbegin()->first;
  return floor_;
}

ExtRational PuiseuxSeries::neg_val() const {
  if (!terms_.empty()) return ExtRational(terms_.rbegin()->first);
  if (floor_) throw Error(Errc::InsufficientPrecision, "all known terms vanish above X^(" + to_string(*floor_) + ")");
  return ExtRational::neg_inf();
}

Rational PuiseuxSeries::leading_coefficient() const {
  if (!terms_.empty()) return terms_.rbegin()->second;
  if (floor_) throw Error(Errc::InsufficientPrecision, "leading term undetermined");
  return Rational(0);
}

int PuiseuxSeries::sign() const { return sgn(leading_coefficient()); }

Rational PuiseuxSeries::coefficient(const Rational& exponent) const {
  if (floor_ && exponent <= *floor_) throw Error(Errc::InsufficientPrecision, "coefficient below precision floor");
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& floor) const {
  PuiseuxSeries s = *this;
  if (!s.floor_ || *s.floor_ < floor) s.floor_ = floor;
  s.apply_floor();
  return s;
}

PuiseuxSeries PuiseuxSeries::without_floor() const {
  PuiseuxSeries s = *this;
  s.floor_.reset();
  return s;
}

PuiseuxSeries PuiseuxSeries::invert(const Rational& floor) const {
  if (is_exact_zero()) throw Error(Errc::DivisionByZero, "inverse of 0");
  const Rational lead_exp = neg_val().value();
  const Rational lead_coeff = leading_coefficient();
  if (is_monomial()) return monomial(-lead_exp, 1 / lead_coeff).truncated(floor);

  // f = c X^q (1 + r) with (-v)(r) < 0, so 1/f = c^-1 X^-q sum_k (-r)^k.
  Rational out_floor = floor;
  if (floor_) {
    // An unknown tail of f below e perturbs 1/f below e - 2q.
    Rational from_input = *floor_ - 2 * lead_exp;
    if (from_input > out_floor) out_floor = from_input;
  }
  const Rational rel_floor = out_floor + lead_exp;  // precision needed in (1 + r)^-1
  if (rel_floor >= 0) return PuiseuxSeries::from_terms({}, out_floor);

  TermMap rt;
  for (const auto& [e, c] : terms_)
    if (e != lead_exp) rt.emplace(e - lead_exp, -c / lead_coeff);
  PuiseuxSeries minus_r = from_terms(std::move(rt));
  PuiseuxSeries sum(1), power(1);
  while (true) {
    power = (power * minus_r).truncated(rel_floor);
    if (power.terms_.empty()) break;
    sum += power;
  }
  sum = sum.truncated(rel_floor);
  PuiseuxSeries scale = monomial(-lead_exp, 1 / lead_coeff);
  PuiseuxSeries out = sum * scale;
  out.floor_ = out_floor;
  out.apply_floor();
  return out;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries s = *this;
  for (auto& kv : s.terms_) kv.second = -kv.second;
  return s;
}

PuiseuxSeries& PuiseuxSeries::operator+=(const PuiseuxSeries& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  if (o.floor_ && (!floor_ || *floor_ < *o.floor_)) floor_ = o.floor_;
  apply_floor();
  return *this;
}

PuiseuxSeries& PuiseuxSeries::operator-=(const PuiseuxSeries& o) { return *this += -o; }

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return PuiseuxSeries();
  PuiseuxSeries out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Rational e = ea + eb;
      auto [it, inserted] = out.terms_.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  std::optional<Rational> fl;
  auto bump = [&fl](const Rational& v) {
    if (!fl || *fl < v) fl = v;
  };
  if (a.floor_) bump(*a.floor_ + *b.top());
  if (b.floor_) bump(*b.floor_ + *a.top());
  out.floor_ = fl;
  out.apply_floor();
  return out;
}

PuiseuxSeries& PuiseuxSeries::operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

bool operator==(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  return a.terms_ == b.terms_ && a.floor_ == b.floor_;
}

std::string PuiseuxSeries::str() const {
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& e = it->first;
    const Rational& c = it->second;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += to_string(mag);
      continue;
    }
    std::string mono = e == 1 ? std::string("X") : "X^(" + to_string(e) + ")";
    out += mag == 1 ? mono : to_string(mag) + "*" + mono;
  }
  if (floor_) {
    out += first ? "" : " + ";
    out += "O(X^(" + to_string(*floor_) + "))";
    first = false;
  }
  return first ? std::string("0") : out;
}

std::strong_ordering cmp(const PuiseuxSeries& f, const PuiseuxSeries& g) {
  int s = (f - g).sign();
  return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::optional<PuiseuxSeries> PuiseuxSeries::exact_inverse() const {
  if (!is_monomial()) return std::nullopt;
  const auto& [e, c] = *terms_.begin();
  return monomial(-e, 1 / c);
}

PuiseuxSeries divide(const PuiseuxSeries& f, const PuiseuxSeries& g, const Rational& floor) {
  if (auto inv = g.exact_inverse()) return f * *inv;
  return f * g.invert(floor);
}

}  // namespace lambdabuild
