#include "lambdabuild/textio.hpp"

#include <cctype>

#include <json.hpp>

#include "lambdabuild/error.hpp"

namespace lambdabuild {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_blanks();
    return pos_ == text_.size();
  }
  char peek() {
    skip_blanks();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("'") + c + "'");
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(pos_, expected, std::string(text_));
  }

  std::string digits() {
    skip_blanks();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rat() {
    bool neg = accept('-');
    std::string num = digits();
    Rational q;
    if (accept('/')) {
      std::size_t at = pos_;
      std::string den = digits();
      if (mpz_class(den) == 0) throw ParseError(at, "nonzero denominator", std::string(text_));
      q = Rational(mpz_class(num), mpz_class(den));
    } else {
      q = Rational(mpz_class(num));
    }
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }

  bool starts_rat() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
    if (c == '-' && pos_ + 1 < text_.size()) {
      std::size_t k = pos_ + 1;
      while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
      return k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]));
    }
    return false;
  }

  Rational mono_exponent() {
    expect('X');
    if (!accept('^')) return Rational(1);
    if (accept('(')) {
      Rational e = rat();
      expect(')');
      return e;
    }
    bool neg = accept('-');
    Rational e{mpz_class(digits())};
    return neg ? Rational(-e) : e;
  }

  PuiseuxSeries term() {
    if (peek() == 'X') return PuiseuxSeries::monomial(mono_exponent(), 1);
    if (!starts_rat()) fail("number or 'X'");
    Rational c = rat();
    if (accept('*')) {
      if (peek() != 'X') fail("'X'");
      Rational e = mono_exponent();
      return c == 0 ? PuiseuxSeries() : PuiseuxSeries::monomial(e, c);
    }
    return PuiseuxSeries(c);
  }

  PuiseuxSeries series() {
    PuiseuxSeries s;
    bool negate = false;
    if (peek() == '+') accept('+');
    else if (peek() == '-' && !starts_rat()) negate = accept('-');
    PuiseuxSeries t = term();
    s += negate ? -t : t;
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      t = term();
      s += c == '-' ? -t : t;
    }
    return s;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class F>
auto parse_whole(std::string_view text, F&& body) {
  Cursor cur(text);
  auto value = body(cur);
  if (!cur.at_end()) cur.fail("end of input");
  return value;
}

}  // namespace

PuiseuxSeries parse_series(std::string_view text) {
  return parse_whole(text, [](Cursor& c) { return c.series(); });
}

Rational parse_rational(std::string_view text) {
  return parse_whole(text, [](Cursor& c) { return c.rat(); });
}

LambdaValue parse_lambda(std::string_view text) {
  auto starts = [&](std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; };
  if (starts("z3:")) {
    Rational q = parse_rational(text.substr(3));
    try {
      return LambdaValue::z_third(q);
    } catch (const Error&) {
      throw ParseError(3, "denominator a power of 3", std::string(text));
    }
  }
  if (starts("z:")) {
    Rational q = parse_rational(text.substr(2));
    if (!is_integer(q)) throw ParseError(2, "integer", std::string(text));
    return LambdaValue::z(q.get_num());
  }
  if (starts("lex:")) {
    return parse_whole(text.substr(4), [&](Cursor& c) {
      c.expect('(');
      Rational a = c.rat();
      c.expect(',');
      Rational b = c.rat();
      c.expect(')');
      if (!is_integer(a) || !is_integer(b)) throw ParseError(4, "integer pair", std::string(text));
      return LambdaValue::lex(a.get_num(), b.get_num());
    });
  }
  return LambdaValue::q(parse_rational(text));
}

Mat parse_matrix(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte > 0 ? e.byte - 1 : 0, "JSON array of rows", std::string(text));
  }
  if (!j.is_array() || j.empty()) throw ParseError(0, "non-empty JSON array of rows", std::string(text));
  const std::size_t n = j.size();
  Mat m(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw ParseError(0, "square matrix rows", std::string(text));
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = j[r][c];
      if (e.is_string()) m(r, c) = parse_series(e.get<std::string>());
      else if (e.is_number_integer()) m(r, c) = PuiseuxSeries(Rational(e.get<long>()));
      else throw ParseError(0, "series string at row " + std::to_string(r + 1), std::string(text));
    }
  }
  return m;
}

std::string format_matrix(const Mat& m) {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t r = 0; r < m.n(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.n(); ++c) row.push_back(m(r, c).str());
    j.push_back(row);
  }
  return j.dump();
}

RootGroupElement parse_root_group(std::string_view text) {
  Cursor cur(text);
  cur.expect('(');
  std::size_t at = cur.pos();
  long i = std::stol(cur.digits());
  cur.expect(',');
  long j = std::stol(cur.digits());
  cur.expect(')');
  cur.expect(':');
  if (i < 1 || j < 1 || i == j) throw ParseError(at, "distinct 1-based indices", std::string(text));
  std::size_t rest = cur.pos();
  PuiseuxSeries t;
  try {
    t = parse_series(text.substr(rest));
  } catch (const ParseError& e) {
    throw ParseError(rest + e.position(), e.expected(), std::string(text));
  }
  return RootGroupElement{static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), t};
}

ApartmentPoint parse_point(std::string_view text) {
  return parse_whole(text, [](Cursor& c) {
    bool paren = c.accept('(');
    std::vector<Rational> v{c.rat()};
    while (c.accept(',')) v.push_back(c.rat());
    if (paren) c.expect(')');
    return ApartmentPoint(std::move(v));
  });
}

CTPoint parse_ctpoint(std::string_view text) {
  return parse_whole(text, [&](Cursor& c) {
    c.expect('(');
    std::size_t at = c.pos();
    Rational b = c.rat();
    c.expect(',');
    Rational h = c.rat();
    c.expect(')');
    try {
      return CTPoint(LambdaValue::z_third(b), LambdaValue::z_third(h));
    } catch (const Error& e) {
      throw ParseError(at, "Z[1/3] base in [0,1) and height >= 0", std::string(text));
    }
  });
}

HPoint parse_hpoint(std::string_view text) {
  // Split at the top-level comma; series never contain commas.
  std::string s(text);
  auto open = s.find('('), comma = s.find(','), close = s.rfind(')');
  if (open == std::string::npos) throw ParseError(0, "'('", s);
  if (comma == std::string::npos) throw ParseError(s.size(), "','", s);
  if (close == std::string::npos || close < comma) throw ParseError(s.size(), "')'", s);
  for (std::size_t k = close + 1; k < s.size(); ++k)
    if (!std::isspace(static_cast<unsigned char>(s[k]))) throw ParseError(k, "end of input", s);
  auto sub = [&](std::size_t from, std::size_t to) {
    try {
      return parse_series(std::string_view(s).substr(from, to - from));
    } catch (const ParseError& e) {
      throw ParseError(from + e.position(), e.expected(), s);
    }
  };
  return HPoint(sub(open + 1, comma), sub(comma + 1, close));
}

}  // namespace lambdabuild
