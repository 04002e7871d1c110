#include "lambdabuild/exactlin.hpp"

#include <bit>

#include "lambdabuild/error.hpp"

namespace lambdabuild {

Mat::Mat(std::initializer_list<std::initializer_list<PuiseuxSeries>> rows) : n_(rows.size()) {
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(Errc::DimensionMismatch, "matrix rows must be square");
    for (const auto& e : r) a_.push_back(e);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = PuiseuxSeries(1);
  return m;
}

Mat Mat::diagonal(const std::vector<PuiseuxSeries>& d) {
  Mat m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::monomial_diagonal(const std::vector<Rational>& lam) {
  Mat m(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) m(i, i) = PuiseuxSeries::monomial(lam[i], 1);
  return m;
}

Mat Mat::elementary(std::size_t n, std::size_t i, std::size_t j, const PuiseuxSeries& t) {
  Mat m = identity(n);
  m(i, j) += t;
  return m;
}

bool Mat::is_exact() const {
  for (const auto& e : a_)
    if (!e.is_exact()) return false;
  return true;
}

bool Mat::is_upper_triangular() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!(*this)(i, j).is_exact_zero()) return false;
  return true;
}

bool Mat::is_lower_triangular() const { return transpose(*this).is_upper_triangular(); }

bool Mat::is_diagonal() const { return is_upper_triangular() && is_lower_triangular(); }

Mat& Mat::operator+=(const Mat& o) {
  if (n_ != o.n_) throw Error(Errc::DimensionMismatch, "matrix sum");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (n_ != o.n_) throw Error(Errc::DimensionMismatch, "matrix difference");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.n_ != b.n_) throw Error(Errc::DimensionMismatch, "matrix product");
  const std::size_t n = a.n_;
  Mat c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const PuiseuxSeries& aik = a(i, k);
      if (aik.is_exact_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b(k, j).is_exact_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Mat operator*(const PuiseuxSeries& s, const Mat& a) {
  Mat c = a;
  for (auto& e : c.a_) e = s * e;
  return c;
}

std::string Mat::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < n_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
    out += "]";
  }
  return out + "]";
}

Mat transpose(const Mat& a) {
  Mat t(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) t(j, i) = a(i, j);
  return t;
}

Mat mul(const Mat& a, const Mat& b) { return a * b; }

PuiseuxSeries minor(const Mat& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (cols.size() != k) throw Error(Errc::DimensionMismatch, "minor needs as many rows as columns");
  if (k == 0) return PuiseuxSeries(1);
  // Division-free Laplace expansion memoized over column subsets:
  // D[mask] is the minor on the first popcount(mask) rows and the columns in mask.
  std::vector<PuiseuxSeries> d(std::size_t(1) << k);
  d[0] = PuiseuxSeries(1);
  for (std::size_t mask = 1; mask < d.size(); ++mask) {
    const std::size_t r = std::popcount(mask) - 1;
    PuiseuxSeries acc;
    int above = 0;  // columns of mask to the right of c
    for (std::size_t c = k; c-- > 0;) {
      if (!(mask >> c & 1)) continue;
      const PuiseuxSeries& e = a(rows[r], cols[c]);
      const PuiseuxSeries& rest = d[mask ^ (std::size_t(1) << c)];
      if (!e.is_exact_zero() && !rest.is_exact_zero()) {
        if (above % 2) acc -= e * rest;
        else acc += e * rest;
      }
      ++above;
    }
    d[mask] = std::move(acc);
  }
  return d.back();
}

PuiseuxSeries det(const Mat& a) {
  std::vector<std::size_t> idx(a.n());
  for (std::size_t i = 0; i < a.n(); ++i) idx[i] = i;
  return minor(a, idx, idx);
}

Mat adjugate(const Mat& a) {
  const std::size_t n = a.n();
  Mat adj(n);
  if (n == 1) {
    adj(0, 0) = PuiseuxSeries(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t r = 0; r < n; ++r)
        if (r != j) rows.push_back(r);
      for (std::size_t c = 0; c < n; ++c)
        if (c != i) cols.push_back(c);
      PuiseuxSeries m = minor(a, rows, cols);
      adj(i, j) = (i + j) % 2 ? -m : m;
    }
  return adj;
}

PuiseuxSeries trace(const Mat& a) {
  PuiseuxSeries t;
  for (std::size_t i = 0; i < a.n(); ++i) t += a(i, i);
  return t;
}

GroupElement::GroupElement(Mat m) : m_(std::move(m)) {
  if (!m_.is_exact()) throw Error(Errc::DetNotOne, "group elements need exact entries");
  if (!(det(m_) == PuiseuxSeries(1))) throw Error(Errc::DetNotOne, "det = " + det(m_).str());
}

GroupElement inverse_sl(const GroupElement& g) { return GroupElement(adjugate(g.mat()), GroupElement::Unchecked{}); }

Mat inverse_sl(const Mat& g) { return adjugate(g); }

namespace {

Rational positive_minor_valuation(const PuiseuxSeries& m) {
  if (m.is_exact_zero() || m.sign() <= 0) throw Error(Errc::NonPositiveMinor, "principal minor " + m.str());
  return m.neg_val().value();
}

}  // namespace

std::vector<Rational> principal_minor_valuation_sums(const Mat& m) {
  const std::size_t n = m.n();
  std::vector<std::optional<Rational>> best(n + 1);
  for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    Rational v = positive_minor_valuation(minor(m, idx, idx));
    auto& b = best[idx.size()];
    if (!b || *b < v) b = v;
  }
  std::vector<Rational> s;
  for (std::size_t k = 1; k <= n; ++k) s.push_back(*best[k]);
  return s;
}

std::vector<Rational> leading_principal_minor_valuations(const Mat& m) {
  std::vector<Rational> t;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.n(); ++i) {
    idx.push_back(i);
    t.push_back(positive_minor_valuation(minor(m, idx, idx)));
  }
  return t;
}

}  // namespace lambdabuild
