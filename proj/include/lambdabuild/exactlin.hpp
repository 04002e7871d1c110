#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lambdabuild/puiseux.hpp"

namespace lambdabuild {

// Square matrix over PuiseuxSeries.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t n) : n_(n), a_(n * n) {}
  Mat(std::initializer_list<std::initializer_list<PuiseuxSeries>> rows);

  static Mat identity(std::size_t n);
  static Mat diagonal(const std::vector<PuiseuxSeries>& d);
  // diag(X^lam_1, ..., X^lam_n)
  static Mat monomial_diagonal(const std::vector<Rational>& lam);
  // Id + t E_ij
  static Mat elementary(std::size_t n, std::size_t i, std::size_t j, const PuiseuxSeries& t);

  std::size_t n() const { return n_; }
  PuiseuxSeries& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const PuiseuxSeries& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  bool is_exact() const;
  bool is_upper_triangular() const;
  bool is_lower_triangular() const;
  bool is_diagonal() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator*(const PuiseuxSeries& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  std::string str() const;

 private:
  std::size_t n_ = 0;
  std::vector<PuiseuxSeries> a_;
};

Mat transpose(const Mat& a);
Mat mul(const Mat& a, const Mat& b);
PuiseuxSeries det(const Mat& a);
PuiseuxSeries minor(const Mat& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);
Mat adjugate(const Mat& a);
PuiseuxSeries trace(const Mat& a);

// Matrix with exact entries and determinant exactly 1.
class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(Mat m);  // throws DetNotOne
  static GroupElement identity(std::size_t n) { return GroupElement(Mat::identity(n), Unchecked{}); }

  const Mat& mat() const { return m_; }
  std::size_t n() const { return m_.n(); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m_ * b.m_, Unchecked{});
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

 private:
  struct Unchecked {};
  GroupElement(Mat m, Unchecked) : m_(std::move(m)) {}
  friend GroupElement inverse_sl(const GroupElement& g);
  Mat m_;
};

GroupElement inverse_sl(const GroupElement& g);
// Adjugate-based inverse for a Mat whose determinant is known to be 1 exactly.
Mat inverse_sl(const Mat& g);

// s_k = max over k x k principal minors of (-v)(minor), for M symmetric with
// positive principal minors.
std::vector<Rational> principal_minor_valuation_sums(const Mat& m);
// t_i = (-v) of the leading i x i principal minor.
std::vector<Rational> leading_principal_minor_valuations(const Mat& m);

}  // namespace lambdabuild
