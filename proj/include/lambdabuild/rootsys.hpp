#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lambdabuild/rational.hpp"

namespace lambdabuild {

// A point of the model apartment. In type A_{n-1} the canonical chart is
// lambda in Q^n with sum zero; for a general root system the coordinates are
// taken with respect to the simple roots.
class ApartmentPoint {
 public:
  ApartmentPoint() = default;
  explicit ApartmentPoint(std::size_t n) : c_(n) {}
  ApartmentPoint(std::vector<Rational> c) : c_(std::move(c)) {}
  ApartmentPoint(std::initializer_list<Rational> c) : c_(c) {}

  static ApartmentPoint origin(std::size_t n) { return ApartmentPoint(n); }

  std::size_t size() const { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  Rational sum() const;
  bool is_dominant() const;  // nonincreasing coordinates
  ApartmentPoint sorted_nonincreasing() const;
  ApartmentPoint centered() const;  // subtract the mean

  ApartmentPoint& operator+=(const ApartmentPoint& o);
  ApartmentPoint& operator-=(const ApartmentPoint& o);
  friend ApartmentPoint operator+(ApartmentPoint a, const ApartmentPoint& b) { return a += b; }
  friend ApartmentPoint operator-(ApartmentPoint a, const ApartmentPoint& b) { return a -= b; }
  friend ApartmentPoint operator*(const Rational& s, ApartmentPoint a);
  friend bool operator==(const ApartmentPoint& a, const ApartmentPoint& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

// rho = (n-1, n-3, ..., -(n-1))
ApartmentPoint rho(std::size_t n);

// Sum over all roots of A_{n-1} of |<x - y, alpha>|, i.e. sum_{i != j} |d_i - d_j|.
Rational chart_distance(const ApartmentPoint& x, const ApartmentPoint& y);

// lambda_b = lambda_a + t rho with the least t >= 0 making b and b - a dominant.
ApartmentPoint dominant_shift(const ApartmentPoint& a);

// Element of the affine Weyl group in the A_{n-1} chart:
// (w x)_i = x_{perm[i]} + translation_i.
class AffineWeylElement {
 public:
  AffineWeylElement() = default;
  AffineWeylElement(std::vector<std::size_t> perm, ApartmentPoint translation);

  static AffineWeylElement identity(std::size_t n);
  static AffineWeylElement translation(const ApartmentPoint& t);
  static AffineWeylElement transposition(std::size_t n, std::size_t i, std::size_t j);
  // Reflection in the wall {x_i - x_j = level}.
  static AffineWeylElement affine_reflection(std::size_t n, std::size_t i, std::size_t j, const Rational& level);

  const std::vector<std::size_t>& perm() const { return perm_; }
  const ApartmentPoint& translation() const { return t_; }
  std::size_t n() const { return perm_.size(); }
  bool is_identity() const;

  ApartmentPoint act(const ApartmentPoint& x) const;
  AffineWeylElement compose(const AffineWeylElement& inner) const;  // this after inner
  AffineWeylElement inverse() const;

  std::string str() const;
  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.perm_ == b.perm_ && a.t_ == b.t_;
  }

 private:
  std::vector<std::size_t> perm_;
  ApartmentPoint t_;
};

ApartmentPoint act(const AffineWeylElement& w, const ApartmentPoint& x);

// {x : x_i - x_j >= bound}; a -inf bound is the whole apartment.
struct HalfApartment {
  std::size_t i = 0, j = 1;
  ExtRational bound;

  bool contains(const ApartmentPoint& x) const;
  std::string str() const;
  friend bool operator==(const HalfApartment&, const HalfApartment&) = default;
};

using IntMatrix = std::vector<std::vector<long>>;
using IntVector = std::vector<long>;
using RatMatrix = std::vector<std::vector<Rational>>;

// A reduced crystallographic root system with roots in simple-root coordinates.
struct RootSystemData {
  std::size_t rank = 0;
  IntMatrix cartan;  // cartan[i][j] = <delta_i^vee, delta_j>
  RatMatrix gram;    // <delta_i, delta_j>
  std::vector<IntVector> roots;
  std::vector<std::size_t> positive;  // indices into roots
  // Simple reflections and the Weyl group as permutations of root indices.
  std::vector<std::vector<std::size_t>> simple_reflections;
  std::vector<std::vector<std::size_t>> weyl_group;
  bool reduced = true;

  Rational inner(const std::vector<Rational>& x, const IntVector& root) const;
  Rational inner(const IntVector& a, const IntVector& b) const;
  // <x, alpha^vee> = 2 <x, alpha> / <alpha, alpha>
  Rational coroot_pairing(const std::vector<Rational>& x, const IntVector& root) const;
  std::size_t index_of(const IntVector& root) const;  // roots.size() when absent
  IntVector eta_plus() const;  // sum of the positive roots
};

RootSystemData build_root_system(const IntMatrix& cartan);
IntMatrix cartan_matrix_type_a(std::size_t rank);

// Sum over all roots of |<x - y, alpha^vee>|, coordinates in the simple-root basis.
Rational apartment_distance(const ApartmentPoint& x, const ApartmentPoint& y, const RootSystemData& rs);
// Simple reflection r_i in simple-root coordinates.
ApartmentPoint simple_reflect(const RootSystemData& rs, std::size_t i, const ApartmentPoint& x);
// Chart coordinates of A_{n-1} to simple-root coordinates (partial sums).
ApartmentPoint chart_to_simple_coords(const ApartmentPoint& lambda);

// Primitive integer vectors gamma_j orthogonal to delta_k for k != j with <gamma_j, delta_j> > 0.
std::vector<IntVector> kostant_gamma_vectors(const RootSystemData& rs);
// Coefficients c with eta = sum_l c_l gamma_l.
std::vector<Rational> gamma_coefficients(const RootSystemData& rs, const std::vector<Rational>& eta);
// Coefficients of eta_plus; throws NonPositiveCoefficient if any is <= 0.
std::vector<Rational> decompose_eta_plus(const RootSystemData& rs);

}  // namespace lambdabuild
