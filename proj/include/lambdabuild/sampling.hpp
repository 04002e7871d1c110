#pragma once

#include <cstdint>
#include <vector>

#include "lambdabuild/building.hpp"
#include "lambdabuild/lambdaspaces.hpp"
#include "lambdabuild/unipotent.hpp"

namespace lambdabuild {

// Seeded generator of random test objects. Exponents come from the grid
// {-2, -1, 0, 1/2, 1, 2}; coefficients are small nonzero integers.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  long uniform(long lo, long hi);  // inclusive
  bool coin() { return next() & 1; }
  std::uint64_t fork() { return next(); }

  Rational grid_exponent();
  Rational nonzero_coefficient();
  PuiseuxSeries monomial();
  PuiseuxSeries series(std::size_t max_terms = 3);
  PuiseuxSeries positive_series(std::size_t max_terms = 3);

  // Sum-zero vector with coordinates built from the grid.
  ApartmentPoint apartment_point(std::size_t n);
  ApartmentPoint dominant_point(std::size_t n);

  Mat monomial_diagonal(std::size_t n);
  RootGroupElement root_group(std::size_t n, bool positive_only = false);
  Mat unipotent_upper(std::size_t n);
  Mat strictly_upper(std::size_t n);
  Mat signed_permutation(std::size_t n);
  Mat antisymmetric_rational(std::size_t n);
  GroupElement cayley(std::size_t n);
  // Element of SL(n, O): a Cayley orthogonal matrix, a signed permutation or
  // a unipotent with entries of valuation <= 0, with boundary valuation 0 common.
  Mat integral_element(std::size_t n);
  // Upper triangular with monomial diagonal of determinant 1.
  Mat upper_triangular(std::size_t n);

  // One generator: monomial diagonal, root group element, signed
  // permutation or Cayley orthogonal factor.
  Mat generator(std::size_t n);
  Mat generator_product(std::size_t n, std::size_t max_factors);

  HPoint hpoint();

 private:
  std::uint64_t state_;
};

}  // namespace lambdabuild
