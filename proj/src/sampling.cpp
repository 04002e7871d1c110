#include "lambdabuild/sampling.hpp"

#include <algorithm>
#include <numeric>

namespace lambdabuild {

std::uint64_t Sampler::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Sampler::uniform(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational Sampler::grid_exponent() {
  static const Rational grid[] = {Rational(-2), Rational(-1), Rational(0), Rational(1, 2), Rational(1), Rational(2)};
  return grid[next() % 6];
}

Rational Sampler::nonzero_coefficient() {
  long c = uniform(1, 3);
  return coin() ? Rational(c) : Rational(-c);
}

PuiseuxSeries Sampler::monomial() { return PuiseuxSeries::monomial(grid_exponent(), nonzero_coefficient()); }

PuiseuxSeries Sampler::series(std::size_t max_terms) {
  PuiseuxSeries s;
  std::size_t k = static_cast<std::size_t>(uniform(1, static_cast<long>(max_terms)));
  for (std::size_t t = 0; t < k; ++t) s += monomial();
  if (s.is_exact_zero()) s = monomial();
  return s;
}

PuiseuxSeries Sampler::positive_series(std::size_t max_terms) {
  PuiseuxSeries s = series(max_terms);
  return s.sign() > 0 ? s : -s;
}

ApartmentPoint Sampler::apartment_point(std::size_t n) {
  ApartmentPoint p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = grid_exponent();
  return p.centered();
}

ApartmentPoint Sampler::dominant_point(std::size_t n) { return apartment_point(n).sorted_nonincreasing(); }

Mat Sampler::monomial_diagonal(std::size_t n) {
  std::vector<Rational> lam(n);
  Rational sum;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    lam[i] = grid_exponent();
    sum += lam[i];
  }
  lam[n - 1] = -sum;
  return Mat::monomial_diagonal(lam);
}

RootGroupElement Sampler::root_group(std::size_t n, bool positive_only) {
  std::size_t i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
  std::size_t j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
  if (j >= i) ++j;
  if (positive_only && i > j) std::swap(i, j);
  return RootGroupElement{i, j, series(2)};
}

Mat Sampler::unipotent_upper(std::size_t n) {
  Mat u = Mat::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform(0, 3) != 0) u(i, j) = series(2);
  return u;
}

Mat Sampler::strictly_upper(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform(0, 3) != 0) m(i, j) = series(2);
  return m;
}

Mat Sampler::signed_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[next() % i]);
  Mat m = signed_permutation_matrix(p);
  // Flip an even number of signs.
  if (n >= 2 && coin()) {
    std::size_t a = next() % n, b = (a + 1 + next() % (n - 1)) % n;
    m(a, p[a]) = -m(a, p[a]);
    m(b, p[b]) = -m(b, p[b]);
  }
  return m;
}

Mat Sampler::antisymmetric_rational(std::size_t n) {
  Mat s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v(uniform(-3, 3), uniform(1, 2));
      v.canonicalize();
      s(i, j) = PuiseuxSeries(v);
      s(j, i) = PuiseuxSeries(Rational(-v));
    }
  return s;
}

GroupElement Sampler::cayley(std::size_t n) { return cayley_orthogonal(antisymmetric_rational(n)); }

Mat Sampler::integral_element(std::size_t n) {
  switch (uniform(0, 3)) {
    case 0: return cayley(n).mat();
    case 1: return signed_permutation(n);
    default: {
      Mat u = Mat::identity(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          if (coin()) continue;
          // valuation 0 or negative, with the boundary case weighted up
          Rational e = uniform(0, 2) == 0 ? Rational(-uniform(1, 2)) : Rational(0);
          u(i, j) = PuiseuxSeries::monomial(e, nonzero_coefficient()) + (coin() ? PuiseuxSeries(Rational(uniform(-2, 2))) : PuiseuxSeries());
        }
      return coin() ? u : transpose(u);
    }
  }
}

Mat Sampler::upper_triangular(std::size_t n) {
  Mat b = monomial_diagonal(n);
  Rational prod = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rational c = nonzero_coefficient();
    b(i, i) = b(i, i) * PuiseuxSeries(c);
    prod *= c;
  }
  b(n - 1, n - 1) = b(n - 1, n - 1) * PuiseuxSeries(Rational(1) / prod);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin()) b(i, j) = series(2);
  return b;
}

Mat Sampler::generator(std::size_t n) {
  switch (uniform(0, 3)) {
    case 0: return monomial_diagonal(n);
    case 1: {
      RootGroupElement u = root_group(n);
      u.t = monomial();
      return u.mat(n);
    }
    case 2: return signed_permutation(n);
    default: return cayley(n).mat();
  }
}

Mat Sampler::generator_product(std::size_t n, std::size_t max_factors) {
  std::size_t k = static_cast<std::size_t>(uniform(1, static_cast<long>(max_factors)));
  Mat g = Mat::identity(n);
  for (std::size_t t = 0; t < k; ++t) g = g * generator(n);
  return g;
}

HPoint Sampler::hpoint() {
  PuiseuxSeries x = coin() ? series(2) : PuiseuxSeries();
  return HPoint(x, positive_series(2));
}

}  // namespace lambdabuild
