#include "lambdabuild/unipotent.hpp"

#include <algorithm>

#include "lambdabuild/error.hpp"

namespace lambdabuild {

namespace {

void require_unipotent_upper(const Mat& u) {
  if (!u.is_upper_triangular()) throw Error(Errc::NotUnipotent, "not upper triangular");
  for (std::size_t i = 0; i < u.n(); ++i)
    if (!(u(i, i) == PuiseuxSeries(1))) throw Error(Errc::NotUnipotent, "diagonal entry " + u(i, i).str());
}

Rational precision_floor_for(const PuiseuxSeries& t) {
  // Eight orders below the inverse's leading term, widened by the spread of t.
  const Rational lead = t.neg_val().value();
  const Rational lowest = t.terms().begin()->first;
  return -lead - (lead - lowest) - 8;
}

}  // namespace

std::string RootGroupElement::str() const {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "):" + t.str();
}

bool is_strictly_upper(const Mat& m) {
  if (!m.is_upper_triangular()) return false;
  for (std::size_t i = 0; i < m.n(); ++i)
    if (!m(i, i).is_exact_zero()) return false;
  return true;
}

bool is_strictly_lower(const Mat& m) { return is_strictly_upper(transpose(m)); }

GroupElement exp_nilpotent(const Mat& nil) {
  if (!is_strictly_upper(nil) && !is_strictly_lower(nil)) throw Error(Errc::NotNilpotent, nil.str());
  const std::size_t n = nil.n();
  Mat sum = Mat::identity(n), power = Mat::identity(n);
  Rational fact = 1;
  for (std::size_t k = 1; k < n; ++k) {
    power = power * nil;
    fact *= static_cast<long>(k);
    sum += PuiseuxSeries(Rational(1) / fact) * power;
  }
  return GroupElement(sum);
}

Mat log_unipotent(const Mat& u) {
  const std::size_t n = u.n();
  Mat nil = u - Mat::identity(n);
  if (!is_strictly_upper(nil) && !is_strictly_lower(nil)) throw Error(Errc::NotUnipotent, u.str());
  Mat sum(n), power = Mat::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * nil;
    Rational c = Rational(k % 2 ? 1 : -1, static_cast<long>(k));
    c.canonicalize();
    sum += PuiseuxSeries(c) * power;
  }
  return sum;
}

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

Mat bch(const Mat& x, const Mat& y) {
  if (!is_strictly_upper(x) || !is_strictly_upper(y)) throw Error(Errc::NotNilpotent, "bch needs strictly upper input");
  return log_unipotent(exp_nilpotent(x).mat() * exp_nilpotent(y).mat());
}

RootOrder decreasing_height_order(std::size_t n) {
  RootOrder order;
  for (std::size_t h = n - 1; h >= 1; --h)
    for (std::size_t i = 0; i + h < n; ++i) order.emplace_back(i, i + h);
  return order;
}

Mat recompose(std::size_t n, const std::vector<RootGroupElement>& factors) {
  Mat out = Mat::identity(n);
  for (const auto& f : factors) out = out * f.mat(n);
  return out;
}

std::vector<RootGroupElement> factor_root_groups(const Mat& u, const RootOrder& order) {
  require_unipotent_upper(u);
  const std::size_t n = u.n();
  if (order.size() != n * (n - 1) / 2) throw Error(Errc::DimensionMismatch, "root order must list every positive root");
  std::vector<RootGroupElement> factors;
  for (const auto& [i, j] : order) {
    if (i >= j || j >= n) throw Error(Errc::DimensionMismatch, "root order entries must be positive roots");
    factors.push_back({i, j, PuiseuxSeries()});
  }
  // Entry (i,j) of the product depends on t_(i,j) linearly with coefficient 1
  // and otherwise only on parameters of lower height, so solve by height.
  std::vector<std::size_t> by_height(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) by_height[k] = k;
  std::stable_sort(by_height.begin(), by_height.end(), [&](std::size_t a, std::size_t b) {
    return order[a].second - order[a].first < order[b].second - order[b].first;
  });
  for (std::size_t k : by_height) {
    const auto [i, j] = order[k];
    PuiseuxSeries current = recompose(n, factors)(i, j);
    factors[k].t = u(i, j) - current;
  }
  return factors;
}

ExtRational phi_alpha(const RootGroupElement& u) { return u.t.neg_val(); }

HalfApartment fixed_halfspace(const RootGroupElement& u) {
  if (u.t.is_exact_zero()) throw Error(Errc::IdentityHasNoWall, "exp(0) fixes every point");
  return HalfApartment{u.i, u.j, phi_alpha(u)};
}

std::vector<HalfApartment> fixed_set(const Mat& u) {
  std::vector<HalfApartment> out;
  for (const auto& f : factor_root_groups(u))
    if (!f.t.is_exact_zero()) out.push_back(fixed_halfspace(f));
  return out;
}

std::vector<HalfApartment> entrywise_fixed_set(const Mat& u) {
  require_unipotent_upper(u);
  std::vector<HalfApartment> out;
  for (std::size_t i = 0; i < u.n(); ++i)
    for (std::size_t j = i + 1; j < u.n(); ++j)
      if (!u(i, j).is_exact_zero()) out.push_back(HalfApartment{i, j, u(i, j).neg_val()});
  return out;
}

ApartmentPoint conjugation_exponent(const Mat& u) {
  require_unipotent_upper(u);
  const std::size_t n = u.n();
  // a = diag(X^{c rho}): (a^-1 u a)_ij = X^{-c(rho_i - rho_j)} u_ij with rho_i - rho_j = 2(j - i).
  Rational c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (u(i, j).is_exact_zero()) continue;
      Rational need = u(i, j).neg_val().value() / (2 * static_cast<long>(j - i));
      if (need > c) c = need;
    }
  // Integer steps keep the conjugating element simple.
  mpz_class ceil_c;
  mpz_cdiv_q(ceil_c.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  return Rational(ceil_c) * rho(n);
}

Mat conjugate_into_O(const Mat& u) { return Mat::monomial_diagonal(conjugation_exponent(u).coords()); }

ReflectionElement m_of_u(const RootGroupElement& u, std::size_t n) {
  if (u.t.is_exact_zero()) throw Error(Errc::ZeroParameter, "m(u) needs t != 0");
  if (u.i == u.j || u.i >= n || u.j >= n) throw Error(Errc::DimensionMismatch, "root index out of range");
  ReflectionElement out;
  out.m = Mat::identity(n);
  out.m(u.i, u.i) = PuiseuxSeries();
  out.m(u.j, u.j) = PuiseuxSeries();
  out.m(u.i, u.j) = u.t;
  if (auto inv = u.t.exact_inverse()) {
    out.m(u.j, u.i) = -*inv;
  } else {
    out.exact = false;
    out.m(u.j, u.i) = -u.t.invert(precision_floor_for(u.t));
  }
  return out;
}

AffineWeylElement reflection_of(const RootGroupElement& u, std::size_t n) {
  return AffineWeylElement::affine_reflection(n, u.i, u.j, u.t.neg_val().value());
}

}  // namespace lambdabuild
