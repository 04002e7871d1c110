#include "lambdabuild/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "lambdabuild/error.hpp"

namespace lambdabuild {

Rational ApartmentPoint::sum() const {
  Rational s;
  for (const auto& v : c_) s += v;
  return s;
}

bool ApartmentPoint::is_dominant() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i - 1] < c_[i]) return false;
  return true;
}

ApartmentPoint ApartmentPoint::sorted_nonincreasing() const {
  std::vector<Rational> s = c_;
  std::stable_sort(s.begin(), s.end(), [](const Rational& a, const Rational& b) { return a > b; });
  return ApartmentPoint(std::move(s));
}

ApartmentPoint ApartmentPoint::centered() const {
  if (c_.empty()) return *this;
  Rational mean = sum() / Rational(static_cast<long>(c_.size()));
  ApartmentPoint out = *this;
  for (auto& v : out.c_) v -= mean;
  return out;
}

ApartmentPoint& ApartmentPoint::operator+=(const ApartmentPoint& o) {
  if (o.size() != size()) throw Error(Errc::DimensionMismatch, "apartment point sum");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

ApartmentPoint& ApartmentPoint::operator-=(const ApartmentPoint& o) {
  if (o.size() != size()) throw Error(Errc::DimensionMismatch, "apartment point difference");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

ApartmentPoint operator*(const Rational& s, ApartmentPoint a) {
  for (auto& v : a.c_) v *= s;
  return a;
}

std::string ApartmentPoint::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? ", " : "") + to_string(c_[i]);
  return out + ")";
}

ApartmentPoint rho(std::size_t n) {
  ApartmentPoint r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = Rational(static_cast<long>(n) - 1 - 2 * static_cast<long>(i));
  return r;
}

Rational chart_distance(const ApartmentPoint& x, const ApartmentPoint& y) {
  ApartmentPoint d = x - y;
  Rational total;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j) total += abs(Rational(d[i] - d[j]));
  return total;
}

ApartmentPoint dominant_shift(const ApartmentPoint& a) {
  // b - a = t rho is dominant for every t >= 0; b is dominant once
  // a_i - a_{i+1} + 2t >= 0 for all i.
  Rational t;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    Rational need = (a[i + 1] - a[i]) / 2;
    if (need > t) t = need;
  }
  return a + t * rho(a.size());
}

AffineWeylElement::AffineWeylElement(std::vector<std::size_t> perm, ApartmentPoint translation)
    : perm_(std::move(perm)), t_(std::move(translation)) {
  if (perm_.size() != t_.size()) throw Error(Errc::DimensionMismatch, "permutation and translation sizes differ");
  std::vector<std::size_t> check = perm_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw Error(Errc::DimensionMismatch, "not a permutation");
}

AffineWeylElement AffineWeylElement::identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return AffineWeylElement(std::move(p), ApartmentPoint(n));
}

AffineWeylElement AffineWeylElement::translation(const ApartmentPoint& t) {
  AffineWeylElement w = identity(t.size());
  w.t_ = t;
  return w;
}

AffineWeylElement AffineWeylElement::transposition(std::size_t n, std::size_t i, std::size_t j) {
  AffineWeylElement w = identity(n);
  std::swap(w.perm_[i], w.perm_[j]);
  return w;
}

AffineWeylElement AffineWeylElement::affine_reflection(std::size_t n, std::size_t i, std::size_t j,
                                                       const Rational& level) {
  // x -> x - (x_i - x_j - level)(e_i - e_j): swap x_i, x_j then shift by level (e_i - e_j).
  AffineWeylElement w = transposition(n, i, j);
  w.t_[i] = level;
  w.t_[j] = -level;
  return w;
}

bool AffineWeylElement::is_identity() const { return *this == identity(n()); }

ApartmentPoint AffineWeylElement::act(const ApartmentPoint& x) const {
  if (x.size() != n()) throw Error(Errc::DimensionMismatch, "affine Weyl action");
  ApartmentPoint y(n());
  for (std::size_t i = 0; i < n(); ++i) y[i] = x[perm_[i]] + t_[i];
  return y;
}

AffineWeylElement AffineWeylElement::compose(const AffineWeylElement& inner) const {
  // (this o inner)(x)_i = inner(x)_{p[i]} + t_i = x_{q[p[i]]} + s_{p[i]} + t_i
  std::vector<std::size_t> p(n());
  ApartmentPoint t(n());
  for (std::size_t i = 0; i < n(); ++i) {
    p[i] = inner.perm_[perm_[i]];
    t[i] = inner.t_[perm_[i]] + t_[i];
  }
  return AffineWeylElement(std::move(p), std::move(t));
}

AffineWeylElement AffineWeylElement::inverse() const {
  // y_i = x_{p[i]} + t_i  =>  x_{p[i]} = y_i - t_i
  std::vector<std::size_t> q(n());
  ApartmentPoint s(n());
  for (std::size_t i = 0; i < n(); ++i) {
    q[perm_[i]] = i;
    s[perm_[i]] = -t_[i];
  }
  return AffineWeylElement(std::move(q), std::move(s));
}

std::string AffineWeylElement::str() const {
  std::string out = "perm=[";
  for (std::size_t i = 0; i < n(); ++i) out += (i ? "," : "") + std::to_string(perm_[i] + 1);
  return out + "] translation=" + t_.str();
}

ApartmentPoint act(const AffineWeylElement& w, const ApartmentPoint& x) { return w.act(x); }

bool HalfApartment::contains(const ApartmentPoint& x) const {
  if (bound.is_neg_inf()) return true;
  return x[i] - x[j] >= bound.value();
}

std::string HalfApartment::str() const {
  return "x" + std::to_string(i + 1) + " - x" + std::to_string(j + 1) + " >= " + bound.str();
}

// ---------------------------------------------------------------------------
// Root systems

namespace {

constexpr std::size_t kMaxRoots = 2000;
constexpr std::size_t kMaxWeyl = 200000;

std::vector<Rational> solve(RatMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(Errc::DegenerateGram, "singular Gram matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

IntVector reflect(const IntMatrix& cartan, std::size_t i, const IntVector& beta) {
  long pairing = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) pairing += cartan[i][k] * beta[k];
  IntVector out = beta;
  out[i] -= pairing;
  return out;
}

}  // namespace

Rational RootSystemData::inner(const std::vector<Rational>& x, const IntVector& root) const {
  Rational s;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (root[j] != 0) s += x[i] * gram[i][j] * root[j];
  return s;
}

Rational RootSystemData::inner(const IntVector& a, const IntVector& b) const {
  std::vector<Rational> x(a.begin(), a.end());
  return inner(x, b);
}

Rational RootSystemData::coroot_pairing(const std::vector<Rational>& x, const IntVector& root) const {
  return 2 * inner(x, root) / inner(root, root);
}

std::size_t RootSystemData::index_of(const IntVector& root) const {
  auto it = std::find(roots.begin(), roots.end(), root);
  return static_cast<std::size_t>(it - roots.begin());
}

IntVector RootSystemData::eta_plus() const {
  IntVector s(rank, 0);
  for (std::size_t p : positive)
    for (std::size_t k = 0; k < rank; ++k) s[k] += roots[p][k];
  return s;
}

IntMatrix cartan_matrix_type_a(std::size_t rank) {
  IntMatrix c(rank, IntVector(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    c[i][i] = 2;
    if (i + 1 < rank) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

RootSystemData build_root_system(const IntMatrix& cartan) {
  const std::size_t r = cartan.size();
  if (r == 0 || r > 4) throw Error(Errc::NotACartanMatrix, "rank must be between 1 and 4");
  for (const auto& row : cartan)
    if (row.size() != r) throw Error(Errc::NotACartanMatrix, "not square");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j && cartan[i][j] != 2) throw Error(Errc::NotACartanMatrix, "diagonal entries must be 2");
      if (i != j && cartan[i][j] > 0) throw Error(Errc::NotACartanMatrix, "positive off-diagonal entry");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0)) throw Error(Errc::NotACartanMatrix, "zero pattern not symmetric");
    }

  // Symmetrize: c_i = <delta_i, delta_i>/2 with c_i A_ij = c_j A_ji.
  std::vector<std::optional<Rational>> c(r);
  for (std::size_t start = 0; start < r; ++start) {
    if (c[start]) continue;
    c[start] = Rational(1);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j || cartan[i][j] == 0) continue;
        Rational cj = *c[i] * cartan[i][j] / cartan[j][i];
        if (!c[j]) {
          c[j] = cj;
          queue.push_back(j);
        } else if (*c[j] != cj) {
          throw Error(Errc::NotACartanMatrix, "not symmetrizable");
        }
      }
    }
  }
  // Scale so that the Gram matrix is integral for the usual cases.
  mpz_class lcm_den = 1;
  for (const auto& ci : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), ci->get_den_mpz_t());

  RootSystemData rs;
  rs.rank = r;
  rs.cartan = cartan;
  rs.gram.assign(r, std::vector<Rational>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rs.gram[i][j] = *c[i] * Rational(lcm_den) * cartan[i][j];

  // Reflection closure starting from the simple roots; it only terminates for
  // finite type, so runaway growth is reported as divergence.
  std::set<IntVector> seen;
  std::deque<IntVector> queue;
  for (std::size_t i = 0; i < r; ++i) {
    IntVector e(r, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < r; ++i) {
      IntVector img = reflect(cartan, i, beta);
      if (seen.insert(img).second) {
        if (seen.size() > kMaxRoots) throw Error(Errc::ClosureDiverged, "too many roots");
        queue.push_back(img);
      }
    }
  }
  rs.roots.assign(seen.begin(), seen.end());
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    bool pos = std::all_of(rs.roots[k].begin(), rs.roots[k].end(), [](long v) { return v >= 0; });
    if (pos) rs.positive.push_back(k);
  }

  for (std::size_t i = 0; i < r; ++i) {
    std::vector<std::size_t> perm(rs.roots.size());
    for (std::size_t k = 0; k < rs.roots.size(); ++k) perm[k] = rs.index_of(reflect(cartan, i, rs.roots[k]));
    rs.simple_reflections.push_back(std::move(perm));
  }

  std::vector<std::size_t> id(rs.roots.size());
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<std::size_t>> group{id};
  std::deque<std::vector<std::size_t>> work{id};
  while (!work.empty()) {
    auto w = work.front();
    work.pop_front();
    for (const auto& s : rs.simple_reflections) {
      std::vector<std::size_t> ws(w.size());
      for (std::size_t k = 0; k < w.size(); ++k) ws[k] = s[w[k]];
      if (group.insert(ws).second) {
        if (group.size() > kMaxWeyl) throw Error(Errc::ClosureDiverged, "Weyl group too large");
        work.push_back(std::move(ws));
      }
    }
  }
  rs.weyl_group.assign(group.begin(), group.end());

  for (const auto& a : rs.roots) {
    IntVector twice = a;
    for (auto& v : twice) v *= 2;
    if (rs.index_of(twice) != rs.roots.size()) rs.reduced = false;
  }
  return rs;
}

Rational apartment_distance(const ApartmentPoint& x, const ApartmentPoint& y, const RootSystemData& rs) {
  if (x.size() != rs.rank || y.size() != rs.rank) throw Error(Errc::DimensionMismatch, "apartment distance");
  std::vector<Rational> d = (x - y).coords();
  Rational total;
  for (const auto& a : rs.roots) total += abs(rs.coroot_pairing(d, a));
  return total;
}

ApartmentPoint simple_reflect(const RootSystemData& rs, std::size_t i, const ApartmentPoint& x) {
  IntVector e(rs.rank, 0);
  e[i] = 1;
  ApartmentPoint y = x;
  y[i] -= rs.coroot_pairing(x.coords(), e);
  return y;
}

ApartmentPoint chart_to_simple_coords(const ApartmentPoint& lambda) {
  ApartmentPoint c(lambda.size() - 1);
  Rational partial;
  for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
    partial += lambda[k];
    c[k] = partial;
  }
  return c;
}

std::vector<IntVector> kostant_gamma_vectors(const RootSystemData& rs) {
  std::vector<IntVector> out;
  for (std::size_t j = 0; j < rs.rank; ++j) {
    std::vector<Rational> e(rs.rank);
    e[j] = 1;
    std::vector<Rational> v = solve(rs.gram, e);
    mpz_class den = 1, num = 0;
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    IntVector gamma;
    for (const auto& q : v) {
      mpz_class k = q.get_num() * (den / q.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), k.get_mpz_t());
    }
    for (const auto& q : v) {
      mpz_class k = q.get_num() * (den / q.get_den()) / num;
      gamma.push_back(k.get_si());
    }
    out.push_back(std::move(gamma));
  }
  return out;
}

std::vector<Rational> gamma_coefficients(const RootSystemData& rs, const std::vector<Rational>& eta) {
  auto gammas = kostant_gamma_vectors(rs);
  std::vector<Rational> c;
  for (std::size_t l = 0; l < rs.rank; ++l) {
    IntVector delta(rs.rank, 0);
    delta[l] = 1;
    c.push_back(rs.inner(eta, delta) / rs.inner(gammas[l], delta));
  }
  return c;
}

std::vector<Rational> decompose_eta_plus(const RootSystemData& rs) {
  IntVector eta = rs.eta_plus();
  auto c = gamma_coefficients(rs, std::vector<Rational>(eta.begin(), eta.end()));
  for (const auto& v : c)
    if (v <= 0) throw Error(Errc::NonPositiveCoefficient, to_string(v));
  return c;
}

}  // namespace lambdabuild
