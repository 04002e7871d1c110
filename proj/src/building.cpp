#include "lambdabuild/building.hpp"

#include <algorithm>

#include "lambdabuild/error.hpp"

namespace lambdabuild {

namespace {

ApartmentPoint half_differences(const std::vector<Rational>& s) {
  ApartmentPoint lam(s.size());
  Rational prev;
  for (std::size_t k = 0; k < s.size(); ++k) {
    lam[k] = (s[k] - prev) / 2;
    prev = s[k];
  }
  return lam.centered();
}

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

BuildingPoint act(const Mat& g, const BuildingPoint& p) { return BuildingPoint(g * p.rep()); }

ApartmentPoint cartan_valuations(const Mat& g) {
  Mat m = g * transpose(g);
  ApartmentPoint lam = half_differences(principal_minor_valuation_sums(m));
  // The sums s_k are concave, so lam is already nonincreasing.
  return lam.sorted_nonincreasing();
}

Rational distance(const BuildingPoint& p, const BuildingPoint& q) {
  if (p.n() != q.n()) throw Error(Errc::DimensionMismatch, "points of different buildings");
  ApartmentPoint lam = cartan_valuations(adjugate(p.rep()) * q.rep());
  return chart_distance(lam, ApartmentPoint(lam.size()));
}

bool same_point(const BuildingPoint& p, const BuildingPoint& q) { return distance(p, q) == 0; }

ApartmentPoint iwasawa_retract(const BuildingPoint& p) {
  Mat m = p.rep() * transpose(p.rep());
  return half_differences(leading_principal_minor_valuations(m));
}

BuildingPoint apartment_embed(const ApartmentPoint& lam) {
  if (lam.sum() != 0) throw Error(Errc::DimensionMismatch, "apartment point " + lam.str() + " does not sum to 0");
  return BuildingPoint(Mat::monomial_diagonal(lam.coords()));
}

bool in_standard_apartment(const BuildingPoint& p) {
  return same_point(p, apartment_embed(iwasawa_retract(p)));
}

bool stabilizes_o(const Mat& g) {
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j)
      if (g(i, j).neg_val() > ExtRational(0)) return false;
  return true;
}

Mat signed_permutation_matrix(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  int sign = 1;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  Mat p(n);
  for (std::size_t r = 0; r < n; ++r) p(r, perm[r]) = PuiseuxSeries(r + 1 == n ? sign : 1);
  return p;
}

BruhatDecomposition bruhat(const Mat& g, std::uint64_t pivot_seed, const Rational& floor) {
  const std::size_t n = g.n();
  Mat m = g;
  Mat left = Mat::identity(n);   // upper unipotent row operations
  Mat right = Mat::identity(n);  // upper unipotent column operations
  std::vector<bool> row_used(n, false), col_used(n, false);
  std::vector<std::size_t> perm(n, n);
  bool exact = true;
  std::uint64_t state = pivot_seed;

  auto quotient = [&](const PuiseuxSeries& a, const PuiseuxSeries& pivot) {
    if (auto inv = pivot.exact_inverse()) return a * *inv;
    exact = false;
    return (a * pivot.invert(floor)).without_floor();
  };

  for (std::size_t step = 0; step < n; ++step) {
    const bool row_step = pivot_seed != 0 && (splitmix(state) & 1);
    std::size_t p = n, q = n;
    if (!row_step) {
      q = 0;
      while (col_used[q]) ++q;
      for (std::size_t r = n; r-- > 0;)
        if (!row_used[r] && !m(r, q).is_exact_zero()) {
          p = r;
          break;
        }
    } else {
      p = n;
      while (row_used[--p]) {
      }
      for (std::size_t c = 0; c < n; ++c)
        if (!col_used[c] && !m(p, c).is_exact_zero()) {
          q = c;
          break;
        }
    }
    if (p == n || q == n) throw Error(Errc::DetNotOne, "singular matrix in Bruhat elimination");
    const PuiseuxSeries pivot = m(p, q);

    // Clear column q above the pivot: row_r -= f row_p.
    for (std::size_t r = 0; r < p; ++r) {
      if (m(r, q).is_exact_zero()) continue;
      PuiseuxSeries f = quotient(m(r, q), pivot);
      for (std::size_t c = 0; c < n; ++c)
        if (!m(p, c).is_exact_zero()) m(r, c) -= f * m(p, c);
      m(r, q) = PuiseuxSeries();
      for (std::size_t c = 0; c < n; ++c)
        if (!left(p, c).is_exact_zero()) left(r, c) -= f * left(p, c);
    }
    // Clear row p to the right of the pivot: col_c -= f col_q.
    for (std::size_t c = q + 1; c < n; ++c) {
      if (m(p, c).is_exact_zero()) continue;
      PuiseuxSeries f = quotient(m(p, c), pivot);
      for (std::size_t r = 0; r < n; ++r)
        if (!m(r, q).is_exact_zero()) m(r, c) -= f * m(r, q);
      m(p, c) = PuiseuxSeries();
      for (std::size_t r = 0; r < n; ++r)
        if (!right(r, q).is_exact_zero()) right(r, c) -= f * right(r, q);
    }
    row_used[p] = col_used[q] = true;
    perm[p] = q;
  }

  BruhatDecomposition out;
  out.perm = perm;
  out.nperm = signed_permutation_matrix(perm);
  out.exact = exact;
  // m = left * g * right = nperm * d
  std::vector<PuiseuxSeries> d(n);
  for (std::size_t r = 0; r < n; ++r) d[perm[r]] = m(r, perm[r]) * out.nperm(r, perm[r]);
  out.b1 = inverse_sl(left);
  out.b2 = Mat::diagonal(d) * inverse_sl(right);
  return out;
}

KostantCheck kostant_check(const GroupElement& k, const ApartmentPoint& b) {
  if (!(k.mat() * transpose(k.mat()) == Mat::identity(k.n()))) throw Error(Errc::NotOrthogonal, k.mat().str());
  KostantCheck out;
  out.mu = iwasawa_retract(BuildingPoint(k.mat() * apartment_embed(b).rep()));
  ApartmentPoint ms = out.mu.sorted_nonincreasing();
  ApartmentPoint bs = b.sorted_nonincreasing();
  Rational pm, pb;
  out.dominated = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    pm += ms[i];
    pb += bs[i];
    if (pm > pb) out.dominated = false;
  }
  if (pm != pb) out.dominated = false;
  return out;
}

bool kostant_majorization_check(const GroupElement& k, const ApartmentPoint& b) { return kostant_check(k, b).dominated; }

GroupElement cayley_orthogonal(const Mat& s) {
  const std::size_t n = s.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!s(i, j).is_constant()) throw Error(Errc::NotOrthogonal, "Cayley input must be rational");
      if (!(s(i, j) == -s(j, i))) throw Error(Errc::NotOrthogonal, "Cayley input must be antisymmetric");
    }
  Mat id = Mat::identity(n);
  Mat plus = id + s;
  PuiseuxSeries dp = det(plus);
  if (dp.is_exact_zero()) throw Error(Errc::SingularCayley, "Id + S is singular");
  PuiseuxSeries inv_det = *dp.exact_inverse();
  return GroupElement((id - s) * (inv_det * adjugate(plus)));
}

SymmetricFactorization symmetric_factorization(const Mat& m, const Rational& floor) {
  const std::size_t n = m.n();
  SymmetricFactorization out;
  out.l = Mat::identity(n);
  out.d.assign(n, PuiseuxSeries());
  for (std::size_t j = 0; j < n; ++j) {
    PuiseuxSeries dj = m(j, j);
    for (std::size_t k = 0; k < j; ++k) dj -= out.l(j, k) * out.l(j, k) * out.d[k];
    if (dj.is_exact_zero()) throw Error(Errc::NonPositiveMinor, "zero pivot in symmetric factorization");
    out.d[j] = dj;
    auto inv = dj.exact_inverse();
    if (!inv) out.exact = false;
    PuiseuxSeries dinv = inv ? *inv : dj.invert(floor);
    for (std::size_t i = j + 1; i < n; ++i) {
      PuiseuxSeries v = m(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= out.l(i, k) * out.l(j, k) * out.d[k];
      out.l(i, j) = v * dinv;
    }
  }
  return out;
}

}  // namespace lambdabuild
