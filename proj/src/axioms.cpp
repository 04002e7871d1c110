#include "lambdabuild/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lambdabuild/error.hpp"

namespace lambdabuild {

namespace {

std::uint64_t splitmix(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

ApartmentPoint unit_direction(std::size_t n, std::size_t p, std::size_t j) {
  ApartmentPoint e(n);
  e[p] = 1;
  e[j] = -1;
  return e;
}

// Rational ceiling of the largest (-v)(t_pq / t_pp) / (2(q - p)) over p < q, at least 0.
Rational conjugation_step(const Mat& t) {
  Rational c;
  for (std::size_t p = 0; p < t.n(); ++p)
    for (std::size_t q = p + 1; q < t.n(); ++q) {
      if (t(p, q).is_exact_zero()) continue;
      Rational need = (t(p, q).neg_val().value() - t(p, p).neg_val().value()) / (2 * static_cast<long>(q - p));
      if (need > c) c = need;
    }
  mpz_class up;
  mpz_cdiv_q(up.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  return Rational(up);
}

// Truncation floor for an inexact Bruhat factorization of g: deep enough
// below the entries that the truncated chart still behaves like the exact
// one on the sampled sectors, shallow enough to keep series short.
Rational bruhat_floor(const Mat& g) {
  std::optional<Rational> top, low;
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) {
      const auto& terms = g(i, j).terms();
      if (terms.empty()) continue;
      const Rational& hi = terms.rbegin()->first;
      const Rational& lo = terms.begin()->first;
      if (!top || hi > *top) top = hi;
      if (!low || lo < *low) low = lo;
    }
  if (!top) return Rational(-16);
  return *low - 2 * (*top - *low) - 16;
}

std::size_t distinct_pairs(const ApartmentPoint& x) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] != x[j]) ++k;
  return k;
}

}  // namespace

std::vector<std::vector<ExtRational>> valuation_matrix(const Mat& g) {
  std::vector<std::vector<ExtRational>> c(g.n(), std::vector<ExtRational>(g.n()));
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) c[i][j] = g(i, j).neg_val();
  return c;
}

bool overlap_contains_by_valuations(const Mat& g, const ApartmentPoint& lambda) {
  // g.a_lambda.o = a_mu.o for some mu iff a_mu^-1 g a_lambda has entries in O,
  // i.e. mu_i >= c_ij + lambda_j, with sum mu = sum lambda forced by det = 1.
  auto c = valuation_matrix(g);
  Rational total;
  for (std::size_t i = 0; i < g.n(); ++i) {
    ExtRational m;
    for (std::size_t j = 0; j < g.n(); ++j) m = max(m, c[i][j] + ExtRational(lambda[j]));
    total += m.value();
  }
  return total == lambda.sum();
}

bool overlap_oracle(const Mat& g, const ApartmentPoint& lambda) {
  return in_standard_apartment(act(g, apartment_embed(lambda)));
}

std::optional<ApartmentPoint> find_overlap_witness(const Mat& g, const WitnessBudget& budget) {
  const std::size_t n = g.n();
  std::size_t used = 0;
  std::set<std::vector<Rational>> tried;
  auto attempt = [&](const ApartmentPoint& lam) -> std::optional<bool> {
    if (!tried.insert(lam.coords()).second) return false;
    if (used++ >= budget.max_candidates) return std::nullopt;
    return overlap_contains_by_valuations(g, lam) && overlap_oracle(g, lam);
  };

  auto origin = ApartmentPoint::origin(n);
  auto r = attempt(origin);
  if (!r) return std::nullopt;
  if (*r) return origin;

  std::set<Rational> base{Rational(0)};
  auto c = valuation_matrix(g);
  for (const auto& row : c)
    for (const auto& v : row)
      if (v.is_finite()) {
        base.insert(v.value());
        base.insert(-v.value());
      }
  std::set<Rational> grid = base;
  for (const auto& a : base)
    for (const auto& b : base) grid.insert((a + b) / 2);
  std::vector<Rational> values(grid.begin(), grid.end());

  std::vector<std::size_t> idx(n, 0);
  while (true) {
    ApartmentPoint x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = values[idx[k]];
    auto res = attempt(x.centered());
    if (!res) return std::nullopt;
    if (*res) return x.centered();
    std::size_t k = n;
    while (k > 0 && ++idx[k - 1] == values.size()) idx[--k] = 0;
    if (k == 0) break;
  }

  const ApartmentPoint r0 = rho(n);
  for (std::size_t step = 1; step <= budget.shift_steps; ++step)
    for (const auto& w : all_permutations(n)) {
      ApartmentPoint x(n);
      for (std::size_t k = 0; k < n; ++k) x[k] = Rational(static_cast<long>(step)) * r0[w[k]];
      auto res = attempt(x);
      if (!res) return std::nullopt;
      if (*res) return x;
    }
  return std::nullopt;
}

std::optional<ApartmentPoint> certify_overlap(const Mat& g) {
  const std::size_t n = g.n();
  auto c = valuation_matrix(g);
  std::optional<Rational> best;
  std::vector<std::size_t> best_perm;
  for (const auto& s : all_permutations(n)) {
    ExtRational total(0);
    for (std::size_t i = 0; i < n; ++i) total = total + c[i][s[i]];
    if (total.is_neg_inf()) continue;
    if (!best || *best < total.value()) {
      best = total.value();
      best_perm = s;
    }
  }
  if (!best || *best != 0) return std::nullopt;

  // Nodes 0..n-1 are mu_i, n..2n-1 are lambda_j. An edge u -> v of weight w
  // encodes x_v - x_u <= w.
  struct Edge {
    std::size_t from, to;
    Rational w;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c[i][j].is_finite()) edges.push_back({i, n + j, -c[i][j].value()});
  for (std::size_t i = 0; i < n; ++i) edges.push_back({n + best_perm[i], i, c[i][best_perm[i]].value()});
  std::vector<Rational> dist(2 * n);  // implicit source with 0-weight edges to all nodes
  for (std::size_t round = 0; round < 2 * n; ++round) {
    bool changed = false;
    for (const auto& e : edges)
      if (dist[e.from] + e.w < dist[e.to]) {
        dist[e.to] = dist[e.from] + e.w;
        changed = true;
      }
    if (!changed) break;
  }
  ApartmentPoint lam(n);
  for (std::size_t j = 0; j < n; ++j) lam[j] = dist[n + j];
  lam = lam.centered();
  if (!overlap_contains_by_valuations(g, lam)) return std::nullopt;
  return lam;
}

ApartmentPoint refine_witness(const Mat& g, const std::vector<ApartmentPoint>& points) {
  if (points.empty()) throw Error(Errc::WitnessInvalid, "no points to refine");
  ApartmentPoint w = points.front();
  const long steps = static_cast<long>(w.size() * w.size()) + 1;
  for (std::size_t k = 1; k < points.size(); ++k) {
    ApartmentPoint best = w;
    std::size_t best_score = distinct_pairs(w);
    for (long a = 1; a < steps; ++a) {
      ApartmentPoint cand = Rational(a, steps) * w + Rational(steps - a, steps) * points[k];
      std::size_t score = distinct_pairs(cand);
      if (score > best_score && overlap_contains_by_valuations(g, cand)) {
        best = cand;
        best_score = score;
      }
    }
    w = best;
  }
  return w;
}

bool OverlapDescription::contains(const ApartmentPoint& lambda) const {
  for (const auto& [key, k] : bounds)
    if (k.is_finite() && lambda[key.first] - lambda[key.second] < k.value()) return false;
  return true;
}

std::vector<HalfApartment> OverlapDescription::finite_bounds() const {
  std::vector<HalfApartment> out;
  for (const auto& [key, k] : bounds)
    if (k.is_finite()) out.push_back(HalfApartment{key.first, key.second, k});
  return out;
}

std::string OverlapDescription::str() const {
  std::string out = "w: " + w.str() + "\nbounds:";
  for (const auto& [key, k] : bounds)
    out += " (" + std::to_string(key.first + 1) + "," + std::to_string(key.second + 1) + "):" + k.str();
  out += "\nwitness: " + witness.str() + "\nprobes:";
  for (const auto& p : probes)
    out += "\n  " + p.kind + " " + p.lambda.str() + " bounds=" + (p.in_bounds ? "in" : "out") +
           " oracle=" + (p.oracle ? "in" : "out") + (p.in_bounds ? std::string(" chart=") + (p.chart_ok ? "ok" : "FAIL") : "");
  return out;
}

OverlapDescription chart_overlap(const Mat& g, const ApartmentPoint& witness, std::size_t extra_probes,
                                 std::uint64_t probe_seed) {
  const std::size_t n = g.n();
  if (witness.size() != n || witness.sum() != 0) throw Error(Errc::WitnessInvalid, "witness must be a chart point");
  if (!overlap_oracle(g, witness)) throw Error(Errc::WitnessInvalid, witness.str() + " is not in the overlap");

  const Mat a_star = Mat::monomial_diagonal(witness.coords());
  const ApartmentPoint mu_star = iwasawa_retract(BuildingPoint(g * a_star));
  const Mat b_star_inv = Mat::monomial_diagonal((Rational(-1) * mu_star).coords());
  const Mat g_prime = b_star_inv * g * a_star;
  if (!stabilizes_o(g_prime)) throw Error(Errc::WitnessInvalid, "retraction of the witness image is not its location");

  // Unit permutations of g': sigma with (-v)(g'_{i sigma(i)}) = 0 for all i.
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> current;
  std::vector<bool> used(n, false);
  auto dfs = [&](auto&& self, std::size_t row) -> void {
    if (row == n) {
      candidates.push_back(current);
      return;
    }
    for (std::size_t col = 0; col < n; ++col) {
      if (used[col] || g_prime(row, col).is_exact_zero() || g_prime(row, col).neg_val() != ExtRational(0)) continue;
      used[col] = true;
      current.push_back(col);
      self(self, row + 1);
      current.pop_back();
      used[col] = false;
    }
  };
  dfs(dfs, 0);

  auto c = valuation_matrix(g);
  std::map<std::vector<Rational>, bool> oracle_cache;
  auto oracle = [&](const ApartmentPoint& lam) {
    auto it = oracle_cache.find(lam.coords());
    if (it != oracle_cache.end()) return it->second;
    bool v = overlap_oracle(g, lam);
    oracle_cache.emplace(lam.coords(), v);
    return v;
  };

  std::size_t tried = 0;
  for (const auto& sigma : candidates) {
    ++tried;
    ApartmentPoint tau(n);
    for (std::size_t i = 0; i < n; ++i) tau[i] = mu_star[i] - witness[sigma[i]];
    OverlapDescription od;
    od.w = AffineWeylElement(sigma, tau);
    od.witness = witness;
    od.candidates_tried = tried;
    // mu = w(lambda) needs mu_i - lambda_j >= c_ij, i.e. lambda_sigma(i) - lambda_j >= c_ij - tau_i.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (j != sigma[i]) od.bounds[{sigma[i], j}] = c[i][j] - tau[i];

    std::vector<std::pair<std::string, ApartmentPoint>> probes;
    probes.emplace_back("witness", witness);
    probes.emplace_back("shift+rho", witness + rho(n));
    probes.emplace_back("shift+2rho", witness + Rational(2) * rho(n));
    for (const auto& h : od.finite_bounds()) {
      Rational gap = h.bound.value() - (witness[h.i] - witness[h.j]);
      probes.emplace_back("tight", witness + Rational(gap / 2) * unit_direction(n, h.i, h.j));
      probes.emplace_back("violating", witness + Rational((gap - 1) / 2) * unit_direction(n, h.i, h.j));
    }
    std::uint64_t state = probe_seed;
    for (std::size_t k = 0; k < extra_probes; ++k) {
      ApartmentPoint lam = witness;
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
          long step = static_cast<long>(splitmix(state) % 9) - 4;
          lam += Rational(step, 2) * unit_direction(n, p, q);
        }
      probes.emplace_back("random", lam);
    }

    bool ok = true;
    for (const auto& [kind, lam] : probes) {
      ProbeRecord rec{kind, lam, od.contains(lam), oracle(lam), true};
      if (rec.in_bounds != rec.oracle) ok = false;
      if (rec.in_bounds && rec.oracle)
        rec.chart_ok = same_point(act(g, apartment_embed(lam)), apartment_embed(od.w.act(lam)));
      if (!rec.chart_ok) ok = false;
      od.probes.push_back(std::move(rec));
    }
    if (ok) return od;
  }
  throw Error(Errc::NoConsistentCandidate,
              "no unit permutation of the normalized element matches the probes (" + std::to_string(tried) + " tried)");
}

A4Witness a4_witness(const Mat& g) {
  const std::size_t n = g.n();
  A4Witness out;
  out.bruhat = bruhat(g, 0, bruhat_floor(g));
  out.exact = out.bruhat.exact;
  out.chart = out.bruhat.b1;
  const Mat chart_inv = inverse_sl(out.chart);
  // chart^-1 = d1 v1 and chart^-1 g = nperm d2 v2 with v1, v2 upper unipotent;
  // each v fixes the sector c rho + s_0 once c is large enough.
  const ApartmentPoint a1 = conjugation_step(chart_inv) * rho(n);
  const ApartmentPoint a2 = conjugation_step(out.bruhat.b2) * rho(n);
  const ApartmentPoint s1 = dominant_shift(a1);
  out.s = s1 + dominant_shift(a2 - s1);
  out.s_prime_base = iwasawa_retract(BuildingPoint(chart_inv * g * apartment_embed(out.s).rep()));
  return out;
}

A4Check verify_a4(const Mat& g, const A4Witness& w) {
  const std::size_t n = g.n();
  const Mat chart_inv = inverse_sl(w.chart);
  std::vector<ApartmentPoint> coweights;
  for (std::size_t k = 1; k < n; ++k) {
    ApartmentPoint c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Rational(i < k ? 1 : 0) - Rational(static_cast<long>(k), static_cast<long>(n));
    coweights.push_back(c);
  }
  const std::vector<Rational> scales{Rational(0), Rational(1, 2), Rational(2)};
  A4Check out;
  if (!w.s.is_dominant()) ++out.failures;
  std::vector<std::size_t> idx(coweights.size(), 0);
  while (true) {
    ApartmentPoint p = w.s;
    for (std::size_t k = 0; k < coweights.size(); ++k) p += scales[idx[k]] * coweights[k];
    BuildingPoint x = apartment_embed(p);
    out.probes += 2;
    if (!in_standard_apartment(act(chart_inv, x))) ++out.failures;
    if (!in_standard_apartment(act(chart_inv * g, x))) ++out.failures;
    std::size_t k = coweights.size();
    while (k > 0 && ++idx[k - 1] == scales.size()) idx[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

ExchangeWitness ec_witness(const Mat& g, const OverlapDescription& overlap) {
  const std::size_t n = g.n();
  auto finite = overlap.finite_bounds();
  if (finite.size() != 1)
    throw Error(Errc::NotAHalfApartment, std::to_string(finite.size()) + " finite bounds, expected exactly one");
  const std::size_t p = finite[0].i, j = finite[0].j;
  ExchangeWitness out;
  out.i = p;
  out.j = j;
  out.level = finite[0].bound.value();

  // nmat.embed(lambda) = embed(w(lambda)): nmat_{i, sigma(i)} = +-X^{tau_i}.
  const auto& sigma = overlap.w.perm();
  const auto& tau = overlap.w.translation();
  Mat nmat = signed_permutation_matrix(sigma);
  for (std::size_t i = 0; i < n; ++i) nmat(i, sigma[i]) = nmat(i, sigma[i]) * PuiseuxSeries::monomial(tau[i], 1);
  const Mat g1 = inverse_sl(nmat) * g;  // fixes the half-apartment pointwise: diag(d) (Id + t E_pj)
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && !(a == p && b == j) && !g1(a, b).is_exact_zero())
        throw Error(Errc::NotAHalfApartment, "overlap chart does not reduce g to a root group element");
  const PuiseuxSeries& entry = g1(p, j);
  if (entry.is_exact_zero()) throw Error(Errc::NotAHalfApartment, "no root group part");
  std::vector<PuiseuxSeries> d(n);
  for (std::size_t a = 0; a < n; ++a) d[a] = g1(a, a);

  const Rational floor = -entry.neg_val().value() - 16;
  PuiseuxSeries t;
  if (auto inv = d[p].exact_inverse()) t = entry * *inv;
  else {
    out.exact = false;
    t = entry * d[p].invert(floor);
  }
  PuiseuxSeries t_inv;
  if (auto inv = t.exact_inverse()) t_inv = *inv;
  else {
    out.exact = false;
    t_inv = t.invert(floor).without_floor();
  }
  out.h = nmat * Mat::diagonal(d) * Mat::elementary(n, j, p, t_inv);
  return out;
}

ExchangeCheck verify_ec(const Mat& g, const ExchangeWitness& ec, std::size_t extra_probes, std::uint64_t seed) {
  const std::size_t n = g.n();
  const auto refl = AffineWeylElement::affine_reflection(n, ec.i, ec.j, ec.level);
  const ApartmentPoint e = unit_direction(n, ec.i, ec.j);
  const ApartmentPoint wall = Rational(ec.level / 2) * e;
  std::vector<ApartmentPoint> probes;
  for (long s2 : {-4, -2, -1, 0, 1, 2, 4}) probes.push_back(wall + Rational(s2, 2) * e);
  std::uint64_t state = seed;
  for (std::size_t k = 0; k < extra_probes; ++k) {
    ApartmentPoint lam = wall + Rational(static_cast<long>(splitmix(state) % 9) - 4, 2) * e;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        if (a == std::min(ec.i, ec.j) && b == std::max(ec.i, ec.j)) continue;
        lam += Rational(static_cast<long>(splitmix(state) % 7) - 3, 2) * unit_direction(n, a, b);
      }
    probes.push_back(lam);
  }

  ExchangeCheck out;
  auto fail = [&](const std::string& what, const ApartmentPoint& lam) {
    ++out.failures;
    out.failure_log.push_back(what + " at " + lam.str());
  };
  for (const auto& lam : probes) {
    ++out.probes;
    const Rational diff = lam[ec.i] - lam[ec.j];
    const BuildingPoint hp = act(ec.h, apartment_embed(lam));
    if (in_standard_apartment(hp) != (diff <= ec.level)) fail("overlap of h is not the lower half", lam);
    if (diff >= ec.level && !same_point(hp, act(g, apartment_embed(refl.act(lam)))))
      fail("h differs from g composed with the reflection", lam);
    if (diff == ec.level && !same_point(hp, act(g, apartment_embed(lam)))) fail("wall point not shared", lam);
  }
  return out;
}

}  // namespace lambdabuild
