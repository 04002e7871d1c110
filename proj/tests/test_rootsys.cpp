#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "lambdabuild/rootsys.hpp"
#include "lambdabuild/sampling.hpp"
#include "oracles.hpp"

using namespace lambdabuild;
using testutil::Q;

namespace {

const IntMatrix kG2{{2, -1}, {-3, 2}};

bool is_dominant_cone(const ApartmentPoint& x) { return x.is_dominant(); }

}  // namespace

TEST_SUITE("rootsys") {
  TEST_CASE("root systems from Cartan matrices") {
    const auto a2 = build_root_system(cartan_matrix_type_a(2));
    CHECK(a2.roots.size() == 6);
    CHECK(a2.weyl_group.size() == 6);
    const auto g2 = build_root_system(kG2);
    CHECK(g2.roots.size() == 12);
    CHECK(g2.weyl_group.size() == 12);
    const auto a1 = build_root_system(IntMatrix{{2}});
    CHECK(a1.roots.size() == 2);
    CHECK(a1.weyl_group.size() == 2);
    const auto a3 = build_root_system(cartan_matrix_type_a(3));
    CHECK(a3.roots.size() == 12);
    CHECK(a3.weyl_group.size() == 24);
    CHECK(build_root_system(IntMatrix{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}).roots.size() == 48);
  }

  TEST_CASE("invalid Cartan matrices") {
    CHECK_ERRC(build_root_system(IntMatrix{{2, 1}, {1, 2}}), Errc::NotACartanMatrix);
    CHECK_ERRC(build_root_system(IntMatrix{{2, -1}, {0, 2}}), Errc::NotACartanMatrix);
    CHECK_ERRC(build_root_system(IntMatrix{{3}}), Errc::NotACartanMatrix);
    // affine type A1~: the reflection closure never terminates
    CHECK_ERRC(build_root_system(IntMatrix{{2, -2}, {-2, 2}}), Errc::ClosureDiverged);
  }

  TEST_CASE("root system axioms hold for every generated system") {
    for (const IntMatrix& c : {cartan_matrix_type_a(1), cartan_matrix_type_a(2), cartan_matrix_type_a(3), kG2,
                               IntMatrix{{2, -2}, {-1, 2}}}) {
      const auto rs = build_root_system(c);
      std::set<IntVector> all(rs.roots.begin(), rs.roots.end());
      for (const auto& a : rs.roots) {
        IntVector neg(a.size());
        std::transform(a.begin(), a.end(), neg.begin(), [](long v) { return -v; });
        CHECK(all.count(neg) == 1);
        CHECK(std::any_of(a.begin(), a.end(), [](long v) { return v != 0; }));
        for (const auto& b : rs.roots) {
          const Rational pairing = 2 * rs.inner(a, b) / rs.inner(a, a);
          CHECK(is_integer(pairing));
          IntVector refl(b.size());
          for (std::size_t k = 0; k < b.size(); ++k) refl[k] = b[k] - pairing.get_num().get_si() * a[k];
          CHECK(all.count(refl) == 1);
        }
        // reduced: 2a is never a root
        IntVector twice(a.size());
        std::transform(a.begin(), a.end(), twice.begin(), [](long v) { return 2 * v; });
        CHECK(all.count(twice) == 0);
      }
      CHECK(rs.reduced);
      for (const auto& w : rs.weyl_group) {
        std::set<std::size_t> image(w.begin(), w.end());
        CHECK(image.size() == rs.roots.size());
      }
    }
  }

  TEST_CASE("apartment distance") {
    const auto a1 = build_root_system(IntMatrix{{2}});
    CHECK(apartment_distance(chart_to_simple_coords({0, 0}), chart_to_simple_coords({1, -1}), a1) == 4);
    const auto a2 = build_root_system(cartan_matrix_type_a(2));
    CHECK(apartment_distance(chart_to_simple_coords({0, 0, 0}), chart_to_simple_coords({2, -1, -1}), a2) == 12);
    CHECK(chart_distance({0, 0, 0}, {2, -1, -1}) == 12);
    CHECK(chart_distance({1, -1}, {1, -1}) == 0);
  }

  TEST_CASE("affine Weyl action") {
    CHECK(AffineWeylElement::transposition(3, 0, 1).act({1, -1, 0}) == ApartmentPoint{-1, 1, 0});
    CHECK(AffineWeylElement::translation({1, 0, -1}).act(ApartmentPoint::origin(3)) == ApartmentPoint{1, 0, -1});
    const auto r = AffineWeylElement::affine_reflection(2, 0, 1, 1);
    CHECK(r.act({0, 0}) == ApartmentPoint{1, -1});
    CHECK(r.act({Q(1, 2), Q(-1, 2)}) == ApartmentPoint{Q(1, 2), Q(-1, 2)});
    CHECK(r.compose(r).is_identity());
    CHECK(HalfApartment{0, 1, ExtRational(1)}.contains({Q(1, 2), Q(-1, 2)}));
    CHECK_FALSE(HalfApartment{0, 1, ExtRational(1)}.contains({0, 0}));
    CHECK(HalfApartment{0, 1, ExtRational::neg_inf()}.contains({-5, 5}));
  }

  TEST_CASE("dominant shift") {
    CHECK(dominant_shift({0, 0}) == ApartmentPoint{0, 0});
    CHECK(dominant_shift({-1, 1}) == ApartmentPoint{0, 0});
    CHECK(dominant_shift({1, -1}) == ApartmentPoint{1, -1});
    CHECK(rho(3) == ApartmentPoint{2, 0, -2});
  }

  TEST_CASE("Kostant cone vectors") {
    const auto a2 = build_root_system(cartan_matrix_type_a(2));
    CHECK(kostant_gamma_vectors(a2) == std::vector<IntVector>{{2, 1}, {1, 2}});
    CHECK(decompose_eta_plus(a2) == std::vector<Rational>{Q(2, 3), Q(2, 3)});
    const auto a1 = build_root_system(IntMatrix{{2}});
    CHECK(kostant_gamma_vectors(a1) == std::vector<IntVector>{{1}});
    CHECK(decompose_eta_plus(a1) == std::vector<Rational>{1});

    const auto g2 = build_root_system(kG2);
    CHECK(g2.eta_plus() == IntVector{6, 10});
    const auto c = decompose_eta_plus(g2);
    CHECK(std::all_of(c.begin(), c.end(), [](const Rational& v) { return v > 0; }));
    const std::vector<Rational> eta{1, 1};
    CHECK(g2.coroot_pairing(eta, IntVector{0, 1}) == -1);
    const auto bad = gamma_coefficients(g2, eta);
    CHECK(std::any_of(bad.begin(), bad.end(), [](const Rational& v) { return v <= 0; }));
  }

  TEST_CASE("Kostant coefficients agree with a direct linear solve") {
    for (const IntMatrix& cm : {cartan_matrix_type_a(2), cartan_matrix_type_a(3), kG2, IntMatrix{{2, -2}, {-1, 2}}}) {
      const auto rs = build_root_system(cm);
      const auto gammas = kostant_gamma_vectors(rs);
      std::vector<std::vector<Rational>> a(rs.rank, std::vector<Rational>(rs.rank));
      for (std::size_t i = 0; i < rs.rank; ++i)
        for (std::size_t l = 0; l < rs.rank; ++l) a[i][l] = gammas[l][i];
      const IntVector eta = rs.eta_plus();
      CHECK(decompose_eta_plus(rs) == oracle::cramer(a, std::vector<Rational>(eta.begin(), eta.end())));
      // gamma_j is orthogonal to every simple root but delta_j, and positive on it
      for (std::size_t j = 0; j < rs.rank; ++j)
        for (std::size_t k = 0; k < rs.rank; ++k) {
          IntVector d(rs.rank, 0);
          d[k] = 1;
          if (j == k) CHECK(rs.inner(gammas[j], d) > 0);
          else CHECK(rs.inner(gammas[j], d) == 0);
        }
    }
  }

  TEST_CASE("property: apartment distance is a metric preserved by the affine Weyl group") {
    Sampler s(31);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
      const auto rs = build_root_system(cartan_matrix_type_a(n - 1));
      const ApartmentPoint x = s.apartment_point(n), y = s.apartment_point(n), z = s.apartment_point(n);
      const Rational dxy = chart_distance(x, y);
      CHECK(dxy == apartment_distance(chart_to_simple_coords(x), chart_to_simple_coords(y), rs));
      CHECK(dxy >= 0);
      CHECK(dxy == chart_distance(y, x));
      CHECK(dxy <= chart_distance(x, z) + chart_distance(z, y));
      if (!(x == y)) CHECK(dxy > 0);
      std::vector<std::size_t> p(n);
      for (std::size_t i = 0; i < n; ++i) p[i] = i;
      for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[s.next() % i]);
      const AffineWeylElement w(p, s.apartment_point(n));
      CHECK(chart_distance(w.act(x), w.act(y)) == dxy);
      CHECK(w.inverse().act(w.act(x)) == x);
      CHECK(w.compose(w.inverse()).is_identity());
    }
  }

  TEST_CASE("property: dominant shift lands in both cones with minimal t") {
    Sampler s(32);
    for (int t = 0; t < 200; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
      const ApartmentPoint a = s.apartment_point(n);
      const ApartmentPoint b = dominant_shift(a);
      CHECK(is_dominant_cone(b));
      CHECK(is_dominant_cone(b - a));
      // b - a = t rho; any smaller t breaks dominance of b
      const Rational tval = (b - a)[0] / rho(n)[0];
      if (tval > 0) CHECK_FALSE(is_dominant_cone(a + (tval - Q(1, 100)) * rho(n)));
    }
  }
}
