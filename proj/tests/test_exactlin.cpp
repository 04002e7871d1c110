#include "helpers.hpp"
#include "lambdabuild/exactlin.hpp"
#include "lambdabuild/sampling.hpp"
#include "oracles.hpp"

using namespace lambdabuild;
using testutil::M;
using testutil::Q;
using testutil::S;

TEST_SUITE("exactlin") {
  TEST_CASE("products and determinants") {
    CHECK(det(M(R"m([["1","X"],["0","1"]])m")) == S("1"));
    CHECK(det(M(R"m([["X","0"],["0","X^(-1)"]])m")) == S("1"));
    CHECK(M(R"m([[0,1],[-1,0]])m") * M(R"m([[0,-1],[1,0]])m") == Mat::identity(2));
    CHECK(transpose(M(R"m([["1","X"],["0","1"]])m")) == M(R"m([["1","0"],["X","1"]])m"));
    CHECK(trace(M(R"m([["X","5"],["0","2"]])m")) == S("X + 2"));
  }

  TEST_CASE("group elements") {
    CHECK_ERRC(GroupElement(M(R"m([["X","0"],["0","1"]])m")), Errc::DetNotOne);
    const GroupElement u(M(R"m([["1","X"],["0","1"]])m"));
    CHECK(inverse_sl(u).mat() == M(R"m([["1","-X"],["0","1"]])m"));
    CHECK(inverse_sl(GroupElement(M(R"m([[0,1],[-1,0]])m"))).mat() == M(R"m([[0,-1],[1,0]])m"));
    CHECK(inverse_sl(GroupElement(M(R"m([["X","0"],["0","X^(-1)"]])m"))).mat() == M(R"m([["X^(-1)","0"],["0","X"]])m"));
    CHECK((u * inverse_sl(u)).mat() == Mat::identity(2));
  }

  TEST_CASE("principal minor valuations") {
    const Mat ggt = M(R"m([["1 + X^(2)","X"],["X","1"]])m");
    CHECK(principal_minor_valuation_sums(ggt) == std::vector<Rational>{2, 0});
    CHECK(principal_minor_valuation_sums(Mat::identity(3)) == std::vector<Rational>{0, 0, 0});
    CHECK(principal_minor_valuation_sums(Mat::monomial_diagonal({4, -2, -2})) == std::vector<Rational>{4, 2, 0});
    CHECK(leading_principal_minor_valuations(ggt) == std::vector<Rational>{2, 0});
    CHECK(leading_principal_minor_valuations(M(R"m([["1","X"],["X","1 + X^(2)"]])m")) == std::vector<Rational>{0, 0});
    CHECK(leading_principal_minor_valuations(Mat::identity(4)) == std::vector<Rational>{0, 0, 0, 0});
    CHECK_ERRC(principal_minor_valuation_sums(M(R"m([["-1","0"],["0","-1"]])m")), Errc::NonPositiveMinor);
  }

  TEST_CASE("property: determinants and minors match the Leibniz expansion") {
    Sampler s(21);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
      Mat a(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (s.uniform(0, 4)) a(i, j) = s.series(2);
      CHECK(det(a) == oracle::leibniz_det(a));
      const auto rows = oracle::subsets(n, 2)[s.next() % oracle::subsets(n, 2).size()];
      const auto cols = oracle::subsets(n, 2)[s.next() % oracle::subsets(n, 2).size()];
      CHECK(minor(a, rows, cols) == oracle::leibniz_minor(a, rows, cols));
      CHECK(a * adjugate(a) == det(a) * Mat::identity(n));
    }
  }

  TEST_CASE("property: inverse and determinant of random SL(n) elements") {
    Sampler s(22);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
      const Mat g = s.generator_product(n, 3);
      CHECK(det(g) == S("1"));
      CHECK(inverse_sl(g) * g == Mat::identity(n));
      CHECK(det(g * transpose(g)) == S("1"));
    }
  }

  TEST_CASE("property: principal minor sums agree with the characteristic polynomial") {
    Sampler s(23);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 2 + static_cast<std::size_t>(t % 3);
      const Mat g = s.generator_product(n, 3);
      const Mat ggt = g * transpose(g);
      const auto sums = principal_minor_valuation_sums(ggt);
      const auto c = oracle::charpoly(ggt);
      for (std::size_t k = 1; k <= n; ++k) CHECK(sums[k - 1] == c[k].neg_val().value());
      // concavity: s_k - s_{k-1} is nonincreasing
      for (std::size_t k = 1; k + 1 < n; ++k) {
        const Rational left = sums[k] - sums[k - 1];
        const Rational right = sums[k - 1] - (k >= 2 ? sums[k - 2] : Rational(0));
        CHECK(left <= right);
      }
    }
  }
}
