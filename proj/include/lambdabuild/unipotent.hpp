#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lambdabuild/building.hpp"
#include "lambdabuild/exactlin.hpp"
#include "lambdabuild/rootsys.hpp"

namespace lambdabuild {

// exp(t E_ij) = Id + t E_ij for i != j (0-based indices).
struct RootGroupElement {
  std::size_t i = 0, j = 1;
  PuiseuxSeries t;

  Mat mat(std::size_t n) const { return Mat::elementary(n, i, j, t); }
  std::string str() const;  // "(i,j):<series>" with 1-based indices
};

bool is_strictly_upper(const Mat& m);
bool is_strictly_lower(const Mat& m);

GroupElement exp_nilpotent(const Mat& nil);
Mat log_unipotent(const Mat& u);
Mat commutator(const Mat& a, const Mat& b);
// log(exp(x) exp(y)) for strictly upper triangular x, y.
Mat bch(const Mat& x, const Mat& y);

using RootOrder = std::vector<std::pair<std::size_t, std::size_t>>;

// Positive roots ordered by decreasing height, ties by increasing row:
// for n = 3 this is E13, E12, E23.
RootOrder decreasing_height_order(std::size_t n);

// Parameters t_a with u = prod_a exp(t_a E_a) in the given order.
std::vector<RootGroupElement> factor_root_groups(const Mat& u, const RootOrder& order);
inline std::vector<RootGroupElement> factor_root_groups(const Mat& u) {
  return factor_root_groups(u, decreasing_height_order(u.n()));
}
Mat recompose(std::size_t n, const std::vector<RootGroupElement>& factors);

ExtRational phi_alpha(const RootGroupElement& u);
HalfApartment fixed_halfspace(const RootGroupElement& u);
// Half-apartments whose intersection is the set of lambda with u.embed(lambda) in the
// standard apartment; one entry per nonzero factor of the decreasing-height factorization.
std::vector<HalfApartment> fixed_set(const Mat& u);
// The same region read off the entries directly: lambda_i - lambda_j >= (-v)(u_ij).
std::vector<HalfApartment> entrywise_fixed_set(const Mat& u);

// Monomial diagonal a = embed(c rho) with a^-1 u a in SL(n, O).
Mat conjugate_into_O(const Mat& u);
// c rho for the a above.
ApartmentPoint conjugation_exponent(const Mat& u);

struct ReflectionElement {
  Mat m;
  bool exact = true;
};

// Block [[0, t], [-1/t, 0]] at rows and columns (i, j). Acts on the standard
// apartment as the reflection in {lambda_i - lambda_j = (-v)(t)}.
ReflectionElement m_of_u(const RootGroupElement& u, std::size_t n);
AffineWeylElement reflection_of(const RootGroupElement& u, std::size_t n);

}  // namespace lambdabuild
