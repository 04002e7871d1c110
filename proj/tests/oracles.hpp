#pragma once

// Independent reference computations used only by the tests. Each one takes
// a different route from the library code it checks.

#include <vector>

#include "lambdabuild/building.hpp"
#include "lambdabuild/exactlin.hpp"
#include "lambdabuild/rootsys.hpp"

namespace oracle {

using lambdabuild::ApartmentPoint;
using lambdabuild::Mat;
using lambdabuild::PuiseuxSeries;
using lambdabuild::Rational;

// Leibniz expansion over all permutations.
PuiseuxSeries leibniz_det(const Mat& a);
PuiseuxSeries leibniz_minor(const Mat& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

// Coefficients of det(t Id - M) = t^n + c[1] t^(n-1) + ... + c[n] by the
// Faddeev-LeVerrier recursion (traces of powers, no minors).
std::vector<PuiseuxSeries> charpoly(const Mat& m);

// k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

// Cartan vector from the maximal valuations of all k x k minors of g itself
// (not of g g^T): lambda_k = s_k - s_{k-1}, sorted nonincreasing.
ApartmentPoint cartan_from_all_minors(const Mat& g);

// Retraction from Cauchy-Binet: the k-th leading principal minor of g g^T is
// a sum of squares of the minors of the top k rows of g.
ApartmentPoint retract_from_cauchy_binet(const Mat& g);

// Rank over the Puiseux field via nonvanishing minors.
std::size_t rank(const Mat& g, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols);

// Bruhat cell from the rank function: g and its permutation matrix agree on
// the ranks of all lower-left corner submatrices. perm[r] = column in row r.
std::vector<std::size_t> bruhat_cell(const Mat& g);

// Solves A x = b over Q by Cramer's rule.
std::vector<Rational> cramer(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

// (-v) of f, computed from the textual term list rather than the map order.
Rational leading_exponent(const PuiseuxSeries& f);

}  // namespace oracle
