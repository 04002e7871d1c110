#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lambdabuild/exactlin.hpp"
#include "lambdabuild/rootsys.hpp"

namespace lambdabuild {

// A point g.o = [g g^T] of the building, kept as its representative g.
//
// Representatives are normally in SL(n). Invertible representatives with
// det != 1 are accepted as the projective class, which is what truncated
// inverses produce; all valuation vectors are centered to sum zero.
class BuildingPoint {
 public:
  BuildingPoint() = default;
  explicit BuildingPoint(Mat rep) : rep_(std::move(rep)) {}
  BuildingPoint(const GroupElement& g) : rep_(g.mat()) {}

  static BuildingPoint origin(std::size_t n) { return BuildingPoint(Mat::identity(n)); }

  const Mat& rep() const { return rep_; }
  std::size_t n() const { return rep_.n(); }

 private:
  Mat rep_;
};

// g.p
BuildingPoint act(const Mat& g, const BuildingPoint& p);

// Valuation vector of the A-part in g = k a k': sorted nonincreasing, sum zero.
ApartmentPoint cartan_valuations(const Mat& g);
inline ApartmentPoint cartan_valuations(const GroupElement& g) { return cartan_valuations(g.mat()); }

Rational distance(const BuildingPoint& p, const BuildingPoint& q);
bool same_point(const BuildingPoint& p, const BuildingPoint& q);

// Retraction onto the standard apartment from g g^T = u d u^T with u lower unipotent.
ApartmentPoint iwasawa_retract(const BuildingPoint& p);
BuildingPoint apartment_embed(const ApartmentPoint& lam);
bool in_standard_apartment(const BuildingPoint& p);

// True iff every entry lies in O, i.e. g fixes the base point o.
bool stabilizes_o(const Mat& g);
inline bool stabilizes_o(const GroupElement& g) { return stabilizes_o(g.mat()); }

/**
 * g = b1 * nperm * b2 with b1, b2 upper triangular and nperm a signed
 * permutation matrix of determinant 1.
 *
 * perm[r] is the column of the nonzero entry of nperm in row r. Elimination
 * divides by pivots; when a pivot is not a monomial its inverse is truncated
 * at `floor` and `exact` is false.
 */
struct BruhatDecomposition {
  Mat b1, nperm, b2;
  std::vector<std::size_t> perm;
  bool exact = true;
};

// pivot_seed = 0 eliminates column by column; any other seed mixes column
// and row steps pseudo-randomly.
BruhatDecomposition bruhat(const Mat& g, std::uint64_t pivot_seed = 0, const Rational& floor = Rational(-64));
inline BruhatDecomposition bruhat(const GroupElement& g, std::uint64_t pivot_seed = 0) {
  return bruhat(g.mat(), pivot_seed);
}

// Signed permutation matrix with det 1: entries +1, the last row carries the sign.
Mat signed_permutation_matrix(const std::vector<std::size_t>& perm);

struct KostantCheck {
  ApartmentPoint mu;  // iwasawa_retract((k * embed(b)).o)
  bool dominated = false;
};

KostantCheck kostant_check(const GroupElement& k, const ApartmentPoint& b);
bool kostant_majorization_check(const GroupElement& k, const ApartmentPoint& b);

// (Id - S)(Id + S)^-1 for rational antisymmetric S.
GroupElement cayley_orthogonal(const Mat& s);

// Division-only factorization M = l d l^T with l lower unipotent, for
// symmetric M with nonzero leading principal minors. Used for diagnostics:
// (-v)(d_i) = 2 mu_i for the retraction coordinates mu.
struct SymmetricFactorization {
  Mat l;
  std::vector<PuiseuxSeries> d;
  bool exact = true;
};
SymmetricFactorization symmetric_factorization(const Mat& m, const Rational& floor = Rational(-64));

}  // namespace lambdabuild
