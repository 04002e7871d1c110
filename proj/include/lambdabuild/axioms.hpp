#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambdabuild/building.hpp"
#include "lambdabuild/rootsys.hpp"

namespace lambdabuild {

// Valuation matrix c_ij = (-v)(g_ij), -inf for zero entries.
std::vector<std::vector<ExtRational>> valuation_matrix(const Mat& g);

// Membership of lambda in {lambda : g.embed(lambda) in the standard apartment},
// decided from entry valuations alone: sum_i max_j (c_ij + lambda_j) = 0.
bool overlap_contains_by_valuations(const Mat& g, const ApartmentPoint& lambda);

// Membership decided geometrically: in_standard_apartment(g.embed(lambda)).
bool overlap_oracle(const Mat& g, const ApartmentPoint& lambda);

struct WitnessBudget {
  std::size_t max_candidates = 20000;
  std::size_t shift_steps = 4;  // outward shifts k * w(rho), k = 1..shift_steps, over all w
};

// Grid search over entry valuations of g, their negatives and pairwise
// averages, projected to sum zero, followed by shifts along Weyl images of rho.
std::optional<ApartmentPoint> find_overlap_witness(const Mat& g, const WitnessBudget& budget = {});

// Exhaustive certifier. The overlap is nonempty iff the tropical determinant
// max_sigma sum_i c_{i sigma(i)} is 0; in that case a witness comes from the
// difference constraints mu_i - lambda_j >= c_ij, tight along an optimal sigma.
std::optional<ApartmentPoint> certify_overlap(const Mat& g);

// Convex combinations of points of the overlap, chosen to separate as many
// coordinates as possible.
ApartmentPoint refine_witness(const Mat& g, const std::vector<ApartmentPoint>& points);

struct ProbeRecord {
  std::string kind;
  ApartmentPoint lambda;
  bool in_bounds = false;
  bool oracle = false;
  bool chart_ok = true;  // only meaningful when in_bounds
};

using BoundTable = std::map<std::pair<std::size_t, std::size_t>, ExtRational>;

struct OverlapDescription {
  AffineWeylElement w;
  BoundTable bounds;  // all ordered pairs i != j
  ApartmentPoint witness;
  std::vector<ProbeRecord> probes;
  std::size_t candidates_tried = 0;

  bool contains(const ApartmentPoint& lambda) const;
  std::vector<HalfApartment> finite_bounds() const;
  std::string str() const;
};

// Overlap of the standard apartment with g applied to it, described as a
// finite intersection of half-apartments together with the affine Weyl
// element w such that g.embed(lambda) = embed(w(lambda)) on the overlap.
// extra_probes adds seeded random probes near the witness.
OverlapDescription chart_overlap(const Mat& g, const ApartmentPoint& witness, std::size_t extra_probes = 0,
                                 std::uint64_t probe_seed = 1);

struct A4Witness {
  Mat chart;
  ApartmentPoint s;
  ApartmentPoint s_prime_base;
  BruhatDecomposition bruhat;
  bool exact = true;
};

A4Witness a4_witness(const Mat& g);

struct A4Check {
  std::size_t probes = 0;
  std::size_t failures = 0;
};

// Samples s + c and checks chart^-1.embed(s + c) and chart^-1.g.embed(s + c)
// lie in the standard apartment, for c in a fixed sample of the dominant cone.
A4Check verify_a4(const Mat& g, const A4Witness& w);

struct ExchangeWitness {
  Mat h;
  std::size_t i = 0, j = 1;  // the overlap is {lambda_i - lambda_j >= level}
  Rational level;
  bool exact = true;
};

// For an overlap that is a single half-apartment H+, returns h whose overlap
// with the standard apartment is the complementary half H- and with
// h.p = g.r(p) on H+, r the reflection in the wall.
ExchangeWitness ec_witness(const Mat& g, const OverlapDescription& overlap);

struct ExchangeCheck {
  std::size_t probes = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_log;
};

ExchangeCheck verify_ec(const Mat& g, const ExchangeWitness& ec, std::size_t extra_probes = 0, std::uint64_t seed = 1);

}  // namespace lambdabuild
