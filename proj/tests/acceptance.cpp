// Runs every acceptance criterion at its stated sample size and time limit
// and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lambdabuild/suites.hpp"

using namespace lambdabuild;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

SuiteReport suite(const std::string& name, std::size_t n, std::size_t samples, std::uint64_t seed = 1) {
  SuiteOptions o;
  o.n = n;
  o.samples = samples;
  o.seed = seed;
  return run_suite(name, o);
}

std::size_t checked(const SuiteReport& r, const std::string& law) {
  const LawCounter* c = r.find(law);
  return c ? c->checked : 0;
}

std::size_t as_count(const std::string& s) { return s.empty() ? 0 : std::stoul(s); }

// Folds a report into the outcome; the first failure is quoted.
void absorb(Outcome& out, const SuiteReport& r) {
  if (!r.passed) {
    out.ok = false;
    out.detail += " [" + r.suite + " failed";
    if (!r.failures.empty()) out.detail += ": " + r.failures.front().law + " at sample " + std::to_string(r.failures.front().sample);
    out.detail += "]";
  }
}

void require(Outcome& out, bool cond, const std::string& what) {
  if (!cond) {
    out.ok = false;
    out.detail += " [" + what + "]";
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "pseudometric", 60,
       [] {
         Outcome o;
         const auto r2 = suite("pseudometric", 2, 200), r3 = suite("pseudometric", 3, 200);
         absorb(o, r2);
         absorb(o, r3);
         require(o, checked(r2, "triangle inequality") == 200 && checked(r3, "triangle inequality") == 200,
                 "200 triples in each of SL(2), SL(3)");
         o.detail = "400 triples, 0 violations" + o.detail;
         return o;
       }},
      {2, "retraction", 30,
       [] {
         Outcome o;
         const auto r = suite("retraction", 0, 200);
         absorb(o, r);
         const std::size_t strict = as_count(r.stat("strict_samples"));
         require(o, strict >= 1, "a strictly shortened sample");
         require(o, !r.notes.empty() && r.notes.front() == "strict sample 0: d = 4, retracted 0", "lower unipotent example logged");
         o.detail = "200 pairs, " + std::to_string(strict) + " strict" + o.detail;
         return o;
       }},
      {3, "stabilizer", 30,
       [] {
         Outcome o;
         const auto r = suite("stabilizer", 0, 200);
         absorb(o, r);
         require(o, as_count(r.stat("stabilizers")) > 0 && as_count(r.stat("non_stabilizers")) > 0, "both classes sampled");
         o.detail = "200 elements, " + r.stat("stabilizers") + " stabilizers" + o.detail;
         return o;
       }},
      {4, "fixed-set", 60,
       [] {
         Outcome o;
         const auto r = suite("fixed-set", 0, 50);
         absorb(o, r);
         const std::size_t probes = as_count(r.stat("probes")), bounds = as_count(r.stat("finite_bounds"));
         require(o, probes >= 10 * bounds, ">= 10 probes per bound");
         o.detail = "50 unipotents, " + std::to_string(bounds) + " bounds, " + std::to_string(probes) + " probes" + o.detail;
         return o;
       }},
      {5, "a2", 300,
       [] {
         Outcome o;
         const auto r = suite("a2", 0, 120);
         absorb(o, r);
         const std::size_t found = as_count(r.stat("witnesses_found")), missed = as_count(r.stat("search_misses"));
         require(o, found >= 50, ">= 50 found witnesses");
         require(o, 10 * found >= 9 * (found + missed), ">= 90% search success");
         o.detail = std::to_string(found) + " witnesses, success " + r.stat("search_success") + ", " +
                    r.stat("overlaps_empty") + " certified empty" + o.detail;
         return o;
       }},
      {6, "kostant", 60,
       [] {
         Outcome o;
         const auto r = suite("kostant", 0, 500);
         absorb(o, r);
         require(o, checked(r, "partial sums dominated") == 500, "500 pairs");
         o.detail = "500 pairs in n = 2, 3" + o.detail;
         return o;
       }},
      {7, "bch", 30,
       [] {
         Outcome o;
         const auto r = suite("bch", 0, 100);
         absorb(o, r);
         require(o, checked(r, "bch = X + Y + [X,Y]/2 in dimension 3") == 100, "100 pairs");
         o.detail = "100 pairs, round trips for n = 2..5" + o.detail;
         return o;
       }},
      {8, "reflection", 60,
       [] {
         Outcome o;
         const auto r = suite("reflection", 0, 50);
         absorb(o, r);
         require(o, checked(r, "m(u) acts as the affine reflection") >= 50 * 20, "20 probes per element");
         o.detail = "50 elements, " + std::to_string(checked(r, "m(u) acts as the affine reflection")) + " probes" + o.detail;
         return o;
       }},
      {9, "bruhat", 60,
       [] {
         Outcome o;
         const auto r = suite("bruhat", 0, 200);
         absorb(o, r);
         require(o, checked(r, "permutation is independent of the pivot order") == 600, "3 pivot orders each");
         o.detail = "200 elements, 3 pivot orders each" + o.detail;
         return o;
       }},
      {10, "lambda-tree", 60,
       [] {
         Outcome o;
         const auto r = suite("lambda-tree", 0, 500);
         absorb(o, r);
         require(o, checked(r, "four-point condition") == 500, "500 quadruples");
         require(o, checked(r, "building distance is twice the tree distance") >= 50, "50 diagonal samples");
         require(o, checked(r, "Moebius invariance") > 0, "exact Moebius samples");
         o.detail = "500 quadruples, " + r.stat("moebius_exact") + " exact Moebius samples" + o.detail;
         return o;
       }},
      {11, "halving", 10,
       [] {
         Outcome o;
         const auto r = suite("halving", 0, 0);
         absorb(o, r);
         require(o, as_count(r.stat("z_third_absent")) > 0, "absent cases exercised");
         o.detail = r.stat("z_third_absent") + " absent Z[1/3] cases" + o.detail;
         return o;
       }},
      {12, "kostant-cone", 5,
       [] {
         Outcome o;
         const auto r = suite("kostant-cone", 0, 0);
         absorb(o, r);
         o.detail = "G2 " + r.stat("G2_coefficients") + ", delta1+delta2 -> " + r.stat("G2_delta1_plus_delta2") + o.detail;
         return o;
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs / %.0fs", secs, c.limit_seconds);
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.name << ": " << o.detail << " (" << timing
              << (in_time ? "" : ", over time") << ")" << std::endl;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - static_cast<std::size_t>(failed) << "/"
            << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
