#pragma once

// Test-only helpers. The counting oracle here is deliberately naive and shares
// no code with the library's sweep: it enumerates a bounding box per sample
// and tests every inequality with plain integer arithmetic.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ehrkit/report.hpp"

namespace ehrkit::testing {

FracPoly poly(std::initializer_list<std::pair<const char*, std::int64_t>> terms);
HPolytope vpoly(std::initializer_list<std::initializer_list<const char*>> vertices);
HPolytope corpus_polytope(const std::string& stem);
std::string corpus_dir();

// |(n/gamma) P ∩ Z^d|, closed or open.
std::int64_t brute_count(const HPolytope& h, std::int64_t n, std::int64_t gamma, bool open = false);
std::vector<std::int64_t> brute_counts(const HPolytope& h, std::int64_t gamma, std::int64_t n_max, bool open = false);

// Same, at an arbitrary rational dilate.
std::int64_t brute_count_at(const HPolytope& h, const Rational& lambda, bool open = false);

// Random full-dimensional polytope: d in {1,2,3}, vertex denominators <= 4,
// coordinates in [-bound, bound].
struct RandomPolytope {
  HPolytope h;
  std::string description;
};
RandomPolytope random_polytope(std::mt19937_64& rng, int d);

// Rough number of points the brute-force oracle visits for the refined grid.
double oracle_cost(const HPolytope& h);

// One randomized instance through every invariant. Empty result means pass.
struct PropertyTally {
  int instances = 0;
  int with_interior_point = 0;
  int lattice_with_origin = 0;
  int origin_interior = 0;
  int gorenstein_r = 0;
};
std::vector<std::string> check_properties(const HPolytope& h, PropertyTally& tally);

// Runs `count` seeded instances (dimension mix weighted to d = 1, 2).
std::vector<std::string> run_property_suite(std::uint64_t seed, int count, PropertyTally& tally);

}  // namespace ehrkit::testing
