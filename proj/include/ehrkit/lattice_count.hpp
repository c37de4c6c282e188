#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "ehrkit/polytope.hpp"

namespace ehrkit {

enum class Region { Closed, Open, BoundaryNonzero };

std::string_view to_string(Region region);
// "closed", "open" or "boundary"; throws InvalidArgument otherwise.
Region parse_region(std::string_view text);

// 10^7 candidate points unless EHRKIT_BUDGET is set.
std::int64_t default_budget();

struct CountOptions {
  std::int64_t budget = default_budget();
};

// |lambda P cap Z^d|; lambda = 0 gives 1.
std::int64_t count_closed(const HPolytope& h, const Rational& lambda, const CountOptions& opts = {});
// |lambda P° cap Z^d|; lambda = 0 gives 0.
std::int64_t count_open(const HPolytope& h, const Rational& lambda, const CountOptions& opts = {});
// Lattice points of lambda P on a facet not containing the origin. Requires
// 0 in P (OriginNotInPolytope) and lambda > 0 (NonPositiveDilate).
std::int64_t count_boundary_nonzero(const HPolytope& h, const Rational& lambda, const CountOptions& opts = {});
std::int64_t count(const HPolytope& h, const Rational& lambda, Region region, const CountOptions& opts = {});

// [count_closed(h, i step) for i = 0 .. count-1], one brute-force count each.
std::vector<std::int64_t> oracle_quasi_samples(const HPolytope& h, const Rational& step, std::int64_t count,
                                               const CountOptions& opts = {});

// Counts at lambda = n / gamma for n = 0 .. n_max from a single sweep over the
// lattice points of conv({0} cup (n_max/gamma) P). Entry 0 follows the same
// conventions as the single-dilate counters (boundary entry 0 is 0).
std::vector<std::int64_t> sample_counts(const HPolytope& h, std::int64_t gamma, std::int64_t n_max, Region region,
                                        const CountOptions& opts = {});

// Interior lattice points of P in lexicographic order.
std::vector<IntVector> interior_lattice_points(const HPolytope& h, const CountOptions& opts = {});

}  // namespace ehrkit
