#pragma once

#include <cstdint>

#include "ehrkit/ehrhart_series.hpp"

namespace ehrkit {

struct BoundaryData {
  FracPoly htilde;
  std::int64_t r = 1;
  // Denominator of (1/gamma) P.
  std::int64_t k = 1;
  // Grid used for the computation: r or 2r.
  std::int64_t gamma = 1;
};

// h~ = Zh*_k (1 - t^(1/gamma)) (1 - t)^d / (1 - t^(k/gamma))^(d+1) by exact
// division, for a lattice polytope with 0 in P. gamma defaults to r.
// Throws NotLattice, OriginNotInPolytope or NotDivisible.
BoundaryData build_htilde(const HPolytope& h, std::int64_t gamma = 0, const CountOptions& opts = {});

// h~ = (1 - t)^d (1 + sum_lambda |boundary_nonzero(lambda P)| t^lambda),
// truncated after verifying that the product terminates at degree d.
FracPoly htilde_from_boundary_counts(const HPolytope& h, const CountOptions& opts = {});

// (1 - t^(k/r))^(d+1) / ((1 - t^(1/r)) (1 - t)^d)
//   == (1 + t^(1/r) + ... + t^((k-1)/r)) / (1 + t^(1/s) + ... + t^((s-1)/s))^d
// with r = k s, checked after clearing denominators.
bool verify_correction_factor(std::int64_t r, std::int64_t k, Index d);
// Same for the invariants of h; HypothesisViolated unless k divides r.
bool verify_correction_factor(const HPolytope& h);

// h~ palindromic of total degree d. Requires 0 in the interior.
bool check_palindromic_htilde(const HPolytope& h, const CountOptions& opts = {});

// 1 + t^(1/r) + ... + t^((r-1)/r)
FracPoly grid_sum(std::int64_t r);

}  // namespace ehrkit
