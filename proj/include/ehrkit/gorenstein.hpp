#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "ehrkit/ehrhart_series.hpp"

namespace ehrkit {

enum class Condition { LinearSystem, Palindromy, DualRays, CountShift };

std::string_view to_string(Condition c);

struct GorensteinCertificate {
  std::int64_t gamma = 1;
  // Scale used for the palindromy and count-shift conditions.
  std::int64_t m = 1;
  bool is_gorenstein = false;
  // (g, y) when Gorenstein.
  std::optional<IntVector> gorenstein_point;
  // Unique rational solution of <(g, y), w> = 1 over the first d+1
  // independent facet normals, when one exists.
  std::optional<RatVector> rational_solution;
  // Verdict per evaluated condition. count_shift is a sampled consistency
  // check, not a proof.
  std::map<Condition, bool> witnesses;
};

// Solve <(g, y), w> = 1 over the primitive facet normals of hom((1/gamma) P).
GorensteinCertificate gorenstein_via_dual_rays(const HPolytope& h, std::int64_t gamma);

// Integer solution of b_j g - gamma <a_j, y> = |b_j| (and -<a_j, y> = 1 for
// b_j = 0), for gamma in {r, 2r}. gamma = r requires 0 in P
// (HypothesisViolated).
GorensteinCertificate gorenstein_via_linear_system(const HPolytope& h, std::int64_t gamma);

struct PalindromyResult {
  bool palindromic = false;
  // (d+1) m - gamma (deg + ord), when integral.
  std::optional<std::int64_t> g;
};

// Palindromy of the numerator over (1 - t^(m/gamma))^(d+1).
PalindromyResult gorenstein_via_palindromy(const HPolytope& h, std::int64_t gamma, std::int64_t m,
                                           const CountOptions& opts = {});

// ehr(P; n/gamma) == ehr(P°; (n+g)/gamma) for n = 0 .. 2m(d+1).
bool gorenstein_via_count_shift(const HPolytope& h, std::int64_t gamma, std::int64_t g, std::int64_t m,
                                const CountOptions& opts = {});

// Smallest n >= 1 with an interior lattice point in (n/gamma) P.
std::int64_t interior_codegree(const HPolytope& h, std::int64_t gamma, const CountOptions& opts = {});

// <(g, y), w> for every facet normal w of hom((1/gamma) P).
std::vector<std::int64_t> lattice_distances(const HPolytope& h, std::int64_t gamma, const IntVector& point);

// All applicable conditions for one gamma; Inconsistent if they disagree.
GorensteinCertificate gorenstein_certificate(const HPolytope& h, std::int64_t gamma, const CountOptions& opts = {});

struct GorensteinSummary {
  GorensteinCertificate at_r;
  GorensteinCertificate at_2r;
};

// Certificates for gamma = r and 2r, with the implications
// 0 in P and r-Gorenstein => 2r-Gorenstein, and 2r-Gorenstein with even g =>
// r-Gorenstein, asserted (Inconsistent).
GorensteinSummary classify(const HPolytope& h, const CountOptions& opts = {});

json to_json(const GorensteinCertificate& c);

}  // namespace ehrkit
