#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehrkit/stapledon.hpp"

namespace ehrkit {

// h*(P; t) = a(t) + t b(t), with h* taken over (1 - t^k)^(d+1).
struct SymmetricDecomposition {
  FracPoly a;
  FracPoly b;
  std::int64_t k = 1;
  // The interior lattice point moved to the origin.
  IntVector translation;
  FracPoly hstar;
  // Identities checked on construction, in human-readable form.
  std::vector<std::string> verified;
};

// Lattice polytope with an interior lattice point: a = Int(h~),
// b = t^-1 Int((t^(1/r) + ... + t^((r-1)/r)) h~) after translating `center`
// (default: the lexicographically first interior lattice point) to 0.
// Throws NotLattice or NoInteriorLatticePoint; Inconsistent if an identity fails.
SymmetricDecomposition betke_mcmullen(const HPolytope& h, const CountOptions& opts = {},
                                      const std::optional<IntVector>& center = std::nullopt);

// Rational Q with denominator k and an interior lattice point. With P = kQ
// (translated) and r' = lcm(r(P), k):
//   a = Rat_k(G_k h~(P)), b = t^(-1/k) Rat_k((G_r' - G_k) h~(P)),
// where G_n = 1 + t^(1/n) + ... + t^((n-1)/n), re-indexed by t -> t^k.
SymmetricDecomposition rational_betke_mcmullen(const HPolytope& q, const CountOptions& opts = {},
                                               const std::optional<IntVector>& center = std::nullopt);

// Without translation, for a lattice polytope with 0 in P:
// a = Int(h~), b = t^-1 Int((G_r - 1) h~). Here a + t b = Psi(h~) = h*, but no
// symmetry is claimed.
struct BoundarySplit {
  FracPoly htilde;
  FracPoly a;
  FracPoly b;
};

BoundarySplit boundary_split(const HPolytope& h, const CountOptions& opts = {});

json to_json(const SymmetricDecomposition& s);

}  // namespace ehrkit
