#include "ehrkit/stapledon.hpp"

#include "ehrkit/error.hpp"

namespace ehrkit {

FracPoly grid_sum(std::int64_t r) { return FracPoly::geometric(Rational(1, r), r); }

BoundaryData build_htilde(const HPolytope& h, std::int64_t gamma, const CountOptions& opts) {
  if (!h.is_lattice()) throw Error(ErrorCode::NotLattice, "h~ is defined for lattice polytopes only");
  if (!h.contains_origin()) throw Error(ErrorCode::OriginNotInPolytope, "h~ requires 0 in P");
  BoundaryData out;
  out.r = codenominator(h);
  out.gamma = gamma == 0 ? out.r : gamma;
  if (out.gamma != out.r && out.gamma != 2 * out.r) {
    throw Error(ErrorCode::InvalidArgument, "h~ grid must be r or 2r");
  }
  out.k = minimal_m(h, out.gamma);
  const Index d = h.dim();
  const SeriesKind kind{out.gamma == out.r ? SeriesTag::ZRational : SeriesTag::Refined, out.gamma, out.k};
  const RationalSeriesForm z = build_series(h, kind, opts);
  const FracPoly top = z.numerator * FracPoly::one_minus(Rational(1, out.gamma)) *
                       FracPoly::one_minus(1).pow(static_cast<unsigned>(d));
  const FracPoly bottom = FracPoly::one_minus(Rational(out.k, out.gamma)).pow(static_cast<unsigned>(d + 1));
  out.htilde = divide_exact(top, bottom);
  return out;
}

FracPoly htilde_from_boundary_counts(const HPolytope& h, const CountOptions& opts) {
  if (!h.contains_origin()) throw Error(ErrorCode::OriginNotInPolytope, "boundary counts require 0 in P");
  const std::int64_t r = codenominator(h);
  const Index d = h.dim();
  // Boundary points live on the (1/r)Z grid; d+2 is one unit past the
  // largest possible degree of h~.
  const std::int64_t n_max = checked_mul(r, static_cast<std::int64_t>(d) + 2);
  std::vector<std::int64_t> counts = sample_counts(h, r, n_max, Region::BoundaryNonzero, opts);
  FracPoly::Terms terms{{0, Rational(1)}};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    if (counts[static_cast<std::size_t>(n)] != 0) terms.emplace(n, Rational(counts[static_cast<std::size_t>(n)]));
  }
  const FracPoly product = FracPoly(r, std::move(terms)) * FracPoly::one_minus(1).pow(static_cast<unsigned>(d));
  const FracPoly tail = product.window(Rational(d) + Rational(1, r), Rational(n_max, r));
  if (!tail.is_zero()) {
    throw Error(ErrorCode::Inconsistent, "boundary series numerator exceeds degree d: " + to_string(tail));
  }
  return product.truncate(Rational(d));
}

bool verify_correction_factor(std::int64_t r, std::int64_t k, Index d) {
  if (r < 1 || k < 1 || r % k != 0) {
    throw Error(ErrorCode::HypothesisViolated, "correction factor needs k | r, got r = " + std::to_string(r) +
                                                   ", k = " + std::to_string(k));
  }
  const std::int64_t s = r / k;
  const auto dd = static_cast<unsigned>(d);
  const FracPoly lhs_num = FracPoly::one_minus(Rational(k, r)).pow(dd + 1);
  const FracPoly lhs_den = FracPoly::one_minus(Rational(1, r)) * FracPoly::one_minus(1).pow(dd);
  const FracPoly rhs_num = FracPoly::geometric(Rational(1, r), k);
  const FracPoly rhs_den = FracPoly::geometric(Rational(1, s), s).pow(dd);
  return lhs_num * rhs_den == rhs_num * lhs_den;
}

bool verify_correction_factor(const HPolytope& h) {
  const std::int64_t r = codenominator(h);
  return verify_correction_factor(r, minimal_m(h, r), h.dim());
}

bool check_palindromic_htilde(const HPolytope& h, const CountOptions& opts) {
  if (h.origin_position() != OriginPosition::Interior) {
    throw Error(ErrorCode::OriginNotInterior, "h~ palindromy requires 0 in the interior");
  }
  const BoundaryData data = build_htilde(h, 0, opts);
  return is_palindromic(data.htilde, Rational(h.dim()));
}

}  // namespace ehrkit
