#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ehrkit/lattice_count.hpp"
#include "ehrkit/series_form.hpp"

namespace ehrkit {

enum class SeriesTag { Classical, ZRational, Refined };

std::string_view to_string(SeriesTag tag);
SeriesTag parse_series_tag(std::string_view text);

// Grid parameter gamma: 1, r or 2r.
std::int64_t series_gamma(const HPolytope& h, SeriesTag tag);

// Series over the grid (1/gamma)Z with denominator (1 - t^(m/gamma))^(d+1).
struct SeriesKind {
  SeriesTag tag = SeriesTag::ZRational;
  std::int64_t gamma = 1;
  std::int64_t m = 1;
};

// Default m is minimal_m(h, gamma). An explicit m must make (m/gamma) P a
// lattice polytope (InvalidArgument otherwise).
SeriesKind make_kind(const HPolytope& h, SeriesTag tag, std::optional<std::int64_t> m = std::nullopt);

// Numerator of sum_n ehr(P; n/gamma) t^(n/gamma). Throws NumeratorMismatch if
// the counts are not reproduced by a numerator of degree < m(d+1)/gamma with
// nonnegative integer coefficients.
RationalSeriesForm build_series(const HPolytope& h, const SeriesKind& kind, const CountOptions& opts = {});
// Same for the interior counts; numerator degree <= m(d+1)/gamma.
RationalSeriesForm build_open_series(const HPolytope& h, const SeriesKind& kind, const CountOptions& opts = {});

// open numerator == t^(m(d+1)/gamma) * closed numerator(1/t)
bool verify_reciprocity(const HPolytope& h, const SeriesKind& kind, const CountOptions& opts = {});

// Greedy cancellation: each factor 1 - t^(m/gamma) is replaced by 1 - t^e,
// e = (m/j)/gamma, for the largest j | m such that the numerator is divisible
// by 1 + t^e + ... + t^((j-1)e) with a nonnegative quotient.
FactoredSeries cancel_common_factors(const RationalSeriesForm& s, const SeriesKind& kind);

struct QuasiPolynomial {
  Rational step;
  std::int64_t period_terms = 1;
  // constituents[j](i) is the coefficient of lambda^i for lambda = n step,
  // n = j mod period_terms.
  std::vector<RatVector> constituents;

  // lambda must lie on the step grid; negative lambda evaluates the
  // polynomial continuation.
  Rational evaluate(const Rational& lambda) const;
};

// Fits each residue class through d+1 samples and checks a (d+2)-th sample
// and the expansion of s (FitMismatch on disagreement).
QuasiPolynomial extract_quasipolynomial(const RationalSeriesForm& s, const HPolytope& h, const SeriesKind& kind,
                                        const CountOptions& opts = {});

// Smallest m'/gamma, m' | m, with constituent j equal to constituent j + m'.
Rational minimal_period(const QuasiPolynomial& q);

struct PeriodReport {
  Rational period;
  std::int64_t bound = 1;  // denominator of P
  bool collapse = false;
};

PeriodReport period_report(const HPolytope& h, const QuasiPolynomial& q);

struct ClassicalHStar {
  std::int64_t k = 1;
  // Over (1 - t^k)^(d+1).
  RationalSeriesForm series;
  FactoredSeries reduced;
  // Whether Int of the r-grid numerator was available and compared.
  bool cross_checked = false;
};

// h* from integer dilates, compared with Int(Zh*_m) when m/r is integral
// (Inconsistent on disagreement).
ClassicalHStar classical_hstar(const HPolytope& h, const CountOptions& opts = {});

// m(d+1)/gamma - deg numerator
Rational rational_codegree(const FracPoly& numerator, const SeriesKind& kind, Index d);

}  // namespace ehrkit
