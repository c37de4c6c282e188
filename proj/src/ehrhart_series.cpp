#include "ehrkit/ehrhart_series.hpp"

#include <algorithm>

#include "ehrkit/error.hpp"

namespace ehrkit {

namespace {

// Samples needed: the numerator window m(d+1) plus one more period to check
// that nothing survives past it.
std::int64_t sample_bound(const SeriesKind& kind, Index d) {
  return checked_mul(kind.m, static_cast<std::int64_t>(d) + 2);
}

Integer binomial(std::int64_t n, std::int64_t k) {
  Integer out = 1;
  for (std::int64_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

// Coefficients 0..N of (sum_n c_n s^n) (1 - s^m)^p.
std::vector<Integer> times_pole(const std::vector<std::int64_t>& c, std::int64_t m, std::int64_t p) {
  std::vector<Integer> out(c.size(), Integer(0));
  for (std::int64_t i = 0; i <= p; ++i) {
    Integer f = binomial(p, i);
    if (i % 2 == 1) f = -f;
    const std::size_t shift = static_cast<std::size_t>(i * m);
    for (std::size_t n = 0; n + shift < c.size(); ++n) out[n + shift] += f * c[n];
  }
  return out;
}

FracPoly grid_poly(const std::vector<Integer>& coeffs, std::size_t upto, std::int64_t gamma) {
  FracPoly::Terms terms;
  for (std::size_t n = 0; n <= upto && n < coeffs.size(); ++n) {
    if (coeffs[n] != 0) terms.emplace(static_cast<std::int64_t>(n), Rational(coeffs[n]));
  }
  return FracPoly(gamma, std::move(terms));
}

RationalSeriesForm numerator_from_counts(const std::vector<std::int64_t>& counts, const SeriesKind& kind, Index d,
                                         std::size_t last_kept, const char* what) {
  const std::int64_t p = static_cast<std::int64_t>(d) + 1;
  std::vector<Integer> prod = times_pole(counts, kind.m, p);
  for (std::size_t n = last_kept + 1; n < prod.size(); ++n) {
    if (prod[n] != 0) {
      throw Error(ErrorCode::NumeratorMismatch,
                  std::string(what) + " counts leave a term at t^(" + to_string(Rational(static_cast<std::int64_t>(n), kind.gamma)) +
                      ") beyond the numerator bound; m = " + std::to_string(kind.m) + " does not satisfy the lattice hypothesis");
    }
  }
  for (std::size_t n = 0; n <= last_kept; ++n) {
    if (prod[n] < 0) {
      throw Error(ErrorCode::NumeratorMismatch, std::string(what) + " numerator has a negative coefficient");
    }
  }
  return {grid_poly(prod, last_kept, kind.gamma), Rational(kind.m, kind.gamma), static_cast<int>(p)};
}

}  // namespace

std::string_view to_string(SeriesTag tag) {
  switch (tag) {
    case SeriesTag::Classical: return "classical";
    case SeriesTag::ZRational: return "zrational";
    case SeriesTag::Refined: return "refined";
  }
  return "unknown";
}

SeriesTag parse_series_tag(std::string_view text) {
  if (text == "classical") return SeriesTag::Classical;
  if (text == "zrational") return SeriesTag::ZRational;
  if (text == "refined") return SeriesTag::Refined;
  throw Error(ErrorCode::InvalidArgument, "unknown series kind '" + std::string(text) + "'");
}

std::int64_t series_gamma(const HPolytope& h, SeriesTag tag) {
  switch (tag) {
    case SeriesTag::Classical: return 1;
    case SeriesTag::ZRational: return codenominator(h);
    case SeriesTag::Refined: return checked_mul(2, codenominator(h));
  }
  return 1;
}

SeriesKind make_kind(const HPolytope& h, SeriesTag tag, std::optional<std::int64_t> m) {
  SeriesKind kind{tag, series_gamma(h, tag), 0};
  const std::int64_t minimal = minimal_m(h, kind.gamma);
  if (!m) {
    kind.m = minimal;
    return kind;
  }
  if (*m < 1 || *m % minimal != 0) {
    throw Error(ErrorCode::InvalidArgument, "m = " + std::to_string(*m) + " does not make (m/" +
                                                std::to_string(kind.gamma) + ")P a lattice polytope (multiples of " +
                                                std::to_string(minimal) + " do)");
  }
  kind.m = *m;
  return kind;
}

RationalSeriesForm build_series(const HPolytope& h, const SeriesKind& kind, const CountOptions& opts) {
  if (kind.m < 1 || kind.gamma < 1) throw Error(ErrorCode::InvalidArgument, "series parameters must be positive");
  const Index d = h.dim();
  std::vector<std::int64_t> counts = sample_counts(h, kind.gamma, sample_bound(kind, d), Region::Closed, opts);
  const std::size_t last = static_cast<std::size_t>(kind.m * (d + 1) - 1);
  return numerator_from_counts(counts, kind, d, last, "closed");
}

RationalSeriesForm build_open_series(const HPolytope& h, const SeriesKind& kind, const CountOptions& opts) {
  if (kind.m < 1 || kind.gamma < 1) throw Error(ErrorCode::InvalidArgument, "series parameters must be positive");
  const Index d = h.dim();
  std::vector<std::int64_t> counts = sample_counts(h, kind.gamma, sample_bound(kind, d), Region::Open, opts);
  const std::size_t last = static_cast<std::size_t>(kind.m * (d + 1));
  return numerator_from_counts(counts, kind, d, last, "open");
}

bool verify_reciprocity(const HPolytope& h, const SeriesKind& kind, const CountOptions& opts) {
  const RationalSeriesForm closed = build_series(h, kind, opts);
  const RationalSeriesForm open = build_open_series(h, kind, opts);
  const Rational total(kind.m * (h.dim() + 1), kind.gamma);
  return open.numerator == closed.numerator.reflect(total);
}

FactoredSeries cancel_common_factors(const RationalSeriesForm& s, const SeriesKind& kind) {
  FactoredSeries out{s.numerator, {}};
  std::vector<std::int64_t> divisors;
  for (std::int64_t j = kind.m; j >= 2; --j) {
    if (kind.m % j == 0) divisors.push_back(j);
  }
  for (int f = 0; f < s.pole_order; ++f) {
    Rational exponent = s.pole_exponent;
    for (std::int64_t j : divisors) {
      const Rational e = s.pole_exponent / j;
      try {
        FracPoly q = divide_exact(out.numerator, FracPoly::geometric(e, j));
        if (!q.is_nonnegative()) continue;
        out.numerator = std::move(q);
        exponent = e;
        break;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NotDivisible) throw;
      }
    }
    out.denominator_exponents.push_back(exponent);
  }
  std::sort(out.denominator_exponents.begin(), out.denominator_exponents.end());
  return out;
}

Rational QuasiPolynomial::evaluate(const Rational& lambda) const {
  const Rational n = lambda / step;
  if (!is_integer(n)) throw Error(ErrorCode::InvalidArgument, to_string(lambda) + " is not on the sample grid");
  std::int64_t j = to_int64(n) % period_terms;
  if (j < 0) j += period_terms;
  const RatVector& c = constituents[static_cast<std::size_t>(j)];
  Rational value = 0;
  for (Index i = c.size() - 1; i >= 0; --i) value = value * lambda + c(i);
  return value;
}

QuasiPolynomial extract_quasipolynomial(const RationalSeriesForm& s, const HPolytope& h, const SeriesKind& kind,
                                        const CountOptions& opts) {
  const Index d = h.dim();
  const std::int64_t n_max = sample_bound(kind, d);
  std::vector<std::int64_t> counts = sample_counts(h, kind.gamma, n_max, Region::Closed, opts);

  const Rational upto(n_max, kind.gamma);
  std::map<Rational, Rational> expanded = series_expand(s, upto);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    auto it = expanded.find(Rational(n, kind.gamma));
    const Rational coeff = it == expanded.end() ? Rational(0) : it->second;
    if (coeff != counts[static_cast<std::size_t>(n)]) {
      throw Error(ErrorCode::FitMismatch, "series does not expand to the counts at n = " + std::to_string(n));
    }
  }

  QuasiPolynomial q{Rational(1, kind.gamma), kind.m, {}};
  for (std::int64_t j = 0; j < kind.m; ++j) {
    RatMatrix vander(d + 1, d + 1);
    RatVector values(d + 1);
    for (Index i = 0; i <= d; ++i) {
      const Rational lambda(j + kind.m * i, kind.gamma);
      Rational power = 1;
      for (Index p = 0; p <= d; ++p) {
        vander(i, p) = power;
        power *= lambda;
      }
      values(i) = counts[static_cast<std::size_t>(j + kind.m * i)];
    }
    auto coeffs = solve_unique(vander, values);
    if (!coeffs) throw Error(ErrorCode::FitMismatch, "singular interpolation system");
    q.constituents.push_back(*coeffs);
    const std::int64_t check = j + kind.m * (d + 1);
    if (q.evaluate(Rational(check, kind.gamma)) != counts[static_cast<std::size_t>(check)]) {
      throw Error(ErrorCode::FitMismatch, "constituent " + std::to_string(j) + " misses the verification sample");
    }
  }
  return q;
}

Rational minimal_period(const QuasiPolynomial& q) {
  const std::int64_t m = q.period_terms;
  for (std::int64_t p = 1; p <= m; ++p) {
    if (m % p != 0) continue;
    bool ok = true;
    for (std::int64_t j = 0; j < m && ok; ++j) {
      ok = q.constituents[static_cast<std::size_t>(j)] == q.constituents[static_cast<std::size_t>((j + p) % m)];
    }
    if (ok) return q.step * p;
  }
  return q.step * m;
}

PeriodReport period_report(const HPolytope& h, const QuasiPolynomial& q) {
  PeriodReport out;
  out.period = minimal_period(q);
  out.bound = denominator(h);
  out.collapse = out.period < out.bound;
  return out;
}

ClassicalHStar classical_hstar(const HPolytope& h, const CountOptions& opts) {
  ClassicalHStar out;
  out.k = denominator(h);
  const SeriesKind classical{SeriesTag::Classical, 1, out.k};
  out.series = build_series(h, classical, opts);
  out.reduced = cancel_common_factors(out.series, classical);

  const SeriesKind zr = make_kind(h, SeriesTag::ZRational);
  if (zr.m % zr.gamma == 0) {
    const RationalSeriesForm z = build_series(h, zr, opts);
    const SeriesKind matching{SeriesTag::Classical, 1, zr.m / zr.gamma};
    const RationalSeriesForm direct = matching.m == out.k ? out.series : build_series(h, matching, opts);
    if (op_int(z.numerator) != direct.numerator) {
      throw Error(ErrorCode::Inconsistent, "Int of the r-grid numerator differs from h*: " + to_string(op_int(z.numerator)) +
                                               " vs " + to_string(direct.numerator));
    }
    out.cross_checked = true;
  }
  return out;
}

Rational rational_codegree(const FracPoly& numerator, const SeriesKind& kind, Index d) {
  return Rational(kind.m * (d + 1), kind.gamma) - numerator.degree();
}

}  // namespace ehrkit
