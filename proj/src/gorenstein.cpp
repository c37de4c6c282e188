#include "ehrkit/gorenstein.hpp"

#include "ehrkit/error.hpp"

namespace ehrkit {

namespace {

std::optional<IntVector> integral_point(const RatVector& x) {
  IntVector out(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    if (!is_integer(x(i))) return std::nullopt;
    out(i) = to_int64(x(i));
  }
  return out;
}

std::string point_text(const IntVector& p) {
  std::string s = "(";
  for (Index i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p(i));
  return s + ")";
}

}  // namespace

std::string_view to_string(Condition c) {
  switch (c) {
    case Condition::LinearSystem: return "linear_system";
    case Condition::Palindromy: return "palindromy";
    case Condition::DualRays: return "dual_rays";
    case Condition::CountShift: return "count_shift";
  }
  return "unknown";
}

GorensteinCertificate gorenstein_via_dual_rays(const HPolytope& h, std::int64_t gamma) {
  const ConeHRep cone = homogenize(h, gamma);
  const Index n = static_cast<Index>(cone.facet_normals.size());
  const Index dd = cone.ambient_dim;
  RatMatrix w(n, dd);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < dd; ++i) w(j, i) = Rational(cone.facet_normals[static_cast<std::size_t>(j)](i));
  }

  GorensteinCertificate cert;
  cert.gamma = gamma;
  cert.m = minimal_m(h, gamma);
  bool found = false;
  for_each_combination(n, dd, [&](const std::vector<Index>& idx) {
    if (found) return;
    RatMatrix sub(dd, dd);
    for (Index i = 0; i < dd; ++i) sub.row(i) = w.row(idx[static_cast<std::size_t>(i)]);
    if (determinant(sub) == 0) return;
    found = true;
    cert.rational_solution = solve_unique(sub, RatVector(RatVector::Ones(dd)));
  });
  if (!cert.rational_solution) throw Error(ErrorCode::Inconsistent, "facet normals of hom(P) do not span");

  const RatVector values = w * *cert.rational_solution;
  bool all_one = true;
  for (Index j = 0; j < n; ++j) all_one = all_one && values(j) == 1;
  std::optional<IntVector> point = integral_point(*cert.rational_solution);
  cert.is_gorenstein = all_one && point && (*point)(0) >= 1;
  if (cert.is_gorenstein) cert.gorenstein_point = point;
  cert.witnesses[Condition::DualRays] = cert.is_gorenstein;
  return cert;
}

GorensteinCertificate gorenstein_via_linear_system(const HPolytope& h, std::int64_t gamma) {
  const std::int64_t r = codenominator(h);
  if (gamma != r && gamma != 2 * r) throw Error(ErrorCode::InvalidArgument, "linear system applies to gamma = r or 2r");
  if (gamma == r && !h.contains_origin()) {
    throw Error(ErrorCode::HypothesisViolated, "the r-rational linear system requires 0 in P");
  }
  const Index d = h.dim();
  RatMatrix a(h.num_rows(), d + 1);
  RatVector rhs(h.num_rows());
  for (Index j = 0; j < h.num_rows(); ++j) {
    const std::int64_t b = h.rhs(j);
    const std::int64_t scale = b == 0 ? 1 : gamma;
    a(j, 0) = Rational(b);
    for (Index i = 0; i < d; ++i) a(j, i + 1) = Rational(-checked_mul(scale, h.normals()(j, i)));
    rhs(j) = Rational(b == 0 ? 1 : (b < 0 ? -b : b));
  }
  GorensteinCertificate cert;
  cert.gamma = gamma;
  cert.m = minimal_m(h, gamma);
  auto x = solve_unique(a, rhs);
  if (x) {
    cert.rational_solution = x;
    std::optional<IntVector> point = integral_point(*x);
    if (point && (*point)(0) >= 1) {
      cert.is_gorenstein = true;
      cert.gorenstein_point = point;
    }
  }
  cert.witnesses[Condition::LinearSystem] = cert.is_gorenstein;
  return cert;
}

PalindromyResult gorenstein_via_palindromy(const HPolytope& h, std::int64_t gamma, std::int64_t m,
                                           const CountOptions& opts) {
  const SeriesKind kind{SeriesTag::ZRational, gamma, m};
  const RationalSeriesForm s = build_series(h, kind, opts);
  const Rational total = s.numerator.degree() + s.numerator.order();
  PalindromyResult out;
  out.palindromic = is_palindromic(s.numerator, total);
  const Rational g = Rational(m * (h.dim() + 1)) - total * gamma;
  if (is_integer(g)) out.g = to_int64(g);
  return out;
}

bool gorenstein_via_count_shift(const HPolytope& h, std::int64_t gamma, std::int64_t g, std::int64_t m,
                                const CountOptions& opts) {
  if (g < 0) return false;
  const std::int64_t n_max = checked_mul(2 * m, static_cast<std::int64_t>(h.dim()) + 1);
  const std::vector<std::int64_t> closed = sample_counts(h, gamma, n_max, Region::Closed, opts);
  const std::vector<std::int64_t> open = sample_counts(h, gamma, n_max + g, Region::Open, opts);
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (closed[static_cast<std::size_t>(n)] != open[static_cast<std::size_t>(n + g)]) return false;
  }
  return true;
}

std::int64_t interior_codegree(const HPolytope& h, std::int64_t gamma, const CountOptions& opts) {
  const SeriesKind kind{SeriesTag::ZRational, gamma, minimal_m(h, gamma)};
  const RationalSeriesForm open = build_open_series(h, kind, opts);
  return to_int64(Rational(open.numerator.order() * gamma));
}

std::vector<std::int64_t> lattice_distances(const HPolytope& h, std::int64_t gamma, const IntVector& point) {
  std::vector<std::int64_t> out;
  for (const IntVector& w : homogenize(h, gamma).facet_normals) {
    std::int64_t s = 0;
    for (Index i = 0; i < w.size(); ++i) s = checked_add(s, checked_mul(w(i), point(i)));
    out.push_back(s);
  }
  return out;
}

GorensteinCertificate gorenstein_certificate(const HPolytope& h, std::int64_t gamma, const CountOptions& opts) {
  GorensteinCertificate cert = gorenstein_via_dual_rays(h, gamma);
  const std::int64_t r = codenominator(h);
  auto disagree = [&](Condition c, const std::string& detail) {
    throw Error(ErrorCode::Inconsistent, std::string(to_string(c)) + " disagrees with dual_rays at gamma = " +
                                             std::to_string(gamma) + ": " + detail);
  };

  if ((gamma == r && h.contains_origin()) || gamma == 2 * r) {
    const GorensteinCertificate lin = gorenstein_via_linear_system(h, gamma);
    if (lin.is_gorenstein != cert.is_gorenstein) disagree(Condition::LinearSystem, "verdict");
    if (lin.is_gorenstein && *lin.gorenstein_point != *cert.gorenstein_point) {
      disagree(Condition::LinearSystem, point_text(*lin.gorenstein_point) + " vs " + point_text(*cert.gorenstein_point));
    }
    cert.witnesses[Condition::LinearSystem] = lin.is_gorenstein;
  }

  const PalindromyResult pal = gorenstein_via_palindromy(h, gamma, cert.m, opts);
  if (pal.palindromic != cert.is_gorenstein) disagree(Condition::Palindromy, "verdict");
  if (cert.is_gorenstein && pal.g != (*cert.gorenstein_point)(0)) disagree(Condition::Palindromy, "g");
  cert.witnesses[Condition::Palindromy] = pal.palindromic;

  const std::int64_t g = cert.is_gorenstein ? (*cert.gorenstein_point)(0) : interior_codegree(h, gamma, opts);
  const bool shift = gorenstein_via_count_shift(h, gamma, g, cert.m, opts);
  if (shift != cert.is_gorenstein) disagree(Condition::CountShift, "verdict with g = " + std::to_string(g));
  cert.witnesses[Condition::CountShift] = shift;
  return cert;
}

GorensteinSummary classify(const HPolytope& h, const CountOptions& opts) {
  const std::int64_t r = codenominator(h);
  GorensteinSummary out{gorenstein_certificate(h, r, opts), gorenstein_certificate(h, 2 * r, opts)};
  if (h.contains_origin() && out.at_r.is_gorenstein && !out.at_2r.is_gorenstein) {
    throw Error(ErrorCode::Inconsistent, "0 in P and r-rational Gorenstein but not 2r-rational Gorenstein");
  }
  if (out.at_2r.is_gorenstein && (*out.at_2r.gorenstein_point)(0) % 2 == 0 && !out.at_r.is_gorenstein) {
    throw Error(ErrorCode::Inconsistent, "2r-rational Gorenstein with even g but not r-rational Gorenstein");
  }
  return out;
}

json to_json(const GorensteinCertificate& c) {
  json out;
  out["gamma"] = c.gamma;
  out["m"] = c.m;
  out["is_gorenstein"] = c.is_gorenstein;
  if (c.gorenstein_point) {
    json p = json::array();
    for (Index i = 0; i < c.gorenstein_point->size(); ++i) p.push_back((*c.gorenstein_point)(i));
    out["gorenstein_point"] = p;
  } else {
    out["gorenstein_point"] = nullptr;
  }
  out["rational_solution"] = c.rational_solution ? rational_vector_json(*c.rational_solution) : json(nullptr);
  json w = json::object();
  for (const auto& [cond, verdict] : c.witnesses) w[std::string(to_string(cond))] = verdict;
  out["witnesses"] = w;
  return out;
}

}  // namespace ehrkit
