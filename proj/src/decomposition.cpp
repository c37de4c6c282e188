#include "ehrkit/decomposition.hpp"

#include "ehrkit/error.hpp"

namespace ehrkit {

namespace {

void require(bool ok, const std::string& identity, std::vector<std::string>& verified) {
  if (!ok) throw Error(ErrorCode::Inconsistent, "decomposition identity fails: " + identity);
  verified.push_back(identity);
}

std::string t_power(std::int64_t e) { return e == 1 ? "t" : "t^" + std::to_string(e); }

SymmetricDecomposition decompose(const HPolytope& q, std::int64_t k, const CountOptions& opts,
                                 const std::optional<IntVector>& center) {
  IntVector v;
  if (center) {
    v = *center;
    bool interior = v.size() == q.dim();
    for (Index j = 0; j < q.num_rows() && interior; ++j) interior = q.normal(j).dot(v) < q.rhs(j);
    if (!interior) throw Error(ErrorCode::InvalidArgument, "chosen center is not an interior lattice point");
  } else {
    std::vector<IntVector> pts = interior_lattice_points(q, opts);
    if (pts.empty()) throw Error(ErrorCode::NoInteriorLatticePoint, "polytope has no interior lattice point");
    v = pts.front();
  }
  const HPolytope p = scale(translate(q, IntVector(-v)), Rational(k));
  const BoundaryData bd = build_htilde(p, 0, opts);
  const std::int64_t rr = lcm64(bd.r, k);
  const FracPoly gk = grid_sum(k);

  SymmetricDecomposition out;
  out.k = k;
  out.translation = v;
  out.a = op_rat_k(gk * bd.htilde, k).substitute_power(Rational(k));
  out.b = op_rat_k((grid_sum(rr) - gk) * bd.htilde, k).shift(Rational(-1, k)).substitute_power(Rational(k));
  out.hstar = build_series(q, SeriesKind{SeriesTag::Classical, 1, k}, opts).numerator;

  const Index d = q.dim();
  const std::int64_t adeg = k * (d + 1) - 1;
  require(out.a.has_integer_exponents() && out.b.has_integer_exponents(), "a, b in Z[t]", out.verified);
  require(out.a.has_integer_coefficients() && out.a.is_nonnegative(), "a has nonnegative integer coefficients",
          out.verified);
  require(out.b.has_integer_coefficients() && out.b.is_nonnegative(), "b has nonnegative integer coefficients",
          out.verified);
  require(is_palindromic(out.a, Rational(adeg)), t_power(adeg) + " a(1/t) = a(t)", out.verified);
  require(is_palindromic(out.b, Rational(adeg - 1)), t_power(adeg - 1) + " b(1/t) = b(t)", out.verified);
  require(out.a + FracPoly::monomial(1, 1) * out.b == out.hstar, "h*(t) = a(t) + t b(t)", out.verified);
  return out;
}

}  // namespace

SymmetricDecomposition betke_mcmullen(const HPolytope& h, const CountOptions& opts,
                                      const std::optional<IntVector>& center) {
  if (!h.is_lattice()) throw Error(ErrorCode::NotLattice, "Betke-McMullen decomposition needs a lattice polytope");
  return decompose(h, 1, opts, center);
}

SymmetricDecomposition rational_betke_mcmullen(const HPolytope& q, const CountOptions& opts,
                                               const std::optional<IntVector>& center) {
  return decompose(q, denominator(q), opts, center);
}

BoundarySplit boundary_split(const HPolytope& h, const CountOptions& opts) {
  const BoundaryData bd = build_htilde(h, 0, opts);
  BoundarySplit out;
  out.htilde = bd.htilde;
  out.a = op_int(bd.htilde);
  out.b = op_int((grid_sum(bd.r) - FracPoly(Rational(1))) * bd.htilde).shift(-1);
  return out;
}

json to_json(const SymmetricDecomposition& s) {
  json out;
  out["k"] = s.k;
  json t = json::array();
  for (Index i = 0; i < s.translation.size(); ++i) t.push_back(s.translation(i));
  out["translation"] = t;
  out["a"] = to_json(s.a);
  out["b"] = to_json(s.b);
  out["a_text"] = to_string(s.a);
  out["b_text"] = to_string(s.b);
  out["hstar"] = to_json(s.hstar);
  out["verified"] = s.verified;
  return out;
}

}  // namespace ehrkit
