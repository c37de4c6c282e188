#include "ehrkit/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ehrkit/error.hpp"

namespace ehrkit {

namespace {

bool equal_vec(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

Rational dot(const IntVector& a, const RatVector& x) {
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) s += Rational(a(i)) * x(i);
  return s;
}

void sort_unique(std::vector<RatVector>& pts) {
  std::sort(pts.begin(), pts.end(), [](const RatVector& a, const RatVector& b) { return lex_less(a, b); });
  pts.erase(std::unique(pts.begin(), pts.end(), equal_vec), pts.end());
}

std::int64_t den64(const Rational& q) { return to_int64(den(q)); }

struct Row {
  IntVector a;
  std::int64_t b;
};

bool same_row(const Row& x, const Row& y) { return x.b == y.b && x.a == y.a; }

Row reduce(Row r) {
  std::int64_t g = r.b < 0 ? -r.b : r.b;
  for (Index i = 0; i < r.a.size(); ++i) g = gcd64(g, r.a(i));
  if (g > 1) {
    r.a /= g;
    r.b /= g;
  }
  return r;
}

}  // namespace

std::string_view to_string(OriginPosition pos) {
  switch (pos) {
    case OriginPosition::Interior: return "interior";
    case OriginPosition::Boundary: return "boundary";
    case OriginPosition::Exterior: return "exterior";
  }
  return "unknown";
}

IntVector primitive(const IntVector& v) {
  std::int64_t g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd64(g, v(i));
  if (g <= 1) return v;
  return v / g;
}

HPolytope::HPolytope(const IntMatrix& normals, const IntVector& rhs) {
  const Index d = normals.cols();
  if (d < 1) throw Error(ErrorCode::NotFullDimensional, "dimension must be at least 1");
  if (normals.rows() != rhs.size()) throw Error(ErrorCode::InvalidArgument, "row count mismatch");

  std::vector<Row> rows;
  for (Index j = 0; j < normals.rows(); ++j) {
    Row r{normals.row(j).transpose(), rhs(j)};
    if (r.a.isZero()) {
      if (r.b < 0) throw Error(ErrorCode::NotFullDimensional, "inequality 0 <= " + std::to_string(r.b) + " is infeasible");
      normalized_ = true;
      continue;
    }
    Row red = reduce(r);
    if (!same_row(red, r)) normalized_ = true;
    bool dup = false;
    for (const Row& s : rows) dup = dup || same_row(s, red);
    if (dup) {
      normalized_ = true;
      continue;
    }
    rows.push_back(red);
  }

  const Index n = static_cast<Index>(rows.size());
  RatMatrix a(n, d);
  RatVector b(n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < d; ++i) a(j, i) = Rational(rows[static_cast<std::size_t>(j)].a(i));
    b(j) = Rational(rows[static_cast<std::size_t>(j)].b);
  }

  if (n == 0 || rank(a) < d) throw Error(ErrorCode::Unbounded, "inequalities do not bound a polytope");
  // The recession cone {A x <= 0} is pointed here; it is nontrivial iff it has
  // an extreme ray, which is cut out by d-1 independent tight rows.
  for_each_combination(n, d - 1, [&](const std::vector<Index>& idx) {
    RatMatrix sub(d - 1, d);
    for (Index i = 0; i < d - 1; ++i) sub.row(i) = a.row(idx[static_cast<std::size_t>(i)]);
    RatMatrix ns = nullspace(sub);
    if (ns.cols() != 1) return;
    RatVector ray = ns.col(0);
    RatVector image = a * ray;
    bool all_nonpos = true;
    bool all_nonneg = true;
    for (Index j = 0; j < n; ++j) {
      if (image(j) > 0) all_nonpos = false;
      if (image(j) < 0) all_nonneg = false;
    }
    if (all_nonpos || all_nonneg) throw Error(ErrorCode::Unbounded, "polyhedron has a recession direction");
  });

  std::vector<RatVector> candidates;
  for_each_combination(n, d, [&](const std::vector<Index>& idx) {
    RatMatrix sub(d, d);
    RatVector rhs_sub(d);
    for (Index i = 0; i < d; ++i) {
      sub.row(i) = a.row(idx[static_cast<std::size_t>(i)]);
      rhs_sub(i) = b(idx[static_cast<std::size_t>(i)]);
    }
    auto x = solve_unique(sub, rhs_sub);
    if (!x) return;
    RatVector ax = a * *x;
    for (Index j = 0; j < n; ++j) {
      if (ax(j) > b(j)) return;
    }
    candidates.push_back(*x);
  });
  sort_unique(candidates);
  if (candidates.empty()) throw Error(ErrorCode::NotFullDimensional, "polytope is empty");
  if (affine_rank(candidates) < d) throw Error(ErrorCode::NotFullDimensional, "polytope is not full-dimensional");

  std::vector<Index> keep;
  for (Index j = 0; j < n; ++j) {
    std::vector<RatVector> tight;
    for (const RatVector& v : candidates) {
      if (dot(rows[static_cast<std::size_t>(j)].a, v) == b(j)) tight.push_back(v);
    }
    if (affine_rank(tight) == d - 1) {
      keep.push_back(j);
    } else {
      normalized_ = true;
    }
  }

  normals_.resize(static_cast<Index>(keep.size()), d);
  rhs_.resize(static_cast<Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    const Row& r = rows[static_cast<std::size_t>(keep[i])];
    normals_.row(static_cast<Index>(i)) = r.a.transpose();
    rhs_(static_cast<Index>(i)) = r.b;
  }
  vertices_ = std::move(candidates);
}

HPolytope HPolytope::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  if (rows.empty()) throw Error(ErrorCode::Unbounded, "no inequalities given");
  const std::size_t width = rows.front().size();
  if (width < 2) throw Error(ErrorCode::NotFullDimensional, "rows must have at least one coefficient and a right-hand side");
  IntMatrix a(static_cast<Index>(rows.size()), static_cast<Index>(width - 1));
  IntVector b(static_cast<Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    if (rows[j].size() != width) throw Error(ErrorCode::ParseError, "rows have different lengths");
    for (std::size_t i = 0; i + 1 < width; ++i) a(static_cast<Index>(j), static_cast<Index>(i)) = rows[j][i];
    b(static_cast<Index>(j)) = rows[j][width - 1];
  }
  return HPolytope(a, b);
}

OriginPosition HPolytope::origin_position() const {
  bool boundary = false;
  for (Index j = 0; j < rhs_.size(); ++j) {
    if (rhs_(j) < 0) return OriginPosition::Exterior;
    if (rhs_(j) == 0) boundary = true;
  }
  return boundary ? OriginPosition::Boundary : OriginPosition::Interior;
}

bool HPolytope::is_lattice() const {
  for (const RatVector& v : vertices_) {
    for (Index i = 0; i < v.size(); ++i) {
      if (!is_integer(v(i))) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::int64_t>> HPolytope::rows() const {
  std::vector<std::vector<std::int64_t>> out;
  for (Index j = 0; j < num_rows(); ++j) {
    std::vector<std::int64_t> row;
    for (Index i = 0; i < dim(); ++i) row.push_back(normals_(j, i));
    row.push_back(rhs_(j));
    out.push_back(std::move(row));
  }
  return out;
}

HPolytope from_vrep(const VPolytope& v) {
  const Index d = v.dim;
  if (d < 1) throw Error(ErrorCode::NotFullDimensional, "dimension must be at least 1");
  std::vector<RatVector> pts = v.vertices;
  for (const RatVector& p : pts) {
    if (p.size() != d) throw Error(ErrorCode::ParseError, "vertex has wrong length");
  }
  sort_unique(pts);
  if (static_cast<Index>(pts.size()) < d + 1 || affine_rank(pts) < d) {
    throw Error(ErrorCode::NotFullDimensional, "points do not span R^" + std::to_string(d));
  }
  const Index n = static_cast<Index>(pts.size());
  std::vector<Row> rows;
  for_each_combination(n, d, [&](const std::vector<Index>& idx) {
    const RatVector& p0 = pts[static_cast<std::size_t>(idx[0])];
    RatMatrix diffs(d - 1, d);
    for (Index i = 1; i < d; ++i) diffs.row(i - 1) = (pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] - p0).transpose();
    RatMatrix ns = nullspace(diffs);
    if (ns.cols() != 1) return;
    RatVector c = ns.col(0);
    Rational rhs = c.dot(p0);
    bool above = false;
    bool below = false;
    for (const RatVector& p : pts) {
      Rational val = c.dot(p);
      if (val > rhs) above = true;
      if (val < rhs) below = true;
    }
    if (above && below) return;
    if (above) {
      c = -c;
      rhs = -rhs;
    }
    std::int64_t l = den64(rhs);
    for (Index i = 0; i < d; ++i) l = lcm64(l, den64(c(i)));
    Row r{IntVector(d), to_int64(Rational(rhs * l))};
    for (Index i = 0; i < d; ++i) r.a(i) = to_int64(Rational(c(i) * l));
    r = reduce(r);
    for (const Row& s : rows) {
      if (same_row(s, r)) return;
    }
    rows.push_back(r);
  });
  IntMatrix a(static_cast<Index>(rows.size()), d);
  IntVector b(static_cast<Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    a.row(static_cast<Index>(j)) = rows[j].a.transpose();
    b(static_cast<Index>(j)) = rows[j].b;
  }
  return HPolytope(a, b);
}

VPolytope vertex_enumeration(const HPolytope& h) { return {h.dim(), h.vertices()}; }

std::int64_t codenominator(const HPolytope& h) {
  std::int64_t r = 1;
  for (Index j = 0; j < h.num_rows(); ++j) {
    if (h.rhs(j) != 0) r = lcm64(r, h.rhs(j));
  }
  return r;
}

std::int64_t denominator(const VPolytope& v) {
  std::int64_t k = 1;
  for (const RatVector& p : v.vertices) {
    for (Index i = 0; i < p.size(); ++i) k = lcm64(k, den64(p(i)));
  }
  return k;
}

std::int64_t denominator(const HPolytope& h) { return denominator(vertex_enumeration(h)); }

std::int64_t minimal_m(const HPolytope& h, std::int64_t gamma) {
  if (gamma < 1) throw Error(ErrorCode::InvalidArgument, "gamma must be positive");
  std::int64_t m = 1;
  for (const RatVector& p : h.vertices()) {
    for (Index i = 0; i < p.size(); ++i) m = lcm64(m, den64(Rational(p(i) / gamma)));
  }
  return m;
}

DilatedHPolytope dilate(const HPolytope& h, const Rational& lambda) {
  if (lambda <= 0) throw Error(ErrorCode::NonPositiveDilate, "dilation factor " + to_string(lambda) + " is not positive");
  DilatedHPolytope out{h.normals(), RatVector(h.num_rows())};
  for (Index j = 0; j < h.num_rows(); ++j) out.rhs(j) = lambda * h.rhs(j);
  return out;
}

HPolytope scale(const HPolytope& h, const Rational& c) {
  if (c <= 0) throw Error(ErrorCode::NonPositiveDilate, "scale factor " + to_string(c) + " is not positive");
  const std::int64_t p = to_int64(num(c));
  const std::int64_t q = to_int64(den(c));
  IntMatrix a = h.normals() * q;
  IntVector b(h.num_rows());
  for (Index j = 0; j < h.num_rows(); ++j) b(j) = checked_mul(h.rhs(j), p);
  return HPolytope(a, b);
}

HPolytope translate(const HPolytope& h, const IntVector& v) {
  if (v.size() != h.dim()) throw Error(ErrorCode::InvalidArgument, "translation vector has wrong length");
  IntVector b(h.num_rows());
  for (Index j = 0; j < h.num_rows(); ++j) {
    std::int64_t s = h.rhs(j);
    for (Index i = 0; i < h.dim(); ++i) s = checked_add(s, checked_mul(h.normals()(j, i), v(i)));
    b(j) = s;
  }
  return HPolytope(h.normals(), b);
}

ConeHRep homogenize(const HPolytope& h, std::int64_t gamma) {
  if (gamma < 1) throw Error(ErrorCode::InvalidArgument, "gamma must be positive");
  ConeHRep out;
  out.ambient_dim = h.dim() + 1;
  for (Index j = 0; j < h.num_rows(); ++j) {
    IntVector w(h.dim() + 1);
    w(0) = h.rhs(j);
    for (Index i = 0; i < h.dim(); ++i) w(i + 1) = -checked_mul(gamma, h.normals()(j, i));
    out.facet_normals.push_back(primitive(w));
  }
  return out;
}

PolarDual polar_dual(const HPolytope& h) {
  if (h.origin_position() != OriginPosition::Interior) {
    throw Error(ErrorCode::OriginNotInterior, "polar dual requires the origin in the interior");
  }
  PolarDual out;
  for (Index j = 0; j < h.num_rows(); ++j) {
    RatVector v(h.dim());
    for (Index i = 0; i < h.dim(); ++i) {
      v(i) = Rational(-h.normals()(j, i), h.rhs(j));
      out.q = lcm64(out.q, den64(v(i)));
    }
    out.vertices.push_back(v);
  }
  return out;
}

std::optional<std::int64_t> is_l_reflexive(const HPolytope& h) {
  if (!h.is_lattice()) return std::nullopt;
  const std::int64_t l = h.rhs(0);
  if (l < 1) return std::nullopt;
  for (Index j = 0; j < h.num_rows(); ++j) {
    if (h.rhs(j) != l) return std::nullopt;
  }
  for (const RatVector& v : h.vertices()) {
    Integer g = 0;
    for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, num(v(i)));
    if (g != 1) return std::nullopt;
  }
  return l;
}

namespace {

// Pulling triangulation of a face given by vertex indices.
void triangulate(const std::vector<RatVector>& verts, const std::vector<std::vector<std::size_t>>& tight,
                 const std::vector<std::size_t>& face, Index face_dim,
                 std::vector<std::vector<std::size_t>>& out) {
  if (face_dim == 0) {
    out.push_back({face.front()});
    return;
  }
  const std::size_t apex = face.front();
  std::vector<std::vector<std::size_t>> subfaces;
  for (const auto& t : tight) {
    std::vector<std::size_t> sub;
    std::set_intersection(face.begin(), face.end(), t.begin(), t.end(), std::back_inserter(sub));
    if (sub.empty() || std::find(sub.begin(), sub.end(), apex) != sub.end()) continue;
    if (std::find(subfaces.begin(), subfaces.end(), sub) != subfaces.end()) continue;
    std::vector<RatVector> pts;
    for (std::size_t i : sub) pts.push_back(verts[i]);
    if (affine_rank(pts) != face_dim - 1) continue;
    subfaces.push_back(sub);
  }
  for (const auto& sub : subfaces) {
    std::vector<std::vector<std::size_t>> simplices;
    triangulate(verts, tight, sub, face_dim - 1, simplices);
    for (auto& s : simplices) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

Rational volume(const HPolytope& h) {
  const auto& verts = h.vertices();
  const Index d = h.dim();
  std::vector<std::vector<std::size_t>> tight;
  for (Index j = 0; j < h.num_rows(); ++j) {
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if (dot(h.normal(j), verts[i]) == Rational(h.rhs(j))) t.push_back(i);
    }
    tight.push_back(std::move(t));
  }
  std::vector<std::size_t> all(verts.size());
  std::iota(all.begin(), all.end(), 0);
  std::vector<std::vector<std::size_t>> simplices;
  triangulate(verts, tight, all, d, simplices);
  Rational total = 0;
  Integer fact = 1;
  for (Index i = 2; i <= d; ++i) fact *= i;
  for (const auto& s : simplices) {
    RatMatrix m(d, d);
    for (Index i = 0; i < d; ++i) m.row(i) = (verts[s[static_cast<std::size_t>(i + 1)]] - verts[s[0]]).transpose();
    Rational det = determinant(m);
    total += det < 0 ? Rational(-det) : det;
  }
  return total / Rational(fact);
}

json rational_vector_json(const RatVector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

namespace {

PolytopeFile parse_polytope(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "polytope file must be a JSON object");
  std::string name = "unnamed";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorCode::ParseError, "\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  const bool has_h = j.contains("hrep");
  const bool has_v = j.contains("vrep");
  if (has_h == has_v) throw Error(ErrorCode::ParseError, "exactly one of \"hrep\" and \"vrep\" is required");
  if (has_h) {
    const json& rows = j["hrep"].value("rows", json());
    if (!rows.is_array()) throw Error(ErrorCode::ParseError, "\"hrep.rows\" must be an array");
    std::vector<std::vector<std::int64_t>> parsed;
    for (const json& row : rows) {
      if (!row.is_array()) throw Error(ErrorCode::ParseError, "each row must be an array");
      std::vector<std::int64_t> r;
      for (const json& x : row) {
        if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, "row entries must be integers");
        r.push_back(x.get<std::int64_t>());
      }
      parsed.push_back(std::move(r));
    }
    return {name, HPolytope::from_rows(parsed)};
  }
  const json& verts = j["vrep"].value("vertices", json());
  if (!verts.is_array() || verts.empty()) throw Error(ErrorCode::ParseError, "\"vrep.vertices\" must be a nonempty array");
  VPolytope v;
  for (const json& p : verts) {
    if (!p.is_array()) throw Error(ErrorCode::ParseError, "each vertex must be an array");
    RatVector x(static_cast<Index>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].is_string()) {
        x(static_cast<Index>(i)) = parse_rational(p[i].get<std::string>());
      } else if (p[i].is_number_integer()) {
        x(static_cast<Index>(i)) = Rational(p[i].get<std::int64_t>());
      } else {
        throw Error(ErrorCode::ParseError, "vertex coordinates must be integers or \"p/q\" strings");
      }
    }
    v.vertices.push_back(x);
  }
  v.dim = v.vertices.front().size();
  return {name, from_vrep(v)};
}

}  // namespace

PolytopeFile polytope_from_json(const json& j) {
  try {
    return parse_polytope(j);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

PolytopeFile load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return polytope_from_json(j);
}

}  // namespace ehrkit
