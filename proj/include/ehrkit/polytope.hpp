#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ehrkit/json.hpp"
#include "ehrkit/linalg.hpp"

namespace ehrkit {

enum class OriginPosition { Interior, Boundary, Exterior };

std::string_view to_string(OriginPosition pos);

struct VPolytope {
  Index dim = 0;
  std::vector<RatVector> vertices;
};

// Full-dimensional bounded polytope {x : <a_j, x> <= b_j}. Rows are gcd-reduced
// and irredundant; input order is otherwise preserved. Construction throws
// NotFullDimensional or Unbounded.
class HPolytope {
 public:
  HPolytope(const IntMatrix& normals, const IntVector& rhs);
  // Each row is a_1, ..., a_d, b.
  static HPolytope from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  Index dim() const { return normals_.cols(); }
  Index num_rows() const { return normals_.rows(); }
  const IntMatrix& normals() const { return normals_; }
  const IntVector& rhs() const { return rhs_; }
  IntVector normal(Index j) const { return normals_.row(j).transpose(); }
  std::int64_t rhs(Index j) const { return rhs_(j); }

  // Lexicographically sorted.
  const std::vector<RatVector>& vertices() const { return vertices_; }
  // True if the input rows were changed by reduction, deduplication or
  // redundancy removal.
  bool normalized() const { return normalized_; }

  OriginPosition origin_position() const;
  bool contains_origin() const { return origin_position() != OriginPosition::Exterior; }
  bool is_lattice() const;

  std::vector<std::vector<std::int64_t>> rows() const;

  friend bool operator==(const HPolytope& a, const HPolytope& b) {
    return a.normals_ == b.normals_ && a.rhs_ == b.rhs_;
  }

 private:
  IntMatrix normals_;
  IntVector rhs_;
  std::vector<RatVector> vertices_;
  bool normalized_ = false;
};

HPolytope from_vrep(const VPolytope& v);
VPolytope vertex_enumeration(const HPolytope& h);

// lcm of the nonzero |b_j|.
std::int64_t codenominator(const HPolytope& h);
std::int64_t denominator(const VPolytope& v);
std::int64_t denominator(const HPolytope& h);
// Smallest m with (m / gamma) P a lattice polytope.
std::int64_t minimal_m(const HPolytope& h, std::int64_t gamma);

struct DilatedHPolytope {
  IntMatrix normals;
  RatVector rhs;
};

// Rows (a_j, lambda b_j). Throws NonPositiveDilate for lambda <= 0.
DilatedHPolytope dilate(const HPolytope& h, const Rational& lambda);

// c P for rational c > 0, as a reduced H-description.
HPolytope scale(const HPolytope& h, const Rational& c);
// P + v
HPolytope translate(const HPolytope& h, const IntVector& v);

struct ConeHRep {
  Index ambient_dim = 0;
  // Primitive inward normals w with cone = {z : <w, z> >= 0}.
  std::vector<IntVector> facet_normals;
};

// hom((1/gamma) P) with normals primitive(b_j, -gamma a_j).
ConeHRep homogenize(const HPolytope& h, std::int64_t gamma);

struct PolarDual {
  std::vector<RatVector> vertices;
  // min{q : q P^dual is a lattice polytope}
  std::int64_t q = 1;
};

// Throws OriginNotInterior unless 0 is in the interior.
PolarDual polar_dual(const HPolytope& h);

std::optional<std::int64_t> is_l_reflexive(const HPolytope& h);

Rational volume(const HPolytope& h);

// Vector with entries divided by their gcd (unchanged when zero).
IntVector primitive(const IntVector& v);

// Polytope file: {"name", "hrep": {"rows": [...]}} or {"vrep": {"vertices": [...]}}.
struct PolytopeFile {
  std::string name;
  HPolytope polytope;
};

PolytopeFile polytope_from_json(const json& j);
PolytopeFile load_polytope(const std::string& path);

json rational_vector_json(const RatVector& v);

}  // namespace ehrkit
