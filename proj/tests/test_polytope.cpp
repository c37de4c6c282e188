#include <gtest/gtest.h>

#include "ehrkit/error.hpp"
#include "oracle.hpp"

using namespace ehrkit;
using ehrkit::testing::corpus_polytope;
using ehrkit::testing::vpoly;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an ehrkit::Error";
  return ErrorCode::Inconsistent;
}

using Rows = std::vector<std::vector<std::int64_t>>;

}  // namespace

TEST(Polytope, IntervalFromVertices) {
  const HPolytope h = vpoly({{"1"}, {"2"}});
  EXPECT_EQ(h.rows(), (Rows{{-1, -1}, {1, 2}}));
  EXPECT_TRUE(h.is_lattice());
  EXPECT_EQ(h.origin_position(), OriginPosition::Exterior);
}

TEST(Polytope, VerticesOfP1) {
  const HPolytope h = HPolytope::from_rows({{-1, 1}, {3, 2}});
  ASSERT_EQ(h.vertices().size(), 2u);
  EXPECT_EQ(h.vertices()[0](0), Rational(-1));
  EXPECT_EQ(h.vertices()[1](0), Rational(2, 3));
  EXPECT_EQ(codenominator(h), 2);
  EXPECT_EQ(denominator(h), 3);
}

TEST(Polytope, CodenominatorAndDenominator) {
  EXPECT_EQ(codenominator(corpus_polytope("p4")), 4);
  EXPECT_EQ(denominator(corpus_polytope("p4")), 1);
  EXPECT_EQ(denominator(scale(corpus_polytope("p3"), Rational(1, 4))), 4);
  EXPECT_EQ(codenominator(corpus_polytope("pyramid_p5")), 1);
  EXPECT_EQ(denominator(corpus_polytope("pyramid_p5")), 4);
  EXPECT_EQ(codenominator(corpus_polytope("delta_p3")), 3);
  EXPECT_EQ(denominator(corpus_polytope("delta_p3")), 3);
}

TEST(Polytope, MinimalScale) {
  EXPECT_EQ(minimal_m(corpus_polytope("p2"), 2), 3);
  EXPECT_EQ(minimal_m(corpus_polytope("p1"), 2), 6);
  EXPECT_EQ(minimal_m(corpus_polytope("p3"), 4), 4);
  EXPECT_EQ(minimal_m(corpus_polytope("p4"), 8), 4);
}

TEST(Polytope, RedundantAndDuplicateRowsRemoved) {
  const HPolytope h = HPolytope::from_rows({{-2, 0}, {1, 1}, {2, 2}, {3, 10}});
  EXPECT_EQ(h.rows(), (Rows{{-1, 0}, {1, 1}}));
  // input rows were rewritten
  EXPECT_TRUE(h.normalized());
  EXPECT_FALSE(corpus_polytope("p3").normalized());
  const HPolytope square = HPolytope::from_rows({{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}, {1, 1, 5}});
  EXPECT_EQ(square.num_rows(), 4);
}

TEST(Polytope, RoundTripThroughVertices) {
  for (const char* stem : {"delta_p3", "pyramid_p5", "nabla", "third_triangle", "cross_polytope"}) {
    const HPolytope h = corpus_polytope(stem);
    EXPECT_EQ(from_vrep(vertex_enumeration(h)), h) << stem;
  }
}

TEST(Polytope, InvalidInputs) {
  EXPECT_EQ(code_of([] { HPolytope::from_rows({{1, 0, 1}}); }), ErrorCode::Unbounded);
  EXPECT_EQ(code_of([] { HPolytope::from_rows({{1, 0, 1}, {-1, 0, 1}, {0, 1, 0}, {0, -1, 0}}); }),
            ErrorCode::NotFullDimensional);
  EXPECT_EQ(code_of([] { HPolytope::from_rows({{1, -1}, {-1, -1}}); }), ErrorCode::NotFullDimensional);
  EXPECT_EQ(code_of([] { vpoly({{"0", "0"}, {"1", "1"}, {"2", "2"}}); }), ErrorCode::NotFullDimensional);
  EXPECT_EQ(code_of([] { polytope_from_json(json::parse(R"({"hrep": {"rows": [[1, 0.5]]}})")); }),
            ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { polytope_from_json(json::parse(R"({"name": "x"})")); }), ErrorCode::ParseError);
}

TEST(Polytope, DilateAndTranslate) {
  const HPolytope p2 = corpus_polytope("p2");
  const DilatedHPolytope d = dilate(p2, Rational(3, 2));
  ASSERT_EQ(d.rhs.size(), 2);
  EXPECT_EQ(code_of([&] { dilate(p2, 0); }), ErrorCode::NonPositiveDilate);
  IntVector v(1);
  v << 2;
  const HPolytope moved = translate(corpus_polytope("p3"), v);
  EXPECT_EQ(moved.rows(), (Rows{{-1, -3}, {1, 4}}));
}

TEST(Polytope, HomogenizationNormals) {
  // hom((1/4)[1,2]): normals primitive(-1, 4) and primitive(2, -4)
  const ConeHRep c = homogenize(corpus_polytope("p3"), 4);
  ASSERT_EQ(c.facet_normals.size(), 2u);
  IntVector a(2), b(2);
  a << -1, 4;
  b << 1, -2;
  EXPECT_EQ(c.facet_normals[0], a);
  EXPECT_EQ(c.facet_normals[1], b);
}

TEST(Polytope, PolarDualAndReflexive) {
  const PolarDual pd = polar_dual(corpus_polytope("p1"));
  ASSERT_EQ(pd.vertices.size(), 2u);
  EXPECT_EQ(pd.q, 2);
  EXPECT_EQ(code_of([] { polar_dual(corpus_polytope("haasenlieblingsdreieck")); }), ErrorCode::OriginNotInterior);
  EXPECT_EQ(is_l_reflexive(corpus_polytope("cross_polytope")), 1);
  EXPECT_FALSE(is_l_reflexive(corpus_polytope("p3")).has_value());
}

TEST(Polytope, Volume) {
  EXPECT_EQ(volume(corpus_polytope("p1")), Rational(5, 3));
  EXPECT_EQ(volume(corpus_polytope("nabla")), Rational(3, 2));
  EXPECT_EQ(volume(corpus_polytope("pyramid_p5")), Rational(1, 24));
  EXPECT_EQ(volume(corpus_polytope("cross_polytope")), 2);
}

TEST(Polytope, Primitive) {
  IntVector v(3);
  v << -4, 6, 0;
  IntVector w(3);
  w << -2, 3, 0;
  EXPECT_EQ(primitive(v), w);
}
