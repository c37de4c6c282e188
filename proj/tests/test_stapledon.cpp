#include <gtest/gtest.h>

#include "ehrkit/error.hpp"
#include "oracle.hpp"

using namespace ehrkit;
using ehrkit::testing::corpus_polytope;
using ehrkit::testing::poly;

TEST(HTilde, Haasenlieblingsdreieck) {
  const HPolytope h = corpus_polytope("haasenlieblingsdreieck");
  const BoundaryData bd = build_htilde(h);
  EXPECT_EQ(bd.r, 2);
  EXPECT_EQ(bd.k, 1);
  EXPECT_EQ(bd.htilde, poly({{"0", 1}, {"1/2", 2}, {"1", 1}}));
  EXPECT_EQ(htilde_from_boundary_counts(h), bd.htilde);
  EXPECT_EQ(build_htilde(h, 4).htilde, bd.htilde);
  // Zh*_2 = (1 + t^(1/2)) h~
  const FracPoly zh = build_series(h, make_kind(h, SeriesTag::ZRational, 2)).numerator;
  EXPECT_EQ(grid_sum(2) * bd.htilde, zh);
  EXPECT_EQ(op_psi(bd.htilde), poly({{"0", 1}, {"1", 3}}));
}

TEST(HTilde, OriginInteriorIsPalindromic) {
  const HPolytope h = corpus_polytope("cross_polytope");
  EXPECT_TRUE(check_palindromic_htilde(h));
  EXPECT_EQ(build_htilde(h).htilde, poly({{"0", 1}, {"1", 2}, {"2", 1}}));
}

TEST(HTilde, Preconditions) {
  auto code = [](const std::function<void()>& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Inconsistent;
  };
  EXPECT_EQ(code([] { build_htilde(corpus_polytope("p3")); }), ErrorCode::OriginNotInPolytope);
  EXPECT_EQ(code([] { build_htilde(corpus_polytope("p2")); }), ErrorCode::NotLattice);
  EXPECT_EQ(code([] { build_htilde(corpus_polytope("haasenlieblingsdreieck"), 3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code([] { check_palindromic_htilde(corpus_polytope("haasenlieblingsdreieck")); }),
            ErrorCode::OriginNotInterior);
}

TEST(HTilde, CorrectionFactor) {
  EXPECT_TRUE(verify_correction_factor(2, 1, 2));
  EXPECT_TRUE(verify_correction_factor(6, 3, 1));
  EXPECT_THROW(verify_correction_factor(3, 2, 1), Error);
  EXPECT_EQ(grid_sum(3), poly({{"0", 1}, {"1/3", 1}, {"2/3", 1}}));
}

TEST(HTilde, NablaMatchesBoundaryCounts) {
  const HPolytope h = corpus_polytope("nabla");
  const BoundaryData bd = build_htilde(h);
  EXPECT_EQ(bd.htilde, htilde_from_boundary_counts(h));
  EXPECT_EQ(op_psi(bd.htilde), classical_hstar(h).series.numerator);
}
