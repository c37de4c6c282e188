#include <gtest/gtest.h>

#include "ehrkit/error.hpp"
#include "oracle.hpp"

using namespace ehrkit;
using ehrkit::testing::poly;

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

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_EQ(code_of([] { parse_rational("1/0"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rational("x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_rational(""); }), ErrorCode::ParseError);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
  EXPECT_EQ(ceil(Rational(-1, 2)), 0);
  EXPECT_EQ(floor(Rational(7, 3)), 2);
  EXPECT_EQ(ceil(Rational(7, 3)), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(lcm64(4, 6), 12);
  EXPECT_THROW(checked_mul(INT64_MAX, 2), Error);
}

TEST(FracPoly, CanonicalForm) {
  const FracPoly p = poly({{"1/2", 1}, {"0", 1}, {"2/4", 1}, {"1", 0}});
  EXPECT_EQ(p.exponent_denominator(), 2);
  EXPECT_EQ(p.coefficient(Rational(1, 2)), 2);
  EXPECT_EQ(p.size(), 2u);
  // adding the negation drops every term and resets the grid
  const FracPoly z = p + (-p);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.exponent_denominator(), 1);
}

TEST(FracPoly, Multiplication) {
  // (1 + t^(1/2))(1 + t^(3/4))
  const FracPoly a = poly({{"0", 1}, {"1/2", 1}});
  const FracPoly b = poly({{"0", 1}, {"3/4", 1}});
  EXPECT_EQ(a * b, poly({{"0", 1}, {"1/2", 1}, {"3/4", 1}, {"5/4", 1}}));
  EXPECT_EQ(FracPoly::one_minus(Rational(1, 3)).pow(3).coefficient(Rational(2, 3)), 3);
}

TEST(FracPoly, ExactDivision) {
  const FracPoly num = poly({{"0", 1}, {"5/3", 1}}) * FracPoly::one_minus(Rational(1, 3));
  EXPECT_EQ(divide_exact(num, FracPoly::one_minus(Rational(1, 3))), poly({{"0", 1}, {"5/3", 1}}));
  EXPECT_EQ(divide_exact(FracPoly::one_minus(3), FracPoly::one_minus(1)), FracPoly::geometric(1, 3));
  EXPECT_EQ(code_of([] { divide_exact(poly({{"0", 1}, {"1", 1}}), FracPoly::one_minus(1)); }),
            ErrorCode::NotDivisible);
}

TEST(FracPoly, Operators) {
  const FracPoly zh = poly({{"0", 1}, {"1/2", 1}, {"1", 1}});
  EXPECT_EQ(op_int(zh), poly({{"0", 1}, {"1", 1}}));
  // Int of the six-fold P1 numerator keeps the integral exponents only
  const FracPoly p1 = poly({{"0", 1}, {"1/2", 1}, {"1", 2}, {"3/2", 3}, {"2", 4}, {"5/2", 4}, {"3", 4},
                            {"7/2", 4}, {"4", 3}, {"9/2", 2}, {"5", 1}, {"11/2", 1}});
  EXPECT_EQ(op_int(p1), poly({{"0", 1}, {"1", 2}, {"2", 4}, {"3", 4}, {"4", 3}, {"5", 1}}));
  // Psi rounds exponents up: 1 + 2t^(1/2) + t -> 1 + 3t
  EXPECT_EQ(op_psi(poly({{"0", 1}, {"1/2", 2}, {"1", 1}})), poly({{"0", 1}, {"1", 3}}));
  EXPECT_EQ(op_rat_k(poly({{"0", 1}, {"1/6", 1}, {"1/3", 2}}), 3), poly({{"0", 1}, {"1/3", 2}}));
  EXPECT_EQ(op_psi_k(poly({{"1/6", 1}, {"1/3", 2}}), 3), poly({{"1/3", 3}}));
}

TEST(FracPoly, Palindromy) {
  EXPECT_TRUE(is_palindromic(poly({{"0", 1}, {"1/2", 1}, {"1", 1}}), 1));
  EXPECT_TRUE(is_palindromic(poly({{"0", 1}, {"1/4", 1}, {"3/8", 1}, {"5/8", 1}}), Rational(5, 8)));
  EXPECT_FALSE(is_palindromic(poly({{"0", 1}, {"1", 2}}), 1));
  EXPECT_TRUE(is_palindromic(FracPoly(), 3));
}

TEST(FracPoly, Transforms) {
  const FracPoly p = poly({{"0", 1}, {"1/2", 3}});
  EXPECT_EQ(p.reflect(2), poly({{"2", 1}, {"3/2", 3}}));
  EXPECT_EQ(p.shift(Rational(-1, 2)), poly({{"-1/2", 1}, {"0", 3}}));
  EXPECT_EQ(p.substitute_power(2), poly({{"0", 1}, {"1", 3}}));
  EXPECT_EQ(p.truncate(Rational(1, 4)), poly({{"0", 1}}));
  EXPECT_EQ(p.degree(), Rational(1, 2));
  EXPECT_EQ(p.order(), 0);
  EXPECT_THROW(FracPoly().degree(), Error);
}

TEST(FracPoly, TextAndJson) {
  EXPECT_EQ(to_string(poly({{"0", 1}, {"1/2", 1}, {"1", 1}})), "1 + t^(1/2) + t");
  EXPECT_EQ(to_string(FracPoly::one_minus(1)), "1 - t");
  EXPECT_EQ(to_string(FracPoly()), "0");
  const FracPoly p = poly({{"0", 1}, {"3/2", -2}});
  const json j = to_json(p);
  EXPECT_EQ(j.dump(), R"({"0":"1","3/2":"-2"})");
  EXPECT_EQ(frac_poly_from_json(j), p);
  EXPECT_EQ(code_of([] { frac_poly_from_json(json::parse(R"({"a":"1"})")); }), ErrorCode::ParseError);
}

TEST(SeriesForm, ExpandsStructuredPole) {
  // (1 + t^(1/2) + t^(3/4) + t^(5/4))/(1 - t)^2 up to 1: counts of [1/4, 1/2] dilates
  const RationalSeriesForm s{poly({{"0", 1}, {"1/2", 1}, {"3/4", 1}, {"5/4", 1}}), 1, 2};
  const auto e = series_expand(s, 1);
  const std::map<Rational, Rational> want{{0, 1}, {Rational(1, 2), 1}, {Rational(3, 4), 1}, {1, 2}};
  EXPECT_EQ(e, want);
}

TEST(SeriesForm, FactoredAndStructuredAgree) {
  const RationalSeriesForm s{poly({{"0", 1}, {"1/2", 1}, {"1", 1}}), Rational(3, 2), 2};
  const FactoredSeries f{poly({{"0", 1}}), {Rational(1, 2), Rational(3, 2)}};
  EXPECT_EQ(series_expand(s, 20), series_expand(f, 20));
  EXPECT_EQ(series_expand(as_factored(s), 20), series_expand(s, 20));
  EXPECT_EQ(to_string(s), "(1 + t^(1/2) + t)/((1 - t^(3/2))^2)");
  EXPECT_EQ(to_string(f), "1/((1 - t^(1/2))(1 - t^(3/2)))");
}

TEST(LinAlg, RankNullspaceDeterminant) {
  RatMatrix a(2, 3);
  a << 1, 2, 3, 2, 4, 6;
  EXPECT_EQ(rank(a), 1);
  const RatMatrix ns = nullspace(a);
  EXPECT_EQ(ns.cols(), 2);
  EXPECT_TRUE((a * ns).isZero());
  RatMatrix m(3, 3);
  m << 2, 0, 1, 1, 3, 2, 1, 1, 2;
  EXPECT_EQ(determinant(m), Rational(6));
  RatVector b(3);
  b << 1, 2, 3;
  const auto x = solve_unique(m, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(RatVector(m * *x), b);
}
