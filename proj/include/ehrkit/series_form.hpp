#pragma once

#include <map>
#include <string>
#include <vector>

#include "ehrkit/frac_poly.hpp"

namespace ehrkit {

// numerator / (1 - t^pole_exponent)^pole_order
struct RationalSeriesForm {
  FracPoly numerator;
  Rational pole_exponent;
  int pole_order = 1;
};

// numerator / prod_i (1 - t^denominator_exponents[i]), exponents ascending.
struct FactoredSeries {
  FracPoly numerator;
  std::vector<Rational> denominator_exponents;
};

// Nonzero coefficients of the expansion up to and including `upto`.
std::map<Rational, Rational> series_expand(const RationalSeriesForm& s, const Rational& upto);
std::map<Rational, Rational> series_expand(const FactoredSeries& s, const Rational& upto);

FactoredSeries as_factored(const RationalSeriesForm& s);

// Renders e.g. "(1 + t^(5/3))/((1 - t^(1/3))^2(1 - t^3))".
std::string to_string(const RationalSeriesForm& s);
std::string to_string(const FactoredSeries& s);

json to_json(const RationalSeriesForm& s);
json to_json(const FactoredSeries& s);

}  // namespace ehrkit
