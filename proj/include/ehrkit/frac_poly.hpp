#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ehrkit/json.hpp"
#include "ehrkit/rational.hpp"

namespace ehrkit {

// Laurent polynomial in t with exponents in (1/D)Z and Rational coefficients.
// Terms are keyed by the integer numerator e of the exponent e/D. D is kept
// minimal: the least common denominator of the exponents present.
class FracPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  FracPoly() = default;
  explicit FracPoly(const Rational& c);
  FracPoly(std::int64_t denominator, Terms terms);

  static FracPoly monomial(const Rational& coeff, const Rational& exponent);
  // 1 + t^step + t^(2 step) + ... + t^((count-1) step)
  static FracPoly geometric(const Rational& step, std::int64_t count);
  // 1 - t^exponent
  static FracPoly one_minus(const Rational& exponent);
  static FracPoly from_items(const std::vector<std::pair<Rational, Rational>>& items);

  bool is_zero() const { return terms_.empty(); }
  std::int64_t exponent_denominator() const { return den_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  // Largest / smallest exponent. Throw InvalidArgument on the zero polynomial.
  Rational degree() const;
  Rational order() const;

  Rational coefficient(const Rational& exponent) const;
  // (exponent, coefficient) pairs in ascending exponent order.
  std::vector<std::pair<Rational, Rational>> items() const;

  bool has_integer_coefficients() const;
  bool is_nonnegative() const;
  bool has_integer_exponents() const { return den_ == 1; }

  FracPoly operator-() const;
  FracPoly& operator+=(const FracPoly& o);
  FracPoly& operator-=(const FracPoly& o);
  FracPoly& operator*=(const FracPoly& o);
  FracPoly& operator*=(const Rational& c);

  friend FracPoly operator+(FracPoly a, const FracPoly& b) { return a += b; }
  friend FracPoly operator-(FracPoly a, const FracPoly& b) { return a -= b; }
  friend FracPoly operator*(const FracPoly& a, const FracPoly& b);
  friend FracPoly operator*(FracPoly a, const Rational& c) { return a *= c; }
  friend FracPoly operator*(const Rational& c, FracPoly a) { return a *= c; }
  friend bool operator==(const FracPoly& a, const FracPoly& b) {
    return a.den_ == b.den_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const FracPoly& a, const FracPoly& b) { return !(a == b); }

  FracPoly pow(unsigned n) const;
  // t^c * p
  FracPoly shift(const Rational& c) const;
  // t^total * p(1/t)
  FracPoly reflect(const Rational& total) const;
  // p(t^s) for s > 0
  FracPoly substitute_power(const Rational& s) const;
  // Terms with exponent <= upto.
  FracPoly truncate(const Rational& upto) const;
  // Terms with exponent in the window [lo, hi].
  FracPoly window(const Rational& lo, const Rational& hi) const;

 private:
  FracPoly with_denominator(std::int64_t d) const;
  void canonicalize();

  std::int64_t den_ = 1;
  Terms terms_;
};

// Exact quotient p / q. Throws NotDivisible when q does not divide p.
FracPoly divide_exact(const FracPoly& p, const FracPoly& q);

// Terms with integer exponent.
FracPoly op_int(const FracPoly& p);
// Terms with exponent in (1/k)Z.
FracPoly op_rat_k(const FracPoly& p, std::int64_t k);
// t^e -> t^ceil(e)
FracPoly op_psi(const FracPoly& p);
// t^e -> t^(ceil(k e)/k)
FracPoly op_psi_k(const FracPoly& p, std::int64_t k);

// t^total * p(1/t) == p(t)
bool is_palindromic(const FracPoly& p, const Rational& total);

// Text form in ascending exponent order, e.g. "1 + t^(1/2) + t".
std::string to_string(const FracPoly& p);
json to_json(const FracPoly& p);
FracPoly frac_poly_from_json(const json& j);

}  // namespace ehrkit
