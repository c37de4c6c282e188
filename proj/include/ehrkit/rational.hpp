#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace ehrkit {

// Expression templates are disabled so values behave like plain scalars inside
// Eigen containers and with `auto`.
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

// Throws InvalidArgument if the value does not fit.
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64(const Rational& q);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

// Overflow-checked int64 arithmetic.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// floor(a / b) and ceil(a / b) for b != 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "p/q", with optional sign and surrounding whitespace.
Rational parse_rational(std::string_view text);

}  // namespace ehrkit
