#include "ehrkit/rational.hpp"

#include <limits>
#include <numeric>

#include "ehrkit/error.hpp"

namespace ehrkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotFullDimensional: return "NotFullDimensional";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::NotLattice: return "NotLattice";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::OriginNotInPolytope: return "OriginNotInPolytope";
    case ErrorCode::NonPositiveDilate: return "NonPositiveDilate";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NumeratorMismatch: return "NumeratorMismatch";
    case ErrorCode::FitMismatch: return "FitMismatch";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NoInteriorLatticePoint: return "NoInteriorLatticePoint";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

Integer floor(const Rational& q) {
  Integer n = num(q);
  Integer d = den(q);
  Integer quot = n / d;  // truncates toward zero
  if (n < 0 && quot * d != n) quot -= 1;
  return quot;
}

Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

bool is_integer(const Rational& q) { return den(q) == 1; }

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() ||
      z < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::InvalidArgument, "integer " + z.str() + " exceeds 64-bit range");
  }
  return z.convert_to<std::int64_t>();
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw Error(ErrorCode::InvalidArgument, to_string(q) + " is not an integer");
  return to_int64(num(q));
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::InvalidArgument, "64-bit overflow in multiplication");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::InvalidArgument, "64-bit overflow in addition");
  }
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
  Integer value = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw Error(ErrorCode::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (s[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
  Integer p = parse_integer(trim(s.substr(0, slash)), text);
  Integer q = parse_integer(trim(s.substr(slash + 1)), text);
  if (q == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

}  // namespace ehrkit
