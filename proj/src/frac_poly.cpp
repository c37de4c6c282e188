#include "ehrkit/frac_poly.hpp"

#include <sstream>

#include "ehrkit/error.hpp"

namespace ehrkit {

namespace {

// Exponent e/D as an exact rational.
Rational exponent_of(std::int64_t e, std::int64_t d) { return Rational(e, d); }

// Numerator of q on the grid (1/d)Z; q must lie on that grid.
std::int64_t on_grid(const Rational& q, std::int64_t d) {
  Rational scaled = q * d;
  if (!is_integer(scaled)) {
    throw Error(ErrorCode::InvalidArgument, "exponent " + to_string(q) + " not on grid 1/" + std::to_string(d));
  }
  return to_int64(scaled);
}

std::int64_t den64(const Rational& q) { return to_int64(den(q)); }

}  // namespace

FracPoly::FracPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

FracPoly::FracPoly(std::int64_t denominator, Terms terms) : den_(denominator), terms_(std::move(terms)) {
  if (den_ <= 0) throw Error(ErrorCode::InvalidArgument, "exponent denominator must be positive");
  canonicalize();
}

FracPoly FracPoly::monomial(const Rational& coeff, const Rational& exponent) {
  Terms t;
  const std::int64_t d = den64(exponent);
  if (coeff != 0) t.emplace(to_int64(num(exponent)), coeff);
  return FracPoly(d, std::move(t));
}

FracPoly FracPoly::geometric(const Rational& step, std::int64_t count) {
  if (count < 0) throw Error(ErrorCode::InvalidArgument, "negative term count");
  const std::int64_t d = den64(step);
  const std::int64_t s = to_int64(num(step));
  Terms t;
  for (std::int64_t i = 0; i < count; ++i) t[checked_mul(i, s)] += 1;
  return FracPoly(d, std::move(t));
}

FracPoly FracPoly::one_minus(const Rational& exponent) {
  return FracPoly(Rational(1)) - monomial(1, exponent);
}

FracPoly FracPoly::from_items(const std::vector<std::pair<Rational, Rational>>& items) {
  std::int64_t d = 1;
  for (const auto& [e, c] : items) d = lcm64(d, den64(e));
  Terms t;
  for (const auto& [e, c] : items) t[on_grid(e, d)] += c;
  return FracPoly(d, std::move(t));
}

void FracPoly::canonicalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  std::int64_t g = den_;
  for (const auto& [e, c] : terms_) g = gcd64(g, e);
  if (terms_.empty()) g = den_;
  if (g > 1) {
    Terms t;
    for (auto& [e, c] : terms_) t.emplace(e / g, std::move(c));
    terms_ = std::move(t);
    den_ /= g;
  }
}

FracPoly FracPoly::with_denominator(std::int64_t d) const {
  // Used only internally: d must be a multiple of den_. The result is not
  // canonical.
  FracPoly out;
  out.den_ = d;
  const std::int64_t f = d / den_;
  for (const auto& [e, c] : terms_) out.terms_.emplace(checked_mul(e, f), c);
  return out;
}

Rational FracPoly::degree() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "degree of the zero polynomial");
  return exponent_of(terms_.rbegin()->first, den_);
}

Rational FracPoly::order() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "order of the zero polynomial");
  return exponent_of(terms_.begin()->first, den_);
}

Rational FracPoly::coefficient(const Rational& exponent) const {
  Rational scaled = exponent * den_;
  if (!is_integer(scaled)) return 0;
  auto it = terms_.find(to_int64(scaled));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<std::pair<Rational, Rational>> FracPoly::items() const {
  std::vector<std::pair<Rational, Rational>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(exponent_of(e, den_), c);
  return out;
}

bool FracPoly::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_) {
    if (!is_integer(c)) return false;
  }
  return true;
}

bool FracPoly::is_nonnegative() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

FracPoly FracPoly::operator-() const {
  FracPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

FracPoly& FracPoly::operator+=(const FracPoly& o) {
  const std::int64_t d = lcm64(den_, o.den_);
  FracPoly a = with_denominator(d);
  FracPoly b = o.with_denominator(d);
  for (auto& [e, c] : b.terms_) a.terms_[e] += c;
  a.canonicalize();
  *this = std::move(a);
  return *this;
}

FracPoly& FracPoly::operator-=(const FracPoly& o) { return *this += -o; }

FracPoly operator*(const FracPoly& a, const FracPoly& b) {
  const std::int64_t d = lcm64(a.den_, b.den_);
  FracPoly x = a.with_denominator(d);
  FracPoly y = b.with_denominator(d);
  FracPoly out;
  out.den_ = d;
  for (const auto& [e1, c1] : x.terms_) {
    for (const auto& [e2, c2] : y.terms_) out.terms_[checked_add(e1, e2)] += c1 * c2;
  }
  out.canonicalize();
  return out;
}

FracPoly& FracPoly::operator*=(const FracPoly& o) {
  *this = *this * o;
  return *this;
}

FracPoly& FracPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    den_ = 1;
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

FracPoly FracPoly::pow(unsigned n) const {
  FracPoly result(Rational(1));
  FracPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

FracPoly FracPoly::shift(const Rational& c) const {
  const std::int64_t d = lcm64(den_, den64(c));
  FracPoly out = with_denominator(d);
  const std::int64_t s = on_grid(c, d);
  Terms t;
  for (auto& [e, v] : out.terms_) t.emplace(checked_add(e, s), std::move(v));
  out.terms_ = std::move(t);
  out.canonicalize();
  return out;
}

FracPoly FracPoly::reflect(const Rational& total) const {
  const std::int64_t d = lcm64(den_, den64(total));
  FracPoly out = with_denominator(d);
  const std::int64_t s = on_grid(total, d);
  Terms t;
  for (auto& [e, v] : out.terms_) t.emplace(checked_add(s, -e), std::move(v));
  out.terms_ = std::move(t);
  out.canonicalize();
  return out;
}

FracPoly FracPoly::substitute_power(const Rational& s) const {
  if (s <= 0) throw Error(ErrorCode::InvalidArgument, "substitution power must be positive");
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [e, c] : items()) out.emplace_back(e * s, c);
  return from_items(out);
}

FracPoly FracPoly::truncate(const Rational& upto) const {
  FracPoly out = *this;
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (exponent_of(it->first, den_) > upto) {
      it = out.terms_.erase(it);
    } else {
      ++it;
    }
  }
  out.canonicalize();
  return out;
}

FracPoly FracPoly::window(const Rational& lo, const Rational& hi) const {
  FracPoly out = truncate(hi);
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    if (exponent_of(it->first, out.den_) < lo) {
      it = out.terms_.erase(it);
    } else {
      ++it;
    }
  }
  out.canonicalize();
  return out;
}

FracPoly divide_exact(const FracPoly& p, const FracPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  if (p.is_zero()) return FracPoly();
  const std::int64_t d = lcm64(p.exponent_denominator(), q.exponent_denominator());
  // Long division from the top on the common grid. An exact quotient has
  // order ord p - ord q, so once the remainder would need a quotient term
  // below that, the division has failed.
  std::map<std::int64_t, Rational> rem;
  for (const auto& [e, c] : p.items()) rem[on_grid(e, d)] = c;
  std::vector<std::pair<std::int64_t, Rational>> divisor;
  for (const auto& [e, c] : q.items()) divisor.emplace_back(on_grid(e, d), c);
  const std::int64_t qdeg = divisor.back().first;
  const Rational& qlead = divisor.back().second;
  const std::int64_t min_quot = on_grid(p.order(), d) - divisor.front().first;
  FracPoly::Terms quot;
  while (!rem.empty()) {
    const std::int64_t rdeg = rem.rbegin()->first;
    const std::int64_t qe = rdeg - qdeg;
    if (qe < min_quot) break;
    const Rational f = rem.rbegin()->second / qlead;
    quot[qe] = f;
    for (const auto& [e, c] : divisor) {
      auto& slot = rem[e + qe];
      slot -= f * c;
      if (slot == 0) rem.erase(e + qe);
    }
  }
  if (!rem.empty()) {
    throw Error(ErrorCode::NotDivisible, to_string(q) + " does not divide " + to_string(p));
  }
  return FracPoly(d, std::move(quot));
}

FracPoly op_rat_k(const FracPoly& p, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "Rat_k requires k >= 1");
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [e, c] : p.items()) {
    if (is_integer(e * k)) out.emplace_back(e, c);
  }
  return FracPoly::from_items(out);
}

FracPoly op_int(const FracPoly& p) { return op_rat_k(p, 1); }

FracPoly op_psi_k(const FracPoly& p, std::int64_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "Psi_k requires k >= 1");
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& [e, c] : p.items()) out.emplace_back(Rational(ceil(e * k), k), c);
  return FracPoly::from_items(out);
}

FracPoly op_psi(const FracPoly& p) { return op_psi_k(p, 1); }

bool is_palindromic(const FracPoly& p, const Rational& total) { return p.reflect(total) == p; }

namespace {

std::string exponent_text(const Rational& e) {
  if (e == 1) return "t";
  if (is_integer(e) && e > 0) return "t^" + to_string(e);
  return "t^(" + to_string(e) + ")";
}

}  // namespace

std::string to_string(const FracPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.items()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) {
      if (is_integer(mag)) {
        os << to_string(mag);
      } else {
        os << "(" << to_string(mag) << ")";
      }
    }
    os << exponent_text(e);
  }
  return os.str();
}

json to_json(const FracPoly& p) {
  json out = json::object();
  for (const auto& [e, c] : p.items()) out[to_string(e)] = to_string(c);
  return out;
}

FracPoly frac_poly_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "polynomial must be a JSON object");
  std::vector<std::pair<Rational, Rational>> items;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw Error(ErrorCode::ParseError, "coefficients must be strings");
    items.emplace_back(parse_rational(key), parse_rational(value.get<std::string>()));
  }
  return FracPoly::from_items(items);
}

}  // namespace ehrkit
