#include "ehrkit/series_form.hpp"

#include <sstream>

#include "ehrkit/error.hpp"

namespace ehrkit {

namespace {

// Expansion of 1/prod(1 - t^e_i) up to `upto`, as exponent -> coefficient.
std::map<Rational, Rational> pole_expansion(const std::vector<Rational>& exponents, const Rational& upto) {
  std::map<Rational, Rational> acc{{Rational(0), Rational(1)}};
  for (const Rational& e : exponents) {
    if (e <= 0) throw Error(ErrorCode::InvalidArgument, "pole exponent must be positive");
    std::map<Rational, Rational> next;
    for (const auto& [x, c] : acc) {
      for (Rational y = x; y <= upto; y += e) next[y] += c;
    }
    acc = std::move(next);
  }
  return acc;
}

std::map<Rational, Rational> expand(const FracPoly& numerator, const std::vector<Rational>& exponents,
                                    const Rational& upto) {
  if (upto < 0) throw Error(ErrorCode::InvalidArgument, "expansion bound must be nonnegative");
  std::map<Rational, Rational> out;
  if (numerator.is_zero()) return out;
  const Rational reach = upto - numerator.order();
  if (reach < 0) return out;
  std::map<Rational, Rational> poles = pole_expansion(exponents, reach);
  for (const auto& [e, c] : numerator.items()) {
    for (const auto& [x, v] : poles) {
      if (e + x > upto) break;
      out[e + x] += c * v;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

std::string factor_text(const Rational& e) {
  if (e == 1) return "1 - t";
  if (is_integer(e)) return "1 - t^" + to_string(e);
  return "1 - t^(" + to_string(e) + ")";
}

std::string numerator_text(const FracPoly& p) {
  if (p.size() <= 1 && (p.is_zero() || p.coefficient(p.order()) > 0)) return to_string(p);
  return "(" + to_string(p) + ")";
}

}  // namespace

std::map<Rational, Rational> series_expand(const RationalSeriesForm& s, const Rational& upto) {
  return expand(s.numerator, std::vector<Rational>(static_cast<std::size_t>(s.pole_order), s.pole_exponent), upto);
}

std::map<Rational, Rational> series_expand(const FactoredSeries& s, const Rational& upto) {
  return expand(s.numerator, s.denominator_exponents, upto);
}

FactoredSeries as_factored(const RationalSeriesForm& s) {
  return {s.numerator, std::vector<Rational>(static_cast<std::size_t>(s.pole_order), s.pole_exponent)};
}

std::string to_string(const FactoredSeries& s) {
  std::ostringstream os;
  os << numerator_text(s.numerator) << "/(";
  // Group equal exponents into powers; exponents are sorted.
  std::size_t i = 0;
  while (i < s.denominator_exponents.size()) {
    std::size_t j = i;
    while (j < s.denominator_exponents.size() && s.denominator_exponents[j] == s.denominator_exponents[i]) ++j;
    os << "(" << factor_text(s.denominator_exponents[i]) << ")";
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << ")";
  return os.str();
}

std::string to_string(const RationalSeriesForm& s) { return to_string(as_factored(s)); }

json to_json(const RationalSeriesForm& s) {
  json out;
  out["numerator"] = to_json(s.numerator);
  out["pole_exponent"] = to_string(s.pole_exponent);
  out["pole_order"] = s.pole_order;
  out["text"] = to_string(s);
  return out;
}

json to_json(const FactoredSeries& s) {
  json out;
  out["numerator"] = to_json(s.numerator);
  json dens = json::array();
  for (const Rational& e : s.denominator_exponents) dens.push_back(to_string(e));
  out["denominator_exponents"] = dens;
  out["text"] = to_string(s);
  return out;
}

}  // namespace ehrkit
