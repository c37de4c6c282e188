#include "ehrkit/lattice_count.hpp"

#include <algorithm>
#include <cerrno>
#include <cstdlib>

#include "ehrkit/error.hpp"

namespace ehrkit {

namespace {

using i128 = __int128;

struct Box {
  IntVector lo;
  IntVector hi;
};

// Integer box around the given rational points.
Box bounding_box(const std::vector<RatVector>& pts, Index d) {
  Box box{IntVector(d), IntVector(d)};
  for (Index i = 0; i < d; ++i) {
    Rational lo = pts.front()(i);
    Rational hi = pts.front()(i);
    for (const RatVector& p : pts) {
      lo = std::min(lo, p(i));
      hi = std::max(hi, p(i));
    }
    box.lo(i) = to_int64(ceil(lo));
    box.hi(i) = to_int64(floor(hi));
  }
  return box;
}

// Number of points in the box, or -1 if it is empty.
std::int64_t box_size(const Box& box, std::int64_t budget) {
  std::int64_t total = 1;
  for (Index i = 0; i < box.lo.size(); ++i) {
    const std::int64_t w = box.hi(i) - box.lo(i) + 1;
    if (w <= 0) return -1;
    if (total > budget / w + 1) {
      throw Error(ErrorCode::BudgetExceeded, "enumeration box exceeds the budget of " + std::to_string(budget) + " points");
    }
    total *= w;
  }
  if (total > budget) {
    throw Error(ErrorCode::BudgetExceeded, "enumeration box has " + std::to_string(total) +
                                               " points, budget is " + std::to_string(budget));
  }
  return total;
}

template <class F>
void for_each_point(const Box& box, F&& f) {
  const Index d = box.lo.size();
  IntVector x = box.lo;
  while (true) {
    f(static_cast<const IntVector&>(x));
    Index i = 0;
    while (i < d) {
      if (x(i) < box.hi(i)) {
        ++x(i);
        break;
      }
      x(i) = box.lo(i);
      ++i;
    }
    if (i == d) return;
  }
}

i128 row_dot(const HPolytope& h, Index j, const IntVector& x) {
  i128 s = 0;
  for (Index i = 0; i < h.dim(); ++i) s += static_cast<i128>(h.normals()(j, i)) * x(i);
  return s;
}

std::int64_t count_at(const HPolytope& h, const Rational& lambda, Region region, const CountOptions& opts) {
  if (lambda < 0) throw Error(ErrorCode::NonPositiveDilate, "negative dilate " + to_string(lambda));
  if (region == Region::BoundaryNonzero) {
    if (!h.contains_origin()) throw Error(ErrorCode::OriginNotInPolytope, "boundary counts require 0 in P");
    if (lambda == 0) throw Error(ErrorCode::NonPositiveDilate, "boundary counts require a positive dilate");
  }
  if (lambda == 0) return region == Region::Closed ? 1 : 0;

  std::vector<RatVector> scaled;
  for (const RatVector& v : h.vertices()) scaled.push_back(v * lambda);
  const Box box = bounding_box(scaled, h.dim());
  if (box_size(box, opts.budget) < 0) return 0;

  const i128 p = to_int64(num(lambda));
  const i128 q = to_int64(den(lambda));
  std::int64_t total = 0;
  for_each_point(box, [&](const IntVector& x) {
    bool inside = true;
    bool on_facet = false;
    for (Index j = 0; j < h.num_rows() && inside; ++j) {
      const i128 lhs = q * row_dot(h, j, x);
      const i128 rhs = p * h.rhs(j);
      if (region == Region::Open) {
        inside = lhs < rhs;
      } else {
        inside = lhs <= rhs;
        if (lhs == rhs && h.rhs(j) != 0) on_facet = true;
      }
    }
    if (inside && (region != Region::BoundaryNonzero || on_facet)) ++total;
  });
  return total;
}

}  // namespace

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Closed: return "closed";
    case Region::Open: return "open";
    case Region::BoundaryNonzero: return "boundary";
  }
  return "unknown";
}

Region parse_region(std::string_view text) {
  if (text == "closed") return Region::Closed;
  if (text == "open") return Region::Open;
  if (text == "boundary") return Region::BoundaryNonzero;
  throw Error(ErrorCode::InvalidArgument, "unknown region '" + std::string(text) + "'");
}

std::int64_t default_budget() {
  const char* env = std::getenv("EHRKIT_BUDGET");
  if (env == nullptr || *env == '\0') return 10'000'000;
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(env, &end, 10);
  if (errno != 0 || *end != '\0' || v <= 0) {
    throw Error(ErrorCode::InvalidArgument, std::string("EHRKIT_BUDGET must be a positive integer, got '") + env + "'");
  }
  return v;
}

std::int64_t count_closed(const HPolytope& h, const Rational& lambda, const CountOptions& opts) {
  return count_at(h, lambda, Region::Closed, opts);
}

std::int64_t count_open(const HPolytope& h, const Rational& lambda, const CountOptions& opts) {
  return count_at(h, lambda, Region::Open, opts);
}

std::int64_t count_boundary_nonzero(const HPolytope& h, const Rational& lambda, const CountOptions& opts) {
  return count_at(h, lambda, Region::BoundaryNonzero, opts);
}

std::int64_t count(const HPolytope& h, const Rational& lambda, Region region, const CountOptions& opts) {
  return count_at(h, lambda, region, opts);
}

std::vector<std::int64_t> oracle_quasi_samples(const HPolytope& h, const Rational& step, std::int64_t count,
                                               const CountOptions& opts) {
  if (step <= 0) throw Error(ErrorCode::InvalidArgument, "sample step must be positive");
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i < count; ++i) out.push_back(count_closed(h, step * i, opts));
  return out;
}

std::vector<std::int64_t> sample_counts(const HPolytope& h, std::int64_t gamma, std::int64_t n_max, Region region,
                                        const CountOptions& opts) {
  if (gamma < 1) throw Error(ErrorCode::InvalidArgument, "gamma must be positive");
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "sample range must be nonnegative");
  if (region == Region::BoundaryNonzero && !h.contains_origin()) {
    throw Error(ErrorCode::OriginNotInPolytope, "boundary counts require 0 in P");
  }
  const Index d = h.dim();
  std::vector<RatVector> pts{RatVector::Zero(d)};
  const Rational lmax(n_max, gamma);
  for (const RatVector& v : h.vertices()) pts.push_back(v * lmax);
  const Box box = bounding_box(pts, d);
  box_size(box, opts.budget);

  // Each lattice point lies in (n/gamma) P for an interval of n; accumulate
  // the intervals in a difference array.
  std::vector<std::int64_t> diff(static_cast<std::size_t>(n_max) + 2, 0);
  std::vector<std::int64_t> hits;
  for_each_point(box, [&](const IntVector& x) {
    i128 lo = 0;
    i128 hi = n_max;
    for (Index j = 0; j < h.num_rows() && lo <= hi; ++j) {
      const i128 s = static_cast<i128>(gamma) * row_dot(h, j, x);
      const i128 b = h.rhs(j);
      if (b == 0) {
        if (region == Region::Open ? s >= 0 : s > 0) lo = hi + 1;
        continue;
      }
      // b > 0: need n b >= s (or >), b < 0: need n b >= s with the sign flipped.
      const std::int64_t s64 = static_cast<std::int64_t>(s);
      if (b > 0) {
        const i128 bound = region == Region::Open ? floor_div(s64, h.rhs(j)) + 1 : ceil_div(s64, h.rhs(j));
        lo = std::max(lo, bound);
      } else {
        const i128 bound = region == Region::Open ? ceil_div(s64, h.rhs(j)) - 1 : floor_div(s64, h.rhs(j));
        hi = std::min(hi, bound);
      }
    }
    if (lo > hi) return;
    if (region != Region::BoundaryNonzero) {
      ++diff[static_cast<std::size_t>(lo)];
      --diff[static_cast<std::size_t>(hi) + 1];
      return;
    }
    hits.clear();
    for (Index j = 0; j < h.num_rows(); ++j) {
      if (h.rhs(j) == 0) continue;
      const std::int64_t s = static_cast<std::int64_t>(static_cast<i128>(gamma) * row_dot(h, j, x));
      if (s % h.rhs(j) != 0) continue;
      const std::int64_t n = s / h.rhs(j);
      if (n >= 1 && n >= lo && n <= hi) hits.push_back(n);
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    for (std::int64_t n : hits) {
      ++diff[static_cast<std::size_t>(n)];
      --diff[static_cast<std::size_t>(n) + 1];
    }
  });
  std::vector<std::int64_t> out(static_cast<std::size_t>(n_max) + 1);
  std::int64_t run = 0;
  for (std::size_t n = 0; n < out.size(); ++n) {
    run += diff[n];
    out[n] = run;
  }
  return out;
}

std::vector<IntVector> interior_lattice_points(const HPolytope& h, const CountOptions& opts) {
  const Box box = bounding_box(h.vertices(), h.dim());
  std::vector<IntVector> out;
  if (box_size(box, opts.budget) < 0) return out;
  for_each_point(box, [&](const IntVector& x) {
    for (Index j = 0; j < h.num_rows(); ++j) {
      if (row_dot(h, j, x) >= h.rhs(j)) return;
    }
    out.push_back(x);
  });
  std::sort(out.begin(), out.end(), [](const IntVector& a, const IntVector& b) { return lex_less(a, b); });
  return out;
}

}  // namespace ehrkit
