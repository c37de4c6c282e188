#pragma once

// Exact dense linear algebra over an ordered field scalar (Rational in
// practice). Plain Gauss-Jordan elimination: no pivoting heuristics, because
// there is no rounding to control.

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "ehrkit/rational.hpp"

namespace ehrkit {

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Index = Eigen::Index;
using IntVector = Vector<std::int64_t>;
using IntMatrix = Matrix<std::int64_t>;
using RatVector = Vector<Rational>;
using RatMatrix = Matrix<Rational>;

// Reduced row echelon form in place; returns pivot columns in order.
template <class Scalar>
std::vector<Index> rref(Matrix<Scalar>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = row;
    while (sel < m.rows() && m(sel, col) == Scalar(0)) ++sel;
    if (sel == m.rows()) continue;
    m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col);
      m.row(r) -= f * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Scalar>
Index rank(Matrix<Scalar> m) {
  return static_cast<Index>(rref(m).size());
}

// Unique solution of A x = b, or nullopt when the system is inconsistent or
// underdetermined. A may be overdetermined.
template <class Scalar>
std::optional<Vector<Scalar>> solve_unique(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  std::vector<Index> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  if (static_cast<Index>(pivots.size()) != a.cols()) return std::nullopt;
  Vector<Scalar> x(a.cols());
  for (Index i = 0; i < a.cols(); ++i) x(i) = aug(i, a.cols());
  return x;
}

// Basis of {x : A x = 0}, one basis vector per column of the result.
template <class Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& a) {
  Matrix<Scalar> m = a;
  std::vector<Index> pivots = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<Scalar> basis(a.cols(), a.cols() - static_cast<Index>(pivots.size()));
  Index out = 0;
  for (Index free = 0; free < a.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Zero(a.cols());
    v(free) = Scalar(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v(pivots[i]) = -m(static_cast<Index>(i), free);
    basis.col(out++) = v;
  }
  return basis;
}

template <class Scalar>
Scalar determinant(Matrix<Scalar> m) {
  Scalar det(1);
  const Index n = m.rows();
  for (Index col = 0; col < n; ++col) {
    Index sel = col;
    while (sel < n && m(sel, col) == Scalar(0)) ++sel;
    if (sel == n) return Scalar(0);
    if (sel != col) {
      m.row(sel).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (m(r, col) == Scalar(0)) continue;
      const Scalar f = m(r, col) / m(col, col);
      m.row(r) -= f * m.row(col);
    }
  }
  return det;
}

// Dimension of the affine hull of a finite point set (-1 for the empty set).
template <class Scalar>
Index affine_rank(const std::vector<Vector<Scalar>>& points) {
  if (points.empty()) return -1;
  Matrix<Scalar> diffs(static_cast<Index>(points.size()) - 1, points.front().size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    diffs.row(static_cast<Index>(i) - 1) = (points[i] - points.front()).transpose();
  }
  return rank(diffs);
}

// Lexicographic order on vectors of equal length.
template <class Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return true;
    if (b(i) < a(i)) return false;
  }
  return false;
}

// Calls f(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
template <class F>
void for_each_combination(Index n, Index k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<Index> idx(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    f(static_cast<const std::vector<Index>&>(idx));
    Index i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (Index j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace ehrkit
