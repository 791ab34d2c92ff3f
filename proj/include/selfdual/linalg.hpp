#pragma once

// Exact dense linear algebra over a field. Every routine is templated on the
// scalar type so that the same code runs on rationals (and, where no division
// is needed, on polynomials). Pivoting always takes the first nonzero entry
// of a column, which makes the reduced form deterministic.

#include "selfdual/rational.hpp"

#include <stdexcept>
#include <vector>

namespace selfdual {

template <class Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;
  Eigen::Index rank = 0;
  std::vector<Eigen::Index> pivots;
};

template <class Scalar>
Echelon<Scalar> rref(const MatrixX<Scalar>& m) {
  Echelon<Scalar> out{m, 0, {}};
  auto& r = out.reduced;
  const Eigen::Index rows = r.rows();
  const Eigen::Index cols = r.cols();
  const Scalar zero(0);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && r(pivot, col) == zero) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) r.row(pivot).swap(r.row(row));
    const Scalar inv = Scalar(1) / r(row, col);
    for (Eigen::Index j = col; j < cols; ++j) r(row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || r(i, col) == zero) continue;
      const Scalar factor = r(i, col);
      for (Eigen::Index j = col; j < cols; ++j) r(i, j) -= factor * r(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

template <class Scalar>
Eigen::Index rank(const MatrixX<Scalar>& m) {
  return rref(m).rank;
}

/// Nonzero rows of the reduced row echelon form: the canonical basis of the
/// row space.
template <class Scalar>
MatrixX<Scalar> rowspace_basis(const MatrixX<Scalar>& m) {
  auto e = rref(m);
  return e.reduced.topRows(e.rank);
}

/// Rows form a basis of {x : m * x^T = 0}, one row per free column, in
/// increasing order of the free column.
template <class Scalar>
MatrixX<Scalar> kernel(const MatrixX<Scalar>& m) {
  const Eigen::Index cols = m.cols();
  auto e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols - e.rank, cols);
  Eigen::Index out = 0;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(out, free) = Scalar(1);
    for (Eigen::Index i = 0; i < e.rank; ++i) {
      basis(out, e.pivots[static_cast<std::size_t>(i)]) = -e.reduced(i, free);
    }
    ++out;
  }
  return basis;
}

template <class Scalar>
bool rowspace_equal(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("rowspace_equal: column count mismatch");
  }
  const MatrixX<Scalar> ra = rowspace_basis(a);
  const MatrixX<Scalar> rb = rowspace_basis(b);
  return ra.rows() == rb.rows() && ra == rb;
}

/// rowspace(a) is a subspace of rowspace(b).
template <class Scalar>
bool rowspace_contains(const MatrixX<Scalar>& b, const MatrixX<Scalar>& a) {
  if (a.cols() != b.cols()) {
    throw std::invalid_argument("rowspace_contains: column count mismatch");
  }
  MatrixX<Scalar> stacked(a.rows() + b.rows(), a.cols());
  stacked << b, a;
  return rank(stacked) == rank(b);
}

/// Basis of {x : x * t lies in rowspace(w)}.
template <class Scalar>
MatrixX<Scalar> preimage_rowspace(const MatrixX<Scalar>& t, const MatrixX<Scalar>& w) {
  if (t.cols() != w.cols()) {
    throw std::invalid_argument("preimage_rowspace: column count mismatch");
  }
  // Left kernel of [t; w]: pairs (x, y) with x*t + y*w = 0.
  MatrixX<Scalar> stacked(t.rows() + w.rows(), t.cols());
  stacked << t, w;
  const MatrixX<Scalar> pairs = kernel(MatrixX<Scalar>(stacked.transpose()));
  return rowspace_basis(MatrixX<Scalar>(pairs.leftCols(t.rows())));
}

template <class Scalar>
Scalar determinant(const MatrixX<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  MatrixX<Scalar> r = m;
  const Eigen::Index n = r.rows();
  const Scalar zero(0);
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && r(pivot, col) == zero) ++pivot;
    if (pivot == n) return zero;
    if (pivot != col) {
      r.row(pivot).swap(r.row(col));
      det = -det;
    }
    det *= r(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (r(i, col) == zero) continue;
      const Scalar factor = r(i, col) / r(col, col);
      for (Eigen::Index j = col; j < n; ++j) r(i, j) -= factor * r(col, j);
    }
  }
  return det;
}

template <class Scalar>
bool is_zero(const MatrixX<Scalar>& m) {
  const Scalar zero(0);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == zero)) return false;
  return true;
}

}  // namespace selfdual
