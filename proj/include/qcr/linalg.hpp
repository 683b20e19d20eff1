#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <utility>
#include <vector>

#include "qcr/exactnum.hpp"

namespace qcr {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Result of fraction-free (Bareiss) elimination on a dense matrix.
template <typename Scalar>
struct BareissResult {
  Eigen::Index rank = 0;
  /// Determinant; only meaningful for square input.
  Scalar determinant{0};
};

/// Bareiss elimination over an exact integral domain (Z, Q, Q(i)). Every
/// division is exact, so intermediate values stay bounded by minors of the
/// input.
template <typename Derived>
BareissResult<typename Derived::Scalar> bareiss(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> m = input;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  const Scalar zero(0);
  Scalar prev(1);
  bool negate = false;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index piv = r;
    while (piv < rows && m(piv, c) == zero) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      m.row(piv).swap(m.row(r));
      negate = !negate;
    }
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j < cols; ++j) {
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      }
      m(i, c) = zero;
    }
    prev = m(r, c);
    ++r;
  }
  BareissResult<Scalar> out;
  out.rank = r;
  if (rows == cols) {
    if (r < rows) {
      out.determinant = zero;
    } else {
      out.determinant = negate ? Scalar(zero - prev) : prev;
    }
  }
  return out;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  return bareiss(m).rank;
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  if (m.rows() == 0) return typename Derived::Scalar(1);
  return bareiss(m).determinant;
}

/// Sparse row: (column, value) pairs with strictly increasing columns and no
/// zero values.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

/// Homogeneous linear system A x = 0 over Q stored by rows.
struct SparseSystem {
  std::size_t num_unknowns = 0;
  std::vector<SparseRow> rows;
};

using RationalVector = std::vector<Rational>;

/// Canonical basis of the null space: vectors in reduced row-echelon form over
/// the unknown order, leading coefficient 1. Independent blocks of the system
/// (connected components of the row/column incidence graph) are eliminated
/// separately with fraction-free integer row operations and content
/// normalization.
std::vector<RationalVector> exact_kernel(const SparseSystem& system);

/// Reduced row-echelon form of a list of dense vectors, zero rows dropped.
std::vector<RationalVector> rref(std::vector<RationalVector> vectors);

/// Membership of v in the span of a basis already in reduced row-echelon form.
bool in_span(const std::vector<RationalVector>& rref_basis, const RationalVector& v);

Rational dot(const SparseRow& row, const RationalVector& v);

}  // namespace qcr
