#ifndef WILSON_LINALG_HPP_
#define WILSON_LINALG_HPP_

// Exact linear algebra over any field scalar that provides +, -, *, /, ==
// and an ADL-visible is_zero(). Storage is Eigen; elimination is done here
// because Eigen's decompositions assume an ordered, inexact field.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace wilson {

  template <typename Scalar>
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  template <typename Scalar>
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  using Index = Eigen::Index;

  //! Reduced row echelon form together with its pivot columns.
  template <typename Scalar>
  struct RowEchelon {
    Matrix<Scalar>     matrix;
    std::vector<Index> pivots;

    Index rank() const noexcept {
      return static_cast<Index>(pivots.size());
    }
  };

  //! Gauss-Jordan elimination. The pivot is the first nonzero entry at or
  //! below the current row, so the output is deterministic; over an exact
  //! field no other pivoting is needed.
  template <typename Scalar>
  RowEchelon<Scalar> row_reduce(Matrix<Scalar> m) {
    RowEchelon<Scalar> out;
    Index const        rows = m.rows();
    Index const        cols = m.cols();
    Index              r    = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
      Index p = r;
      while (p < rows && is_zero(m(p, c))) {
        ++p;
      }
      if (p == rows) {
        continue;
      }
      if (p != r) {
        m.row(p).swap(m.row(r));
      }
      Scalar const inv = Scalar(1) / m(r, c);
      for (Index j = c; j < cols; ++j) {
        if (!is_zero(m(r, j))) {
          m(r, j) = m(r, j) * inv;
        }
      }
      for (Index i = 0; i < rows; ++i) {
        if (i == r || is_zero(m(i, c))) {
          continue;
        }
        Scalar const factor = m(i, c);
        for (Index j = c; j < cols; ++j) {
          if (!is_zero(m(r, j))) {
            m(i, j) = m(i, j) - factor * m(r, j);
          }
        }
      }
      out.pivots.push_back(c);
      ++r;
    }
    out.matrix = std::move(m);
    return out;
  }

  template <typename Scalar>
  Index rank(Matrix<Scalar> const& m) {
    return row_reduce(m).rank();
  }

  //! Basis of {v : m v = 0}, one basis vector per column of the result.
  template <typename Scalar>
  Matrix<Scalar> kernel(Matrix<Scalar> const& m) {
    auto const  echelon = row_reduce(m);
    Index const cols    = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (Index p : echelon.pivots) {
      is_pivot[static_cast<std::size_t>(p)] = true;
    }
    Matrix<Scalar> basis(cols, cols - echelon.rank());
    basis.setConstant(Scalar(0));
    Index k = 0;
    for (Index free = 0; free < cols; ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) {
        continue;
      }
      basis(free, k) = Scalar(1);
      for (Index i = 0; i < echelon.rank(); ++i) {
        basis(echelon.pivots[static_cast<std::size_t>(i)], k)
            = -echelon.matrix(i, free);
      }
      ++k;
    }
    return basis;
  }

  //! Canonical basis of the column span of `columns`: the nonzero rows of
  //! the reduced row echelon form of its transpose, returned as columns.
  //! Two matrices span the same space iff their canonical bases are equal.
  template <typename Scalar>
  Matrix<Scalar> canonical_basis(Matrix<Scalar> const& columns) {
    if (columns.cols() == 0) {
      return Matrix<Scalar>(columns.rows(), 0);
    }
    Matrix<Scalar> t       = columns.transpose();
    auto           echelon = row_reduce(std::move(t));
    return echelon.matrix.topRows(echelon.rank()).transpose();
  }

  template <typename Scalar>
  bool in_span(Matrix<Scalar> const& basis, Vector<Scalar> const& v) {
    Matrix<Scalar> augmented(basis.rows(), basis.cols() + 1);
    augmented.leftCols(basis.cols()) = basis;
    augmented.col(basis.cols())      = v;
    return rank(augmented) == rank(basis);
  }

  //! True iff every column of `candidates` lies in the span of `basis`.
  template <typename Scalar>
  bool spans_contain(Matrix<Scalar> const& basis,
                     Matrix<Scalar> const& candidates) {
    if (candidates.cols() == 0) {
      return true;
    }
    Matrix<Scalar> augmented(basis.rows(), basis.cols() + candidates.cols());
    augmented.leftCols(basis.cols())       = basis;
    augmented.rightCols(candidates.cols()) = candidates;
    return rank(augmented) == rank(basis);
  }

  //! Subspace equality by mutual membership.
  template <typename Scalar>
  bool same_span(Matrix<Scalar> const& lhs, Matrix<Scalar> const& rhs) {
    return spans_contain(lhs, rhs) && spans_contain(rhs, lhs);
  }

  //! Unique solution of a square system, or nullopt when singular.
  template <typename Scalar>
  std::optional<Vector<Scalar>> solve(Matrix<Scalar> const& a,
                                      Vector<Scalar> const& b) {
    Index const n = a.rows();
    if (n == 0) {
      return Vector<Scalar>(0);
    }
    Matrix<Scalar> augmented(n, n + 1);
    augmented.leftCols(n) = a;
    augmented.col(n)      = b;
    auto echelon = row_reduce(std::move(augmented));
    if (echelon.rank() != n || echelon.pivots.back() != n - 1) {
      return std::nullopt;
    }
    return Vector<Scalar>(echelon.matrix.col(n));
  }

  template <typename Derived>
  bool all_zero(Eigen::MatrixBase<Derived> const& m) {
    for (Index j = 0; j < m.cols(); ++j) {
      for (Index i = 0; i < m.rows(); ++i) {
        if (!is_zero(m(i, j))) {
          return false;
        }
      }
    }
    return true;
  }

  template <typename DerivedA, typename DerivedB>
  bool exactly_equal(Eigen::MatrixBase<DerivedA> const& a,
                     Eigen::MatrixBase<DerivedB> const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      return false;
    }
    for (Index j = 0; j < a.cols(); ++j) {
      for (Index i = 0; i < a.rows(); ++i) {
        if (!(a(i, j) == b(i, j))) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace wilson

#endif  // WILSON_LINALG_HPP_
