#ifndef SIGVAR_MATRIX_HPP
#define SIGVAR_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "sigvar/polynomial.hpp"

namespace sigvar {

/// Dense row-major matrix.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw Error("matrix entry count does not match shape");
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<T>& entries() const noexcept { return entries_; }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool operator==(const DenseMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using RationalMatrix = DenseMatrix<Rational>;
using IntegerMatrix = DenseMatrix<Integer>;
using PolyMatrix = DenseMatrix<MultiPoly>;

RationalMatrix identity_matrix(std::size_t n);

/// Scales every row by the lcm of its denominators; rank and kernel are unchanged.
IntegerMatrix clear_denominators(const RationalMatrix& m);

/// Rank over Q by fraction-free (Bareiss) elimination. Row updates of each
/// pivot step run in parallel under OpenMP; the result does not depend on the
/// thread count.
std::size_t exact_rank(const RationalMatrix& m);
std::size_t exact_rank(IntegerMatrix m);

/// Single-threaded reference of exact_rank, kept for cross-checking.
std::size_t exact_rank_serial(IntegerMatrix m);

std::size_t exact_nullspace_dim(const RationalMatrix& m);

/// Basis of {v : M v = 0} from the reduced row echelon form. Intended for
/// small matrices; the basis vectors have a 1 in their free coordinate.
std::vector<std::vector<Rational>> exact_nullspace(const RationalMatrix& m);

/// Numerical rank: singular values above rel_tol * sigma_max.
std::size_t float_rank(const RationalMatrix& m, double rel_tol = 1e-8);

}  // namespace sigvar

#endif
