#include "sigvar/matrix.hpp"

#include <omp.h>

#include <Eigen/SVD>
#include <algorithm>
#include <utility>

namespace sigvar {

RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols(), Integer(0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Integer v = l / m(r, c).get_den();
      out(r, c) = v * m(r, c).get_num();
    }
  }
  return out;
}

namespace {

using Rows = std::vector<std::vector<Integer>>;

Rows to_rows(IntegerMatrix& m) {
  Rows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = std::move(m(r, c));
  return rows;
}

// One Bareiss update of row `row` against the pivot row:
//   row[j] <- (pivot * row[j] - row[col] * pivot_row[j]) / prev   for j > col.
// The division is exact.
void eliminate_row(std::vector<Integer>& row, const std::vector<Integer>& pivot_row, std::size_t col,
                   const Integer& prev, Integer& scratch) {
  const Integer& pivot = pivot_row[col];
  const std::size_t cols = row.size();
  if (sgn(row[col]) == 0) {
    // pivot * row[j] / prev
    for (std::size_t j = col + 1; j < cols; ++j) {
      if (sgn(row[j]) == 0) continue;
      mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
      mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
    }
    return;
  }
  for (std::size_t j = col + 1; j < cols; ++j) {
    mpz_mul(scratch.get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
    mpz_submul(scratch.get_mpz_t(), row[col].get_mpz_t(), pivot_row[j].get_mpz_t());
    mpz_divexact(row[j].get_mpz_t(), scratch.get_mpz_t(), prev.get_mpz_t());
  }
  row[col] = 0;
}

template <bool Parallel>
std::size_t bareiss_rank(Rows rows, std::size_t cols) {
  const std::size_t nrows = rows.size();
  const std::size_t max_rank = std::min(nrows, cols);
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < max_rank; ++col) {
    std::size_t pivot = nrows;
    for (std::size_t r = rank; r < nrows; ++r) {
      if (sgn(rows[r][col]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == nrows) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& pivot_row = rows[rank];
    const auto first = static_cast<std::ptrdiff_t>(rank + 1);
    const auto last = static_cast<std::ptrdiff_t>(nrows);
    if constexpr (Parallel) {
#pragma omp parallel
      {
        Integer scratch;
#pragma omp for schedule(dynamic, 4)
        for (std::ptrdiff_t r = first; r < last; ++r) eliminate_row(rows[r], pivot_row, col, prev, scratch);
      }
    } else {
      Integer scratch;
      for (std::ptrdiff_t r = first; r < last; ++r) eliminate_row(rows[r], pivot_row, col, prev, scratch);
    }
    prev = pivot_row[col];
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(IntegerMatrix m) {
  auto cols = m.cols();
  return bareiss_rank<true>(to_rows(m), cols);
}

std::size_t exact_rank_serial(IntegerMatrix m) {
  auto cols = m.cols();
  return bareiss_rank<false>(to_rows(m), cols);
}

std::size_t exact_rank(const RationalMatrix& m) { return exact_rank(clear_denominators(m)); }

std::size_t exact_nullspace_dim(const RationalMatrix& m) { return m.cols() - exact_rank(m); }

std::vector<std::vector<Rational>> exact_nullspace(const RationalMatrix& m) {
  const std::size_t nrows = m.rows(), ncols = m.cols();
  std::vector<std::vector<Rational>> a(nrows, std::vector<Rational>(ncols));
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c) a[r][c] = m(r, c);

  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
    std::size_t p = rank;
    while (p < nrows && a[p][col] == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[rank], a[p]);
    Rational inv = 1 / a[rank][col];
    for (std::size_t j = col; j < ncols; ++j) a[rank][j] *= inv;
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < ncols; ++j) a[r][j] -= f * a[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t float_rank(const RationalMatrix& m, double rel_tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::MatrixXd a(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a(r, c) = m(r, c).get_d();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++rank;
  return rank;
}

}  // namespace sigvar
