#ifndef SIGVAR_PATHS_HPP
#define SIGVAR_PATHS_HPP

#include <string>
#include <vector>

#include "sigvar/matrix.hpp"
#include "sigvar/polynomial.hpp"

namespace sigvar {

/// One polynomial piece [0,1] -> R^d starting at the origin.
class PathSegment {
 public:
  /// Constant terms are dropped (signatures are translation invariant).
  explicit PathSegment(std::vector<UniPoly> coordinates);

  std::size_t dimension() const noexcept { return coords_.size(); }
  const std::vector<UniPoly>& coordinates() const noexcept { return coords_; }
  const UniPoly& operator[](std::size_t i) const { return coords_[i]; }
  const TablePtr& table() const noexcept { return table_; }
  int degree() const;

  /// Coordinates at t = 1 (the increment of the segment).
  std::vector<MultiPoly> endpoint() const;

  bool operator==(const PathSegment& other) const { return coords_ == other.coords_; }

 private:
  std::vector<UniPoly> coords_;
  TablePtr table_;
};

/// Piecewise polynomial path, stored as its ordered polynomial segments.
/// Concatenation is formal: segments are never reparametrized.
class Path {
 public:
  Path(std::size_t dimension, std::vector<PathSegment> segments);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<PathSegment>& segments() const noexcept { return segments_; }
  const TablePtr& table() const noexcept { return table_; }

  bool operator==(const Path& other) const { return dimension_ == other.dimension_ && segments_ == other.segments_; }

  /// "Path in 3-dimensional space with 1 polynomial segment:\n{{t, t^2, t^3}}"
  std::string to_string() const;

 private:
  std::size_t dimension_;
  std::vector<PathSegment> segments_;
  TablePtr table_;
};

Path lin_path(const std::vector<MultiPoly>& increment);
/// Columns of m are the increments of consecutive linear steps.
Path pw_lin_path(const PolyMatrix& m);
Path pw_lin_path(const RationalMatrix& m);
Path poly_path(const std::vector<UniPoly>& coordinates);
Path concat_paths(const Path& x, const Path& y);

/// A o X for an e x d matrix A, applied segmentwise.
Path apply_matrix(const PolyMatrix& a, const Path& x);
Path apply_matrix(const RationalMatrix& a, const Path& x);

/// p o X for a polynomial map p : R^d -> R^m with rational coefficients, given
/// as m polynomials over a table of d variables. Each segment is evaluated from
/// its true starting point, and constant terms are then dropped.
Path substitute_path(const std::vector<MultiPoly>& p, const Path& x);

}  // namespace sigvar

#endif
