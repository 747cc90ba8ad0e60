#include "sigvar/paths.hpp"

#include <algorithm>

namespace sigvar {

namespace {

TablePtr pick_table(const std::vector<UniPoly>& coords) {
  TablePtr table = constant_table();
  for (const auto& c : coords) {
    if (c.table()->empty()) continue;
    if (table->empty())
      table = c.table();
    else if (!same_table(table, c.table()))
      throw Error("path coordinates live in incompatible rings");
  }
  return table;
}

}  // namespace

PathSegment::PathSegment(std::vector<UniPoly> coordinates) : table_(pick_table(coordinates)) {
  if (coordinates.empty()) throw Error("path segment needs at least one coordinate");
  coords_.reserve(coordinates.size());
  for (auto& c : coordinates) coords_.push_back(c.without_constant().over(table_));
}

int PathSegment::degree() const {
  int d = 0;
  for (const auto& c : coords_) d = std::max(d, c.degree());
  return d;
}

std::vector<MultiPoly> PathSegment::endpoint() const {
  std::vector<MultiPoly> out;
  for (const auto& c : coords_) out.push_back(c.eval_at_one());
  return out;
}

Path::Path(std::size_t dimension, std::vector<PathSegment> segments)
    : dimension_(dimension), segments_(std::move(segments)), table_(constant_table()) {
  if (dimension_ == 0) throw Error("path dimension must be positive");
  if (segments_.empty()) throw Error("path needs at least one segment");
  for (const auto& s : segments_) {
    if (s.dimension() != dimension_)
      throw Error("segment of dimension " + std::to_string(s.dimension()) + " in a " +
                  std::to_string(dimension_) + "-dimensional path");
    if (s.table()->empty()) continue;
    if (table_->empty())
      table_ = s.table();
    else if (!same_table(table_, s.table()))
      throw Error("path segments live in incompatible rings");
  }
  if (!table_->empty()) {
    for (auto& s : segments_) {
      if (!s.table()->empty()) continue;
      std::vector<UniPoly> lifted;
      for (const auto& c : s.coordinates()) lifted.push_back(c.over(table_));
      s = PathSegment(std::move(lifted));
    }
  }
}

std::string Path::to_string() const {
  std::string out = "Path in " + std::to_string(dimension_) + "-dimensional space with " +
                    std::to_string(segments_.size()) + " polynomial segment" + (segments_.size() == 1 ? "" : "s") +
                    ":\n{";
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (i) out += ", ";
    out += "{";
    const auto& cs = segments_[i].coordinates();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (j) out += ", ";
      out += cs[j].to_string();
    }
    out += "}";
  }
  return out + "}";
}

Path lin_path(const std::vector<MultiPoly>& increment) {
  if (increment.empty()) throw Error("lin_path: empty increment");
  std::vector<UniPoly> coords;
  for (const auto& c : increment) coords.push_back(UniPoly::monomial(c, 1));
  return Path(increment.size(), {PathSegment(std::move(coords))});
}

Path pw_lin_path(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw Error("pw_lin_path: empty matrix");
  std::vector<PathSegment> segs;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<UniPoly> coords;
    for (std::size_t i = 0; i < m.rows(); ++i) coords.push_back(UniPoly::monomial(m(i, j), 1));
    segs.emplace_back(std::move(coords));
  }
  return Path(m.rows(), std::move(segs));
}

Path pw_lin_path(const RationalMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MultiPoly(constant_table(), m(i, j));
  return pw_lin_path(p);
}

Path poly_path(const std::vector<UniPoly>& coordinates) {
  if (coordinates.empty()) throw Error("poly_path: no coordinates");
  return Path(coordinates.size(), {PathSegment(coordinates)});
}

Path concat_paths(const Path& x, const Path& y) {
  if (x.dimension() != y.dimension())
    throw Error("cannot concatenate paths of dimensions " + std::to_string(x.dimension()) + " and " +
                std::to_string(y.dimension()));
  std::vector<PathSegment> segs = x.segments();
  segs.insert(segs.end(), y.segments().begin(), y.segments().end());
  return Path(x.dimension(), std::move(segs));
}

Path apply_matrix(const PolyMatrix& a, const Path& x) {
  if (a.cols() != x.dimension())
    throw Error("matrix with " + std::to_string(a.cols()) + " columns applied to a " +
                std::to_string(x.dimension()) + "-dimensional path");
  std::vector<PathSegment> segs;
  for (const auto& s : x.segments()) {
    std::vector<UniPoly> coords;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      UniPoly acc(x.table());
      for (std::size_t j = 0; j < a.cols(); ++j) acc += s[j] * a(i, j);
      coords.push_back(std::move(acc));
    }
    segs.emplace_back(std::move(coords));
  }
  return Path(a.rows(), std::move(segs));
}

Path apply_matrix(const RationalMatrix& a, const Path& x) {
  PolyMatrix p(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) p(i, j) = MultiPoly(constant_table(), a(i, j));
  return apply_matrix(p, x);
}

Path substitute_path(const std::vector<MultiPoly>& p, const Path& x) {
  if (p.empty()) throw Error("substitute_path: empty polynomial map");
  for (const auto& q : p)
    if (q.table()->size() != x.dimension() && !q.table()->empty())
      throw Error("substitute_path: polynomial ring has " + std::to_string(q.table()->size()) +
                  " variables, path has dimension " + std::to_string(x.dimension()));
  const TablePtr& table = x.table();
  auto lift = [&](const Rational& c) { return UniPoly::monomial(MultiPoly(table, c), 0); };

  std::vector<MultiPoly> start(x.dimension(), MultiPoly(table));
  std::vector<PathSegment> segs;
  for (const auto& s : x.segments()) {
    // actual coordinates on this piece: start + segment(t)
    std::vector<UniPoly> actual;
    for (std::size_t i = 0; i < x.dimension(); ++i) actual.push_back(s[i] + UniPoly::monomial(start[i], 0));
    std::vector<UniPoly> coords;
    for (const auto& q : p) {
      if (q.table()->empty()) {
        coords.emplace_back(table);  // constant component: no motion
        continue;
      }
      coords.push_back(q.substitute<UniPoly>(actual, lift, UniPoly(table)));
    }
    segs.emplace_back(std::move(coords));
    auto end = s.endpoint();
    for (std::size_t i = 0; i < x.dimension(); ++i) start[i] += end[i];
  }
  return Path(p.size(), std::move(segs));
}

}  // namespace sigvar
