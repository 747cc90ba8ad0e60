#include "sigvar/varieties.hpp"

#include <omp.h>

#include <algorithm>

#include "sigvar/io.hpp"
#include "sigvar/lyndon.hpp"
#include "sigvar/signature.hpp"

namespace sigvar {

void PolynomialMap::validate() const {
  if (!parameters) throw Error("polynomial map without parameter table");
  if (labels.size() != entries.size()) throw Error("polynomial map: labels and entries differ in length");
  if (weights.size() != parameters->size()) throw Error("polynomial map: one weight per parameter required");
  for (const auto& e : entries)
    if (!e.table()->empty() && !same_table(e.table(), parameters))
      throw Error("polynomial map: entry outside the parameter ring");
}

std::vector<Rational> PolynomialMap::eval(std::span<const Rational> point) const {
  if (point.size() != parameters->size()) throw Error("polynomial map: point has the wrong number of coordinates");
  std::vector<Rational> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.table()->empty() ? e.constant_term() : e.eval(point));
  return out;
}

RationalMatrix PolynomialMap::jacobian(std::span<const Rational> point) const {
  RationalMatrix j(entries.size(), parameters->size(), Rational(0));
  for (std::size_t r = 0; r < entries.size(); ++r) {
    if (entries[r].table()->empty()) continue;
    for (std::size_t c = 0; c < parameters->size(); ++c) j(r, c) = entries[r].diff(c).eval(point);
  }
  return j;
}

bool PolynomialMap::operator==(const PolynomialMap& other) const {
  return *parameters == *other.parameters && weights == other.weights && alphabet == other.alphabet &&
         labels == other.labels && entries == other.entries;
}

PolynomialMap tensor_parametrization(const Tensor& t, std::size_t k) {
  PolynomialMap f;
  f.parameters = t.table();
  f.weights.assign(t.table()->size(), 1);
  f.alphabet = t.alphabet();
  f.labels = all_words(t.alphabet(), k);
  for (const auto& w : f.labels) f.entries.push_back(t.coefficient(w).over(t.table()));
  return f;
}

PolynomialMap tensor_parametrization(const Tensor& t) {
  int level = t.homogeneous_level();
  if (level < 0) throw Error("tensor_parametrization: tensor mixes levels; pass the level explicitly");
  return tensor_parametrization(t, static_cast<std::size_t>(level));
}

std::string matrix_parameter_name(int i, int j) { return "a_" + std::to_string(i) + "_" + std::to_string(j); }

std::string lyndon_parameter_name(const Word& l) {
  std::string name = "y";
  for (auto x : l) name += "_" + std::to_string(x);
  return name;
}

PolynomialMap universal_variety_map(int d, std::size_t k) {
  if (d < 1 || k < 1) throw Error("universal_variety_map: need d >= 1 and k >= 1");
  auto lwords = lyndon_words(d, k);
  std::vector<std::string> names;
  std::vector<unsigned> weights;
  for (const auto& l : lwords) {
    names.push_back(lyndon_parameter_name(l));
    weights.push_back(static_cast<unsigned>(l.size()));
  }
  auto table = make_table(names);
  Tensor lie(d, table);
  for (std::size_t i = 0; i < lwords.size(); ++i) lie += lie_basis(lwords[i], d) * MultiPoly::variable(table, i);
  PolynomialMap f = tensor_parametrization(tensor_exp(lie, k).over(table), k);
  f.weights = std::move(weights);
  return f;
}

PolynomialMap signature_variety_map(PathFamily family, int d, std::size_t k, int m) {
  if (d < 1 || k < 1 || m < 1) throw Error("signature_variety_map: need d, k, m >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= m; ++j) names.push_back(matrix_parameter_name(i, j));
  auto table = make_table(names);
  PolyMatrix a(static_cast<std::size_t>(d), static_cast<std::size_t>(m));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < m; ++j)
      a(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          MultiPoly::variable(table, static_cast<std::size_t>(i * m + j));
  Tensor core = family == PathFamily::piecewise_linear ? caxis_tensor(m, k) : cmon_tensor(m, k);
  return tensor_parametrization(matrix_action(a, core).over(table), k);
}

std::vector<Rational> PointSampler::next(std::size_t dimension) {
  std::vector<Rational> p;
  p.reserve(dimension);
  for (std::size_t i = 0; i < dimension; ++i) p.emplace_back(dist_(engine_));
  return p;
}

std::vector<std::vector<Rational>> PointSampler::batch(std::size_t count, std::size_t dimension) {
  std::vector<std::vector<Rational>> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(next(dimension));
  return out;
}

namespace {

// Evaluates f at every point; points are independent.
std::vector<std::vector<Rational>> eval_points(const PolynomialMap& f, const std::vector<std::vector<Rational>>& pts) {
  std::vector<std::vector<Rational>> values(pts.size());
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = f.eval(pts[static_cast<std::size_t>(i)]);
  return values;
}

std::size_t quad_index(std::size_t a, std::size_t b, std::size_t n) {
  if (a > b) std::swap(a, b);
  // rows a' < a contribute n - a' monomials each
  return a * n - a * (a - 1) / 2 + (b - a);
}

std::vector<Rational> monomial_row(const std::vector<Rational>& v, unsigned degree) {
  if (degree == 1) return v;
  const std::size_t n = v.size();
  std::vector<Rational> row;
  row.reserve(n * (n + 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) row.push_back(v[a] * v[b]);
  return row;
}

RationalMatrix evaluation_matrix(const std::vector<std::vector<Rational>>& values, unsigned degree) {
  const std::size_t cols = monomial_count(values.front().size(), degree);
  RationalMatrix m(values.size(), cols);
  for (std::size_t r = 0; r < values.size(); ++r) {
    auto row = monomial_row(values[r], degree);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = std::move(row[c]);
  }
  return m;
}

void check_degree(unsigned degree) {
  if (degree != 1 && degree != 2) throw Error("only degrees 1 and 2 are supported");
}

}  // namespace

std::size_t affine_image_dimension(const PolynomialMap& f, std::size_t trials, std::uint64_t seed,
                                   RankMethod method) {
  f.validate();
  if (trials == 0) throw Error("affine_image_dimension: need at least one trial");
  PointSampler sampler(seed);
  auto pts = sampler.batch(trials, f.parameter_count());
  std::vector<std::size_t> ranks(trials, 0);
  const auto n = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto j = f.jacobian(pts[static_cast<std::size_t>(i)]);
    ranks[static_cast<std::size_t>(i)] = method == RankMethod::exact ? exact_rank(j) : float_rank(j);
  }
  return *std::max_element(ranks.begin(), ranks.end());
}

std::size_t monomial_count(std::size_t coordinates, unsigned degree) {
  check_degree(degree);
  return degree == 1 ? coordinates : coordinates * (coordinates + 1) / 2;
}

std::size_t auto_sample_count(const PolynomialMap& f, unsigned max_degree) {
  return monomial_count(f.coordinate_count(), max_degree) + 10;
}

IdealCounts low_degree_ideal_counts(const PolynomialMap& f, unsigned max_degree, std::size_t samples,
                                    std::uint64_t seed) {
  f.validate();
  check_degree(max_degree);
  const std::size_t n = f.coordinate_count();
  const std::size_t needed = monomial_count(n, max_degree);
  if (samples < needed)
    throw Error("low_degree_ideal_counts: " + std::to_string(samples) + " samples cannot certify " +
                std::to_string(needed) + " monomials; raise samples to at least " + std::to_string(needed));

  PointSampler sampler(seed);
  auto values = eval_points(f, sampler.batch(samples, f.parameter_count()));

  IdealCounts counts;
  RationalMatrix linear = evaluation_matrix(values, 1);
  counts.linear = exact_nullspace_dim(linear);
  if (max_degree == 1) return counts;

  std::size_t l2 = exact_nullspace_dim(evaluation_matrix(values, 2));
  std::size_t products_rank = 0;
  if (counts.linear > 0) {
    // products of the linear relations with every coordinate, inside degree 2
    auto basis = exact_nullspace(linear);
    RationalMatrix products(basis.size() * n, monomial_count(n, 2), Rational(0));
    for (std::size_t r = 0; r < basis.size(); ++r)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
          if (basis[r][a] != 0) products(r * n + i, quad_index(a, i, n)) += basis[r][a];
    products_rank = exact_rank(products);
    counts.products_independent = products_rank == basis.size() * n;
  }
  counts.quadrics = l2 - products_rank;
  return counts;
}

std::vector<std::vector<Rational>> low_degree_relations(const PolynomialMap& f, unsigned degree,
                                                        std::size_t samples, std::uint64_t seed) {
  f.validate();
  check_degree(degree);
  const std::size_t needed = monomial_count(f.coordinate_count(), degree);
  if (samples < needed)
    throw Error("low_degree_relations: raise samples to at least " + std::to_string(needed));
  PointSampler sampler(seed);
  auto values = eval_points(f, sampler.batch(samples, f.parameter_count()));
  return exact_nullspace(evaluation_matrix(values, degree));
}

Rational evaluate_relation(const PolynomialMap& f, unsigned degree, std::span<const Rational> relation,
                           std::span<const Rational> point) {
  check_degree(degree);
  auto row = monomial_row(f.eval(point), degree);
  if (row.size() != relation.size()) throw Error("relation has the wrong number of coefficients");
  Rational acc = 0;
  for (std::size_t i = 0; i < row.size(); ++i) acc += row[i] * relation[i];
  return acc;
}

// ---------------------------------------------------------------------------
// Export

namespace {

std::string m2_polynomial(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < mono.exponents.size(); ++i) {
      if (mono.exponents[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += "p_" + std::to_string(i + 1);
      if (mono.exponents[i] > 1) factors += "^" + std::to_string(mono.exponents[i]);
    }
    if (factors.empty())
      out += mag.get_str();
    else if (mag == 1)
      out += factors;
    else
      out += mag.get_str() + "*" + factors;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string cas_script(const PolynomialMap& f) {
  const std::size_t np = f.parameter_count(), nc = f.coordinate_count();
  std::string s;
  s += "-- polynomial parametrization: " + std::to_string(np) + " parameters, " + std::to_string(nc) +
       " coordinates\n";
  for (std::size_t i = 0; i < np; ++i)
    s += "-- p_" + std::to_string(i + 1) + " = " + f.parameters->name(i) + " (weight " +
         std::to_string(f.weights[i]) + ")\n";
  for (std::size_t i = 0; i < nc; ++i) s += "-- z_" + std::to_string(i + 1) + " = " + f.labels[i].to_string() + "\n";
  s += "\n";
  std::vector<std::string> pw, cw, ents;
  for (auto w : f.weights) pw.push_back(std::to_string(w));
  for (const auto& l : f.labels) cw.push_back(std::to_string(l.size()));
  for (const auto& e : f.entries) ents.push_back("    " + m2_polynomial(e));
  if (np > 0)
    s += "Q = QQ[p_1..p_" + std::to_string(np) + ", Degrees => {" + join(pw, ", ") + "}];\n";
  else
    s += "Q = QQ;\n";
  s += "S = QQ[z_1..z_" + std::to_string(nc) + ", Degrees => {" + join(cw, ", ") + "}];\n";
  s += "m = map(Q, S, {\n" + join(ents, ",\n") + "\n    });\n";
  s += "\nI = ker m;\n";
  s += "dim I\n";
  s += "degree I\n";
  s += "betti mingens I\n";
  return s;
}

}  // namespace

std::string export_map(const PolynomialMap& f, ExportFormat format) {
  f.validate();
  if (format == ExportFormat::json) return polynomial_map_to_json(f).dump(2) + "\n";
  return cas_script(f);
}

}  // namespace sigvar
