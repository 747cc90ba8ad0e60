#ifndef SIGVAR_POLYNOMIAL_HPP
#define SIGVAR_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sigvar {

/// Exact rational scalar. Always canonical: positive denominator, lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);

/// Thrown for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the text parsers; carries the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Ordered, immutable list of distinct variable names.
class VariableTable {
 public:
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  bool operator==(const VariableTable& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using TablePtr = std::shared_ptr<const VariableTable>;

TablePtr make_table(std::vector<std::string> names);
/// The table with no variables; polynomials over it are plain rationals.
const TablePtr& constant_table();

bool same_table(const TablePtr& a, const TablePtr& b);

/// Exponent vector, one entry per variable of the owning table.
/// Ordered graded-lexicographically (total degree first, then x_1 > x_2 > ...).
struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  bool is_one() const;
  Monomial operator*(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;
  bool operator<(const Monomial& other) const;
};

/// Sparse multivariate polynomial with rational coefficients over a VariableTable.
///
/// A polynomial over constant_table() is compatible with every table: binary
/// operations promote it. Any other table mismatch throws Error.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational>;

  MultiPoly();
  explicit MultiPoly(TablePtr table);
  MultiPoly(TablePtr table, const Rational& constant);

  static MultiPoly variable(TablePtr table, std::size_t index);
  static MultiPoly variable(TablePtr table, std::string_view name);
  static MultiPoly from_terms(TablePtr table, TermMap terms);

  const TablePtr& table() const noexcept { return table_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the unit monomial.
  Rational constant_term() const;
  /// Highest total degree, or -1 for zero.
  int total_degree() const;
  /// Every term has weighted degree `weight` (weights indexed by variable).
  bool is_weighted_homogeneous(std::span<const unsigned> weights, unsigned weight) const;
  bool is_homogeneous(unsigned degree) const;

  /// Re-express over a wider table. Throws if a used variable is absent from it.
  MultiPoly over(TablePtr table) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned exponent) const;

  bool operator==(const MultiPoly& other) const;

  MultiPoly diff(std::size_t variable) const;
  MultiPoly diff(std::string_view variable) const;

  Rational eval(std::span<const Rational> point) const;

  /// Substitute a value of an arbitrary commutative ring for every variable.
  /// `lift` maps a rational coefficient into that ring.
  template <class R, class Lift>
  R substitute(std::span<const R> values, Lift lift, R zero) const;

  /// Human-readable form, e.g. "3 x_1 x_2 + 9/2 x_2^2 - 1".
  std::string to_string() const;

  static MultiPoly parse(std::string_view text, TablePtr table);

 private:
  void add_term(const Monomial& m, const Rational& c);
  void check_compatible(const MultiPoly& other, const char* op);
  Monomial unit() const;

  TablePtr table_;
  TermMap terms_;
};

enum class RingOp { add, sub, mul };
MultiPoly ring_op(const MultiPoly& a, const MultiPoly& b, RingOp op);

/// Polynomial in t with MultiPoly coefficients; one coordinate of a path segment.
class UniPoly {
 public:
  using CoeffMap = std::map<unsigned, MultiPoly>;

  UniPoly();
  explicit UniPoly(TablePtr table);
  static UniPoly monomial(const MultiPoly& coeff, unsigned degree);
  static UniPoly from_coefficients(TablePtr table, CoeffMap coeffs);

  const TablePtr& table() const noexcept { return table_; }
  const CoeffMap& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const;
  MultiPoly coefficient(unsigned degree) const;

  UniPoly without_constant() const;
  UniPoly over(TablePtr table) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const MultiPoly& c);
  UniPoly operator-() const;
  bool operator==(const UniPoly& other) const;

  UniPoly derivative() const;
  /// Antiderivative vanishing at t = 0.
  UniPoly integrate() const;
  MultiPoly eval_at_one() const;
  MultiPoly eval(const MultiPoly& t) const;

  /// Text in the path variable `t`, e.g. "3 t^3 + 2 t^2 + t".
  std::string to_string() const;
  /// Parse text in `t` and the variables of `table` ("t" must not be one of them).
  static UniPoly parse(std::string_view text, TablePtr table);

 private:
  void add_coeff(unsigned degree, const MultiPoly& c);

  TablePtr table_;
  CoeffMap coeffs_;
};

UniPoly uni_integrate(const UniPoly& p);
MultiPoly uni_eval_at_one(const UniPoly& p);
MultiPoly multi_diff(const MultiPoly& p, std::string_view variable);
Rational multi_eval(const MultiPoly& p, std::span<const Rational> point);

// ---------------------------------------------------------------------------

template <class R, class Lift>
R MultiPoly::substitute(std::span<const R> values, Lift lift, R zero) const {
  if (values.size() != table_->size())
    throw Error("substitute: expected " + std::to_string(table_->size()) + " values, got " +
                std::to_string(values.size()));
  // powers[i][e] = values[i]^e, filled lazily
  std::vector<std::vector<R>> powers(values.size());
  auto power = [&](std::size_t i, unsigned e) -> const R& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(lift(Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
    return cache[e];
  };
  R result = zero;
  for (const auto& [mono, coeff] : terms_) {
    R term = lift(coeff);
    for (std::size_t i = 0; i < mono.exponents.size(); ++i)
      if (mono.exponents[i] != 0) term = term * power(i, mono.exponents[i]);
    result += term;
  }
  return result;
}

}  // namespace sigvar

#endif
