#include "sigvar/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace sigvar {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) { return make_rational(Integer(num), Integer(den)); }

std::string to_string(const Rational& q) { return q.get_str(); }

ParseError::ParseError(const std::string& what, std::size_t position)
    : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}

// ---------------------------------------------------------------------------
// VariableTable

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error("empty variable name");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableTable::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

TablePtr make_table(std::vector<std::string> names) {
  return std::make_shared<const VariableTable>(std::move(names));
}

const TablePtr& constant_table() {
  static const TablePtr table = make_table({});
  return table;
}

bool same_table(const TablePtr& a, const TablePtr& b) { return a == b || *a == *b; }

// ---------------------------------------------------------------------------
// Monomial

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exponents) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r{exponents};
  for (std::size_t i = 0; i < r.exponents.size(); ++i) r.exponents[i] += other.exponents[i];
  return r;
}

bool Monomial::operator<(const Monomial& other) const {
  auto da = degree(), db = other.degree();
  if (da != db) return da < db;
  // same degree: the monomial with the larger leading exponent is larger
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != other.exponents[i]) return exponents[i] < other.exponents[i];
  return false;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly() : table_(constant_table()) {}

MultiPoly::MultiPoly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw Error("null variable table");
}

MultiPoly::MultiPoly(TablePtr table, const Rational& constant) : MultiPoly(std::move(table)) {
  Rational c = constant;
  c.canonicalize();
  add_term(unit(), c);
}

MultiPoly MultiPoly::variable(TablePtr table, std::size_t index) {
  MultiPoly p(std::move(table));
  if (index >= p.table_->size()) throw Error("variable index out of range");
  Monomial m = p.unit();
  m.exponents[index] = 1;
  p.add_term(m, Rational(1));
  return p;
}

MultiPoly MultiPoly::variable(TablePtr table, std::string_view name) {
  auto idx = table->index(name);
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  return variable(std::move(table), *idx);
}

MultiPoly MultiPoly::from_terms(TablePtr table, TermMap terms) {
  MultiPoly p(std::move(table));
  for (auto& [m, c] : terms) {
    if (m.exponents.size() != p.table_->size()) throw Error("monomial length does not match table");
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

Monomial MultiPoly::unit() const { return Monomial{std::vector<unsigned>(table_->size(), 0)}; }

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(unit());
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

bool MultiPoly::is_weighted_homogeneous(std::span<const unsigned> weights, unsigned weight) const {
  if (weights.size() != table_->size()) throw Error("weight vector does not match table");
  for (const auto& [m, c] : terms_) {
    unsigned w = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) w += weights[i] * m.exponents[i];
    if (w != weight) return false;
  }
  return true;
}

bool MultiPoly::is_homogeneous(unsigned degree) const {
  std::vector<unsigned> ones(table_->size(), 1);
  return is_weighted_homogeneous(ones, degree);
}

MultiPoly MultiPoly::over(TablePtr table) const {
  if (same_table(table_, table)) {
    MultiPoly r = *this;
    r.table_ = std::move(table);
    return r;
  }
  std::vector<std::size_t> map(table_->size());
  for (std::size_t i = 0; i < table_->size(); ++i) {
    auto idx = table->index(table_->name(i));
    if (!idx) {
      bool used = std::any_of(terms_.begin(), terms_.end(),
                              [&](const auto& t) { return t.first.exponents[i] != 0; });
      if (used) throw Error("variable '" + table_->name(i) + "' missing from target table");
      map[i] = table->size();
    } else {
      map[i] = *idx;
    }
  }
  MultiPoly r(std::move(table));
  for (const auto& [m, c] : terms_) {
    Monomial nm = r.unit();
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      if (m.exponents[i] != 0) nm.exponents[map[i]] = m.exponents[i];
    r.add_term(nm, c);
  }
  return r;
}

void MultiPoly::check_compatible(const MultiPoly& other, const char* op) {
  if (same_table(table_, other.table_)) return;
  if (other.table_->empty()) return;
  if (table_->empty()) {
    *this = over(other.table_);
    return;
  }
  throw Error(std::string(op) + ": polynomials live in incompatible rings");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_compatible(other, "add");
  if (same_table(table_, other.table_)) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
  } else {
    add_term(unit(), other.constant_term());
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_compatible(other, "sub");
  if (same_table(table_, other.table_)) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
  } else {
    add_term(unit(), -other.constant_term());
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (b.table_->empty() && !same_table(a.table_, b.table_)) return a * b.constant_term();
  if (a.table_->empty() && !same_table(a.table_, b.table_)) return b * a.constant_term();
  if (!same_table(a.table_, b.table_)) throw Error("mul: polynomials live in incompatible rings");
  MultiPoly r(a.table_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) { return *this = *this * other; }

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(table_, Rational(1));
  MultiPoly base = *this;
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (same_table(table_, other.table_)) return terms_ == other.terms_;
  if (is_constant() && other.is_constant()) return constant_term() == other.constant_term();
  return false;
}

MultiPoly MultiPoly::diff(std::size_t variable) const {
  if (variable >= table_->size()) throw Error("diff: variable index out of range");
  MultiPoly r(table_);
  for (const auto& [m, c] : terms_) {
    auto e = m.exponents[variable];
    if (e == 0) continue;
    Monomial nm = m;
    nm.exponents[variable] = e - 1;
    r.add_term(nm, c * e);
  }
  return r;
}

MultiPoly MultiPoly::diff(std::string_view variable) const {
  auto idx = table_->index(variable);
  if (!idx) throw Error("diff: unknown variable '" + std::string(variable) + "'");
  return diff(*idx);
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != table_->size())
    throw Error("eval: point has " + std::to_string(point.size()) + " coordinates, ring has " +
                std::to_string(table_->size()) + " variables");
  return substitute<Rational>(point, [](const Rational& q) { return q; }, Rational(0));
}

namespace {

std::string monomial_text(const VariableTable& table, const Monomial& m, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) {
    if (m.exponents[i] == 0) continue;
    if (!out.empty()) out += sep;
    out += table.name(i);
    if (m.exponents[i] > 1) out += "^" + std::to_string(m.exponents[i]);
  }
  return out;
}

}  // namespace

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + " ";
      out += monomial_text(*table_, m, " ");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, TablePtr table) : text_(text), table_(std::move(table)) {}

  MultiPoly parse_all() {
    skip();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    MultiPoly p = expr();
    skip();
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  Integer integer() {
    skip();
    auto start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly expr() {
    MultiPoly acc(table_);
    bool negate = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      negate = true;
    }
    MultiPoly t = term();
    acc += negate ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc += term();
      } else if (peek('-')) {
        ++pos_;
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (peek('/')) {
        ++pos_;
        auto at = pos_;
        Integer d = integer();
        if (d == 0) throw ParseError("division by zero", at);
        acc *= make_rational(Integer(1), d);
      } else if (starts_factor()) {
        acc *= power();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (peek('^')) {
      ++pos_;
      Integer e = integer();
      if (!e.fits_uint_p()) throw ParseError("exponent too large", pos_);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer n = integer();
      Integer d = 1;
      // "9/2" binds as one rational literal
      auto save = pos_;
      if (peek('/')) {
        ++pos_;
        skip();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          auto at = pos_;
          d = integer();
          if (d == 0) throw ParseError("division by zero", at);
        } else {
          pos_ = save;
        }
      }
      return MultiPoly(table_, make_rational(n, d));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      auto start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = table_->index(name);
      if (!idx) throw ParseError("unknown variable '" + name + "'", start);
      return MultiPoly::variable(table_, *idx);
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  TablePtr table_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, TablePtr table) {
  return PolyParser(text, std::move(table)).parse_all();
}

MultiPoly ring_op(const MultiPoly& a, const MultiPoly& b, RingOp op) {
  switch (op) {
    case RingOp::add: return a + b;
    case RingOp::sub: return a - b;
    case RingOp::mul: return a * b;
  }
  throw Error("unknown ring operation");
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly() : table_(constant_table()) {}

UniPoly::UniPoly(TablePtr table) : table_(std::move(table)) {}

UniPoly UniPoly::monomial(const MultiPoly& coeff, unsigned degree) {
  UniPoly p(coeff.table());
  p.add_coeff(degree, coeff);
  return p;
}

UniPoly UniPoly::from_coefficients(TablePtr table, CoeffMap coeffs) {
  UniPoly p(table);
  for (auto& [d, c] : coeffs) p.add_coeff(d, c.over(table));
  return p;
}

void UniPoly::add_coeff(unsigned degree, const MultiPoly& c) {
  if (c.is_zero()) return;
  if (table_->empty() && !c.table()->empty()) *this = over(c.table());
  auto it = coeffs_.find(degree);
  if (it == coeffs_.end()) {
    MultiPoly v(table_);
    v += c;
    if (!v.is_zero()) coeffs_.emplace(degree, std::move(v));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

int UniPoly::degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_.rbegin()->first); }

MultiPoly UniPoly::coefficient(unsigned degree) const {
  auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? MultiPoly(table_) : it->second;
}

UniPoly UniPoly::without_constant() const {
  UniPoly r = *this;
  r.coeffs_.erase(0);
  return r;
}

UniPoly UniPoly::over(TablePtr table) const {
  UniPoly r(table);
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, c.over(table));
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (table_->empty() && !other.table_->empty()) *this = over(other.table_);
  for (const auto& [d, c] : other.coeffs_) add_coeff(d, c);
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (table_->empty() && !other.table_->empty()) *this = over(other.table_);
  for (const auto& [d, c] : other.coeffs_) add_coeff(d, -c);
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  UniPoly r(a.table_->empty() ? b.table_ : a.table_);
  for (const auto& [da, ca] : a.coeffs_)
    for (const auto& [db, cb] : b.coeffs_) r.add_coeff(da + db, ca * cb);
  return r;
}

UniPoly operator*(const UniPoly& a, const MultiPoly& c) {
  UniPoly r(a.table_->empty() ? c.table() : a.table_);
  for (const auto& [d, ca] : a.coeffs_) r.add_coeff(d, ca * c);
  return r;
}

UniPoly UniPoly::operator-() const {
  UniPoly r(table_);
  for (const auto& [d, c] : coeffs_) r.coeffs_.emplace(d, -c);
  return r;
}

bool UniPoly::operator==(const UniPoly& other) const {
  if (coeffs_.size() != other.coeffs_.size()) return false;
  auto it = other.coeffs_.begin();
  for (const auto& [d, c] : coeffs_) {
    if (d != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

UniPoly UniPoly::derivative() const {
  UniPoly r(table_);
  for (const auto& [d, c] : coeffs_)
    if (d > 0) r.add_coeff(d - 1, c * Rational(d));
  return r;
}

UniPoly UniPoly::integrate() const {
  UniPoly r(table_);
  for (const auto& [d, c] : coeffs_) r.add_coeff(d + 1, c * make_rational(1, static_cast<long>(d) + 1));
  return r;
}

MultiPoly UniPoly::eval_at_one() const {
  MultiPoly r(table_);
  for (const auto& [d, c] : coeffs_) r += c;
  return r;
}

MultiPoly UniPoly::eval(const MultiPoly& t) const {
  MultiPoly r(table_);
  for (const auto& [d, c] : coeffs_) r += c * t.pow(d);
  return r;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [d, c] = *it;
    std::string tpart = d == 0 ? "" : (d == 1 ? "t" : "t^" + std::to_string(d));
    bool single = c.term_count() == 1;
    bool negative = single && c.terms().begin()->second < 0;
    MultiPoly mag = negative ? -c : c;
    std::string ctext;
    if (tpart.empty()) {
      ctext = single ? mag.to_string() : "(" + mag.to_string() + ")";
    } else if (mag.is_constant() && mag.constant_term() == 1) {
      ctext = tpart;
    } else {
      ctext = (single ? mag.to_string() : "(" + mag.to_string() + ")") + " " + tpart;
    }
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    out += ctext;
  }
  return out;
}

UniPoly UniPoly::parse(std::string_view text, TablePtr table) {
  if (table->index("t")) throw Error("variable name 't' is reserved for the path parameter");
  auto names = table->names();
  names.push_back("t");
  auto extended = make_table(names);
  MultiPoly p = MultiPoly::parse(text, extended);
  std::size_t tpos = names.size() - 1;
  std::map<unsigned, MultiPoly::TermMap> split;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest{std::vector<unsigned>(m.exponents.begin(), m.exponents.end() - 1)};
    split[m.exponents[tpos]].emplace(std::move(rest), c);
  }
  UniPoly r(table);
  for (auto& [d, terms] : split) r.add_coeff(d, MultiPoly::from_terms(table, std::move(terms)));
  return r;
}

UniPoly uni_integrate(const UniPoly& p) { return p.integrate(); }
MultiPoly uni_eval_at_one(const UniPoly& p) { return p.eval_at_one(); }
MultiPoly multi_diff(const MultiPoly& p, std::string_view variable) { return p.diff(variable); }
Rational multi_eval(const MultiPoly& p, std::span<const Rational> point) { return p.eval(point); }

}  // namespace sigvar
