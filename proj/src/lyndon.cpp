#include "sigvar/lyndon.hpp"

#include <algorithm>

namespace sigvar {

bool is_lyndon(const Word& w) {
  if (w.empty()) throw Error("is_lyndon: the empty word is not a valid argument");
  const auto& a = w.letters();
  const std::size_t n = a.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    // compare w with its rotation by `shift`
    for (std::size_t i = 0; i < n; ++i) {
      Letter x = a[i], y = a[(i + shift) % n];
      if (x < y) break;
      if (x > y) return false;
      if (i + 1 == n) return false;  // equal to a rotation
    }
  }
  return true;
}

std::vector<Word> lyndon_words(int alphabet, std::size_t max_length) {
  std::vector<Word> out;
  if (alphabet < 1 || max_length < 1) return out;
  std::vector<Letter> w{1};
  while (!w.empty()) {
    out.emplace_back(w);
    const std::size_t m = w.size();
    while (w.size() < max_length) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == alphabet) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& l) {
  if (l.size() < 2) throw Error("standard factorization needs a Lyndon word of length >= 2");
  if (!is_lyndon(l)) throw Error("standard factorization: " + l.to_string() + " is not Lyndon");
  for (std::size_t split = 1; split < l.size(); ++split) {
    Word right = l.suffix_from(split);
    if (is_lyndon(right)) return {l.prefix(split), std::move(right)};
  }
  throw Error("standard factorization: no Lyndon right factor");  // unreachable: last letter is Lyndon
}

std::vector<Word> lyndon_factorization(const Word& w) {
  std::vector<Word> factors;
  const auto& s = w.letters();
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && s[k] <= s[j]) {
      k = s[k] < s[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      factors.emplace_back(std::vector<Letter>(s.begin() + static_cast<std::ptrdiff_t>(i),
                                               s.begin() + static_cast<std::ptrdiff_t>(i + j - k)));
      i += j - k;
    }
  }
  return factors;
}

Tensor lie_basis(const Word& l, int alphabet) {
  if (l.empty() || !is_lyndon(l)) throw Error("lie_basis: " + l.to_string() + " is not a Lyndon word");
  if (l.size() == 1) return Tensor::word(alphabet, l);
  auto [left, right] = standard_factorization(l);
  Tensor x = lie_basis(left, alphabet);
  Tensor y = lie_basis(right, alphabet);
  return concat_product(x, y) - concat_product(y, x);
}

bool ShuffleMonomialLess::operator()(const ShuffleMonomial& a, const ShuffleMonomial& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const auto& x, const auto& y) {
    if (Word::lex_less(x.first, y.first)) return true;
    if (Word::lex_less(y.first, x.first)) return false;
    return x.second < y.second;
  });
}

void LyndonPolynomial::add(const ShuffleMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LyndonPolynomial::coefficient(const ShuffleMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Tensor expand_monomial(const ShuffleMonomial& m, int alphabet) {
  Tensor acc = Tensor::unit(alphabet);
  for (const auto& [w, e] : m) {
    Tensor wt = Tensor::word(alphabet, w);
    for (unsigned i = 0; i < e; ++i) acc = shuffle(acc, wt);
  }
  return acc;
}

Tensor LyndonPolynomial::expand(int alphabet) const {
  Tensor acc(alphabet);
  for (const auto& [m, c] : terms_) acc += expand_monomial(m, alphabet) * c;
  return acc;
}

std::string LyndonPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string mono;
    for (const auto& [w, e] : m) {
      if (!mono.empty()) mono += " ** ";
      mono += w.to_string();
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      out += mag.get_str();
    else
      out += (mag == 1 ? "" : mag.get_str() + " ") + mono;
  }
  return out;
}

namespace {

ShuffleMonomial monomial_of(const Word& w) {
  ShuffleMonomial m;
  for (auto& f : lyndon_factorization(w)) ++m[f];
  return m;
}

// Exact solve of one homogeneous level against the basis of all shuffle
// monomials of that length. Used only if triangular elimination misbehaves.
void solve_level(const Tensor& level_part, std::size_t length, int alphabet, LyndonPolynomial& out) {
  auto words = all_words(alphabet, length);
  const std::size_t n = words.size();
  std::map<Word, std::size_t> row_of;
  for (std::size_t i = 0; i < n; ++i) row_of[words[i]] = i;
  std::vector<ShuffleMonomial> monos;
  // augmented system [E | b]
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1, Rational(0)));
  for (std::size_t j = 0; j < n; ++j) {
    monos.push_back(monomial_of(words[j]));
    for (const auto& [w, c] : expand_monomial(monos.back(), alphabet).terms()) a[row_of.at(w)][j] = c.constant_term();
  }
  for (const auto& [w, c] : level_part.terms()) a[row_of.at(w)][n] = c.constant_term();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) throw Error("lyndon_shuffle: shuffle monomials are not a basis (internal error)");
    std::swap(a[p], a[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j <= n; ++j) a[col][j] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
    }
  }
  for (std::size_t j = 0; j < n; ++j) out.add(monos[j], a[j][n]);
}

}  // namespace

LyndonPolynomial lyndon_shuffle(const Tensor& t) {
  for (const auto& [w, c] : t.terms())
    if (!c.is_constant()) throw Error("lyndon_shuffle: coefficients must be rational constants");

  const int alphabet = t.alphabet();
  LyndonPolynomial result;
  Tensor remainder = t.over(constant_table());
  while (!remainder.is_zero()) {
    // largest word in (length, lex) order
    const Word w = remainder.terms().rbegin()->first;
    const Rational c = remainder.terms().rbegin()->second.constant_term();
    if (w.empty()) {
      result.add(ShuffleMonomial{}, c);
      remainder.add(w, -c);
      continue;
    }
    ShuffleMonomial m = monomial_of(w);
    Tensor expansion = expand_monomial(m, alphabet);
    Rational lead = expansion.coefficient(w).constant_term();
    bool ok = lead != 0 && expansion.terms().rbegin()->first == w;
    if (ok) {
      Rational scale = c / lead;
      result.add(m, scale);
      remainder -= expansion * scale;
      // the remainder must strictly decrease in the (length, lex) well-order
      ok = remainder.is_zero() || remainder.terms().rbegin()->first < w;
    }
    if (!ok) {
      // fall back: undo nothing, solve each remaining level exactly
      LyndonPolynomial exact;
      for (std::size_t len = 0; len <= remainder.max_length(); ++len) {
        Tensor part = remainder.level(len);
        if (part.is_zero()) continue;
        if (len == 0)
          exact.add(ShuffleMonomial{}, part.coefficient(Word{}).constant_term());
        else
          solve_level(part, len, alphabet, exact);
      }
      for (const auto& [mono, coeff] : exact.terms()) result.add(mono, coeff);
      break;
    }
  }
  return result;
}

}  // namespace sigvar
