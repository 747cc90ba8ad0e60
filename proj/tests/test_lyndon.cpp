#include <doctest.h>

#include <random>

#include "sigvar/lyndon.hpp"
#include "sigvar/matrix.hpp"

using namespace sigvar;

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  return n > 1 ? -result : result;
}

// Necklace polynomial: (1/n) sum_{e | n} mu(e) d^{n/e}.
long witt(int d, int n) {
  long s = 0;
  for (int e = 1; e <= n; ++e)
    if (n % e == 0) {
      long p = 1;
      for (int i = 0; i < n / e; ++i) p *= d;
      s += mobius(e) * p;
    }
  return s / n;
}

// Direct definition: strictly smaller than every proper rotation.
bool lyndon_by_rotation(const Word& w) {
  if (w.empty()) return false;
  const auto& l = w.letters();
  for (std::size_t r = 1; r < l.size(); ++r) {
    std::vector<Letter> rot(l.begin() + static_cast<long>(r), l.end());
    rot.insert(rot.end(), l.begin(), l.begin() + static_cast<long>(r));
    if (!(l < rot)) return false;
  }
  return true;
}

Word random_word(std::mt19937_64& rng, int d, std::size_t len) {
  std::uniform_int_distribution<int> letter(1, d);
  std::vector<Letter> l(len);
  for (auto& x : l) x = letter(rng);
  return Word(l);
}

std::string join(const std::vector<Word>& ws) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " ") + w.to_string();
  return s;
}

}  // namespace

TEST_CASE("Lyndon word lists") {
  CHECK(join(lyndon_words(3, 2)) == "[1] [1, 2] [1, 3] [2] [2, 3] [3]");
  CHECK(join(lyndon_words(2, 3)) == "[1] [1, 1, 2] [1, 2] [1, 2, 2] [2]");
  CHECK(lyndon_words(1, 5).size() == 1);
  CHECK(lyndon_words(3, 0).empty());
}

TEST_CASE("Witt formula counts Lyndon words") {
  int cases = 0;
  for (int d = 1; d <= 4; ++d)
    for (int n = 1; n <= 6; ++n) {
      auto all = lyndon_words(d, static_cast<std::size_t>(n));
      long count = 0;
      for (const auto& w : all)
        if (w.size() == static_cast<std::size_t>(n)) ++count;
      CHECK(count == witt(d, n));
      ++cases;
    }
  CHECK(cases == 24);
}

TEST_CASE("is_lyndon agrees with the rotation definition and the generator") {
  for (int d = 1; d <= 3; ++d)
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<Word> expected;
      for (const auto& w : all_words(d, n))
        if (lyndon_by_rotation(w)) expected.push_back(w);
      for (const auto& w : all_words(d, n)) CHECK(is_lyndon(w) == lyndon_by_rotation(w));
      std::vector<Word> generated;
      for (const auto& w : lyndon_words(d, n))
        if (w.size() == n) generated.push_back(w);
      CHECK(generated == expected);
    }
  CHECK_THROWS_AS(is_lyndon(Word{}), Error);
}

TEST_CASE("generated words are sorted lexicographically") {
  auto ws = lyndon_words(3, 5);
  for (std::size_t i = 1; i < ws.size(); ++i) CHECK(Word::lex_less(ws[i - 1], ws[i]));
}

TEST_CASE("standard factorization") {
  CHECK(standard_factorization(Word{1, 2}) == std::pair{Word{1}, Word{2}});
  CHECK(standard_factorization(Word{1, 1, 2}) == std::pair{Word{1}, Word{1, 2}});
  CHECK(standard_factorization(Word{1, 2, 2}) == std::pair{Word{1, 2}, Word{2}});
  CHECK(standard_factorization(Word{1, 3, 2}) == std::pair{Word{1, 3}, Word{2}});
  CHECK_THROWS_AS(standard_factorization(Word{2, 1}), Error);
  CHECK_THROWS_AS(standard_factorization(Word{1}), Error);
  for (const auto& l : lyndon_words(3, 6)) {
    if (l.size() < 2) continue;
    auto [a, b] = standard_factorization(l);
    CHECK(a + b == l);
    CHECK(is_lyndon(a));
    CHECK(is_lyndon(b));
    for (std::size_t p = 1; p < a.size(); ++p) CHECK_FALSE(is_lyndon(l.suffix_from(l.size() - b.size() - p)));
  }
}

TEST_CASE("Chen-Fox-Lyndon factorization") {
  CHECK(lyndon_factorization(Word{3, 2, 1}) == std::vector<Word>{Word{3}, Word{2}, Word{1}});
  CHECK(lyndon_factorization(Word{1, 2, 1, 1}) == std::vector<Word>{Word{1, 2}, Word{1}, Word{1}});
  CHECK(lyndon_factorization(Word{}).empty());
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> len(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    auto w = random_word(rng, 3, len(rng));
    auto f = lyndon_factorization(w);
    Word joined;
    for (const auto& l : f) {
      CHECK(is_lyndon(l));
      joined = joined + l;
    }
    CHECK(joined == w);
    for (std::size_t i = 1; i < f.size(); ++i) CHECK_FALSE(Word::lex_less(f[i - 1], f[i]));
  }
}

TEST_CASE("Lie basis") {
  CHECK(format_tensor(lie_basis(Word{1, 2}, 2)) == "-[2, 1] + [1, 2]");
  CHECK(lie_basis(Word{2}, 3) == Tensor::word(3, Word{2}));
  CHECK_THROWS_AS(lie_basis(Word{2, 1}, 2), Error);
  CHECK_THROWS_AS(lie_basis(Word{1, 3}, 2), Error);
}

TEST_CASE("Lie basis elements are independent and triangular") {
  for (int d = 2; d <= 3; ++d)
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<Word> ls;
      for (const auto& l : lyndon_words(d, n))
        if (l.size() == n) ls.push_back(l);
      auto cols = all_words(d, n);
      RationalMatrix m(ls.size(), cols.size(), Rational(0));
      for (std::size_t i = 0; i < ls.size(); ++i) {
        auto b = lie_basis(ls[i], d);
        CHECK(b.coefficient(ls[i]) == MultiPoly(constant_table(), 1));
        for (const auto& [w, c] : b.terms()) {
          CHECK((w == ls[i] || Word::lex_less(ls[i], w)));
          auto col = static_cast<std::size_t>(std::find(cols.begin(), cols.end(), w) - cols.begin());
          m(i, col) = c.constant_term();
        }
      }
      CHECK(exact_rank(m) == ls.size());
    }
}

TEST_CASE("lyndon_shuffle of [3, 2, 1]") {
  auto p = lyndon_shuffle(Tensor::word(3, Word{3, 2, 1}));
  CHECK(p.terms().size() == 4);
  CHECK(p.coefficient({{Word{1, 2, 3}, 1}}) == 1);
  CHECK(p.coefficient({{Word{1, 2}, 1}, {Word{3}, 1}}) == -1);
  CHECK(p.coefficient({{Word{1}, 1}, {Word{2, 3}, 1}}) == -1);
  CHECK(p.coefficient({{Word{1}, 1}, {Word{2}, 1}, {Word{3}, 1}}) == 1);
  CHECK(p.to_string() == "[1] ** [2] ** [3] - [1] ** [2, 3] - [1, 2] ** [3] + [1, 2, 3]");
  CHECK(p.expand(3) == Tensor::word(3, Word{3, 2, 1}));
}

TEST_CASE("lyndon_shuffle handles powers and constants") {
  auto p = lyndon_shuffle(parse_tensor("2 [1, 1] + 3 []", 2));
  CHECK(p.coefficient({{Word{1}, 2}}) == 1);
  CHECK(p.coefficient({}) == 3);
  CHECK(lyndon_shuffle(Tensor(2)).terms().empty());
  auto tx = make_table({"x"});
  Tensor sym(2, tx);
  sym.add(Word{1}, MultiPoly::variable(tx, 0));
  CHECK_THROWS_AS(lyndon_shuffle(sym), Error);
}

TEST_CASE("lyndon_shuffle round-trip on random tensors") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dd(1, 3), coeff(-4, 4), nterms(1, 4);
  std::uniform_int_distribution<std::size_t> len(0, 5);
  int cases = 0;
  for (int trial = 0; trial < 120; ++trial) {
    int d = dd(rng);
    Tensor t(d);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) t.add(random_word(rng, d, len(rng)), make_rational(coeff(rng), 1 + std::abs(coeff(rng))));
    auto p = lyndon_shuffle(t);
    for (const auto& [m, c] : p.terms())
      for (const auto& [w, e] : m) CHECK(is_lyndon(w));
    CHECK(p.expand(d) == t);
    ++cases;
  }
  CHECK(cases >= 100);
}

TEST_CASE("expand_monomial multiplies with multiplicity") {
  ShuffleMonomial m{{Word{1}, 2}};
  CHECK(format_tensor(expand_monomial(m, 2)) == "2 [1, 1]");
  CHECK(expand_monomial({}, 2) == Tensor::unit(2));
}
