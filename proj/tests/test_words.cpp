#include <doctest.h>

#include <random>

#include "sigvar/words.hpp"

using namespace sigvar;

namespace {

Word random_word(std::mt19937_64& rng, int d, std::size_t len) {
  std::uniform_int_distribution<int> letter(1, d);
  std::vector<Letter> l(len);
  for (auto& x : l) x = letter(rng);
  return Word(l);
}

// Every choice of |u| positions out of |u|+|v| gives one interleaving.
WordCounts interleavings(const Word& u, const Word& v) {
  WordCounts out;
  std::size_t n = u.size() + v.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != u.size()) continue;
    std::vector<Letter> w;
    std::size_t i = 0, j = 0;
    for (std::size_t p = 0; p < n; ++p) w.push_back((mask >> p) & 1 ? u[i++] : v[j++]);
    out[Word(w)] += 1;
  }
  return out;
}

Tensor as_tensor(const WordCounts& c, int d) {
  Tensor t(d);
  for (const auto& [w, n] : c) t.add(w, Rational(n));
  return t;
}

Tensor w3(const Word& w) { return Tensor::word(3, w); }

std::int64_t binomial(std::size_t n, std::size_t k) {
  std::int64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<std::int64_t>(n - k + i) / static_cast<std::int64_t>(i);
  return r;
}

}  // namespace

TEST_CASE("word basics") {
  Word w{1, 2, 3};
  CHECK(w.to_string() == "[1, 2, 3]");
  CHECK(Word().to_string() == "[]");
  CHECK(Word::parse(" [1,2, 3] ") == w);
  CHECK(Word::parse("[ ]").empty());
  CHECK(w.prefix(2) == Word{1, 2});
  CHECK(w.suffix_from(1) == Word{2, 3});
  CHECK(w.without_last() == Word{1, 2});
  CHECK(w + 4 == Word{1, 2, 3, 4});
  CHECK(w.max_letter() == 3);
  CHECK(Word{3} < Word{1, 1});  // length first
  CHECK(Word{1, 2} < Word{2, 1});
  CHECK(Word::lex_less(Word{1, 2}, Word{2}));
  CHECK(Word::lex_less(Word{1}, Word{1, 1}));
  CHECK_THROWS_AS(Word::parse("[1, 0]"), Error);
  CHECK_THROWS_AS(Word::parse("1, 2"), ParseError);
  CHECK_THROWS_AS(Word::parse("[1,,2]"), ParseError);
}

TEST_CASE("all_words enumerates lexicographically") {
  auto ws = all_words(2, 2);
  REQUIRE(ws.size() == 4);
  CHECK(ws[0] == Word{1, 1});
  CHECK(ws[1] == Word{1, 2});
  CHECK(ws[3] == Word{2, 2});
  CHECK(all_words(3, 0).size() == 1);
  CHECK(all_words(3, 4).size() == 81);
}

TEST_CASE("shuffle examples") {
  auto s = shuffle(w3({1, 2}), w3({2, 3}));
  CHECK(format_tensor(s) == "[2, 3, 1, 2] + [2, 1, 3, 2] + [2, 1, 2, 3] + [1, 2, 3, 2] + 2 [1, 2, 2, 3]");
  auto t = shuffle(w3({1}), w3({1, 2, 3}));
  CHECK(format_tensor(t) == "[1, 2, 3, 1] + [1, 2, 1, 3] + 2 [1, 1, 2, 3]");
  CHECK(format_tensor(half_shuffle(w3({1, 2, 3}), w3({1}))) == "[1, 2, 3, 1]");
  CHECK(shuffle(Tensor::unit(3), w3({2, 1})) == w3({2, 1}));
}

TEST_CASE("half-shuffle requires nonempty words") {
  CHECK_THROWS_AS(half_shuffle(Tensor::unit(2), Tensor::word(2, {1})), Error);
  CHECK_THROWS_AS(half_shuffle_words(Word{1}, Word{}), Error);
}

TEST_CASE("shuffle matches brute-force interleavings") {
  std::mt19937_64 rng(101);
  int cases = 0;
  for (std::size_t total = 0; total <= 6; ++total)
    for (std::size_t a = 0; a <= total; ++a)
      for (int rep = 0; rep < 8; ++rep) {
        auto u = random_word(rng, 3, a), v = random_word(rng, 3, total - a);
        const auto& s = shuffle_words(u, v);
        CHECK(s == interleavings(u, v));
        std::int64_t sum = 0;
        for (const auto& [w, n] : s) sum += n;
        CHECK(sum == binomial(total, a));
        ++cases;
      }
  CHECK(cases >= 100);
}

TEST_CASE("shuffle is commutative and associative") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> len(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = w3(random_word(rng, 3, len(rng))), b = w3(random_word(rng, 3, len(rng))),
         c = w3(random_word(rng, 3, len(rng)));
    CHECK(shuffle(a, b) == shuffle(b, a));
    CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
    CHECK(shuffle(a, b + c) == shuffle(a, b) + shuffle(a, c));
  }
}

TEST_CASE("half-shuffle symmetrizes to shuffle and satisfies Zinbiel") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> len(1, 3);
  for (int trial = 0; trial < 120; ++trial) {
    auto u = w3(random_word(rng, 3, len(rng))), v = w3(random_word(rng, 3, len(rng))),
         s = w3(random_word(rng, 3, len(rng)));
    CHECK(half_shuffle(u, v) + half_shuffle(v, u) == shuffle(u, v));
    CHECK(half_shuffle(u, half_shuffle(v, s)) == half_shuffle(shuffle(u, v), s));
  }
}

TEST_CASE("half-shuffle keeps the last letter of the right factor") {
  auto h = half_shuffle_words(Word{1, 2}, Word{3, 1});
  for (const auto& [w, n] : h) CHECK(w.back() == 1);
  // w > i is w i
  CHECK(half_shuffle_words(Word{2, 3}, Word{1}) == WordCounts{{Word{2, 3, 1}, 1}});
}

TEST_CASE("concatenation product") {
  auto a = parse_tensor("[1] + 2 [2]", 2), b = parse_tensor("[1, 2] - [2]", 2);
  CHECK(format_tensor(concat_product(a, b)) == "2 [2, 1, 2] + [1, 1, 2] - 2 [2, 2] - [1, 2]");
  CHECK(format_tensor(concat_product(a, b, 2)) == "-2 [2, 2] - [1, 2]");
  CHECK(concat_product(Tensor::unit(2), a) == a);
}

TEST_CASE("tensor format and parse round-trip") {
  auto t = make_table({"x_1", "x_2"});
  auto s = parse_tensor("9/2 x_2^2 [2, 2] + 3 x_1 x_2 [2, 1] + 3 x_1 x_2 [1, 2] + 2 x_1^2 [1, 1]", 2, t);
  auto text = format_tensor(s);
  CHECK(text == "9/2 x_2^2 [2, 2] + 3 x_1 x_2 [2, 1] + 3 x_1 x_2 [1, 2] + 2 x_1^2 [1, 1]");
  CHECK(parse_tensor(text, 2, t) == s);
  CHECK(format_tensor(parse_tensor("(x_1 + x_2) [1] - [] ", 2, t)) == "(x_1 + x_2) [1] - 1 []");
  CHECK(format_tensor(Tensor(2)) == "0");
  CHECK(parse_tensor("0", 2).is_zero());
  CHECK_THROWS_AS(parse_tensor("[3]", 2), Error);
  CHECK_THROWS_AS(parse_tensor("2 [1", 2), ParseError);
}

TEST_CASE("random tensors round-trip through text") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> c(-9, 9);
  std::uniform_int_distribution<std::size_t> len(0, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Tensor t(3);
    for (int i = 0; i < 5; ++i) t.add(random_word(rng, 3, len(rng)), make_rational(c(rng), 1 + std::abs(c(rng))));
    CHECK(parse_tensor(format_tensor(t), 3) == t);
  }
}

TEST_CASE("tensor levels and pairing") {
  auto t = parse_tensor("[1, 2] + 3 [2] + 5 []", 2);
  CHECK(t.homogeneous_level() == -1);
  CHECK(t.level(1) == parse_tensor("3 [2]", 2));
  CHECK(t.truncated(1) == parse_tensor("3 [2] + 5 []", 2));
  CHECK(t.max_length() == 2);
  CHECK(pairing(t, parse_tensor("2 [1, 2] + [2] + [1]", 2)) == MultiPoly(constant_table(), 5));
  CHECK(Tensor(2).homogeneous_level() == 0);
  CHECK(as_tensor(shuffle_words(Word{1}, Word{2}), 2).homogeneous_level() == 2);
}

TEST_CASE("tensor tables must agree") {
  auto tx = make_table({"x"}), ty = make_table({"y"});
  Tensor a(2, tx), b(2, ty);
  a.add(Word{1}, MultiPoly::variable(tx, 0));
  b.add(Word{1}, MultiPoly::variable(ty, 0));
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(Tensor(2) + Tensor(3), Error);
  Tensor c(2);
  c.add(Word{2}, Rational(1));
  CHECK((a + c).table() == tx);
}
