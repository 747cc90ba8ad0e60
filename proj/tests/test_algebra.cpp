#include <doctest.h>

#include <random>

#include "sigvar/matrix.hpp"
#include "sigvar/polynomial.hpp"

using namespace sigvar;

namespace {

MultiPoly random_poly(const TablePtr& table, std::mt19937_64& rng, unsigned max_degree, int terms) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<unsigned> expo(0, max_degree);
  MultiPoly::TermMap map;
  for (int i = 0; i < terms; ++i) {
    Monomial m;
    unsigned left = max_degree;
    for (std::size_t v = 0; v < table->size(); ++v) {
      unsigned e = std::min(left, expo(rng));
      m.exponents.push_back(e);
      left -= e;
    }
    map[m] += make_rational(coeff(rng), 1 + std::abs(coeff(rng)));
  }
  return MultiPoly::from_terms(table, map);
}

RationalMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(make_rational(6, -4) == Rational(-3, 2));
  CHECK(make_rational(6, -4).get_den() == 2);
  CHECK(to_string(make_rational(10, 5)) == "2");
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("variable tables") {
  auto t = make_table({"x", "y"});
  CHECK(t->size() == 2);
  CHECK(t->index("y") == 1u);
  CHECK_FALSE(t->index("z").has_value());
  CHECK_THROWS_AS(make_table({"x", "x"}), Error);
  CHECK(constant_table()->empty());
}

TEST_CASE("polynomial parse and print") {
  auto t = make_table({"x_1", "x_2"});
  auto p = MultiPoly::parse("9/2 x_2^2 + 3 x_1 x_2", t);
  CHECK(p.to_string() == "3 x_1 x_2 + 9/2 x_2^2");
  CHECK(MultiPoly::parse("3*x_1*x_2 + 9/2*x_2^2", t) == p);
  CHECK(MultiPoly::parse("(x_1 + x_2)^2 - x_1^2 - x_2^2", t) == MultiPoly::parse("2 x_1 x_2", t));
  CHECK(MultiPoly::parse("-x_1 + 1", t).to_string() == "-x_1 + 1");
  CHECK(MultiPoly::parse("0", t).to_string() == "0");
  CHECK(MultiPoly::parse("x_1/2", t) == MultiPoly::parse("1/2 x_1", t));
}

TEST_CASE("polynomial parse errors report a position") {
  auto t = make_table({"x", "y"});
  CHECK_THROWS_AS(MultiPoly::parse("x + z", t), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("x +", t), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("(x + y", t), ParseError);
  CHECK_THROWS_AS(MultiPoly::parse("x / 0", t), Error);
  try {
    MultiPoly::parse("x + ?", t);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("grlex monomial order") {
  Monomial a{{2, 0}}, b{{1, 1}}, c{{0, 3}};
  CHECK(b < a);  // x^2 is above x y
  CHECK(a < c);  // degree first
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(11);
  auto t = make_table({"x", "y", "z"});
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(t, rng, 3, 4), b = random_poly(t, rng, 3, 4), c = random_poly(t, rng, 2, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - a).is_zero());
    CHECK(a.pow(2) == a * a);
    // product rule
    CHECK((a * b).diff("x") == a.diff("x") * b + a * b.diff("x"));
    std::vector<Rational> pt{Rational(2, 3), -4, 5};
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
  }
}

TEST_CASE("constant polynomials promote, other mismatches throw") {
  auto t = make_table({"x"}), u = make_table({"y"});
  MultiPoly c(constant_table(), 3);
  auto x = MultiPoly::variable(t, 0);
  CHECK((x + c).table() == t);
  CHECK((c * x).to_string() == "3 x");
  CHECK_THROWS_AS(x + MultiPoly::variable(u, 0), Error);
}

TEST_CASE("homogeneity") {
  auto t = make_table({"x", "y"});
  auto p = MultiPoly::parse("x^2 y + y^3", t);
  CHECK(p.is_homogeneous(3));
  CHECK_FALSE(MultiPoly::parse("x^2 + y", t).is_homogeneous(2));
  std::vector<unsigned> w{1, 2};
  CHECK(MultiPoly::parse("x^2 + y", t).is_weighted_homogeneous(w, 2));
  CHECK(MultiPoly(t).total_degree() == -1);
}

TEST_CASE("over and substitute") {
  auto small = make_table({"x"}), big = make_table({"x", "y"});
  auto p = MultiPoly::parse("x^2 + 1", small);
  CHECK(p.over(big) == MultiPoly::parse("x^2 + 1", big));
  CHECK_THROWS_AS(MultiPoly::parse("y", big).over(small), Error);
  std::vector<long> vals{3, 5};
  auto q = MultiPoly::parse("x y + 2 y", big);
  long r = q.substitute<long>(vals, [](const Rational& c) { return c.get_num().get_si(); }, 0L);
  CHECK(r == 25);
  CHECK_THROWS_AS(q.eval(std::vector<Rational>{1}), Error);
}

TEST_CASE("univariate path polynomials") {
  auto t = make_table({"a"});
  auto p = UniPoly::parse("t + 2 t^2 + 3 t^3", constant_table());
  CHECK(p.to_string() == "3 t^3 + 2 t^2 + t");
  CHECK(p.degree() == 3);
  CHECK(p.eval_at_one() == MultiPoly(constant_table(), 6));
  CHECK(p.integrate().derivative() == p);
  CHECK(uni_integrate(p).eval_at_one() == MultiPoly(constant_table(), Rational(1, 2) + Rational(2, 3) + Rational(3, 4)));
  auto q = UniPoly::parse("a t^2 + 1", t);
  CHECK(q.without_constant().to_string() == "a t^2");
  CHECK(q.derivative().to_string() == "2 a t");
  CHECK_THROWS_AS(UniPoly::parse("t", make_table({"t"})), Error);
  CHECK(UniPoly(t).degree() == -1);
}

TEST_CASE("integrate then differentiate is the identity on random polynomials") {
  std::mt19937_64 rng(5);
  auto t = make_table({"u", "v"});
  for (int trial = 0; trial < 30; ++trial) {
    UniPoly::CoeffMap cm;
    for (unsigned e = 0; e < 5; ++e) cm[e] = random_poly(t, rng, 2, 2);
    auto p = UniPoly::from_coefficients(t, cm);
    CHECK(p.integrate().derivative() == p);
    CHECK(p.integrate().coefficient(0).is_zero());
  }
}

TEST_CASE("exact rank basics") {
  CHECK(exact_rank(identity_matrix(4)) == 4);
  CHECK(exact_rank(RationalMatrix(3, 5)) == 0);
  RationalMatrix m(3, 3, std::vector<Rational>{1, 2, 3, 4, 5, 6, 7, 8, 9});
  CHECK(exact_rank(m) == 2);
  CHECK(exact_nullspace_dim(m) == 1);
  auto ns = exact_nullspace(m);
  REQUIRE(ns.size() == 1);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational s = 0;
    for (std::size_t c = 0; c < 3; ++c) s += m(r, c) * ns[0][c];
    CHECK(s == 0);
  }
  RationalMatrix half(2, 2, std::vector<Rational>{Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 6)});
  CHECK(exact_rank(half) == 1);
  CHECK(clear_denominators(half)(0, 0) == 3);
}

TEST_CASE("rank properties on random matrices") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = dim(rng), c = dim(rng), k = dim(rng);
    // low-rank product B C has rank <= k
    auto b = random_matrix(r, k, rng, 4), cm = random_matrix(k, c, rng, 4);
    RationalMatrix m(r, c, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        for (std::size_t l = 0; l < k; ++l) m(i, j) += b(i, l) * cm(l, j);
    auto rank = exact_rank(m);
    CHECK(rank <= std::min({r, c, k}));
    CHECK(rank == exact_rank(m.transpose()));
    CHECK(rank == exact_rank_serial(clear_denominators(m)));
    CHECK(rank == float_rank(m));
    CHECK(exact_nullspace_dim(m) == c - rank);
    CHECK(exact_nullspace(m).size() == c - rank);
  }
}

TEST_CASE("serial and parallel Bareiss agree on large entries") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    auto m = random_matrix(30, 25, rng, 100000);
    for (std::size_t j = 0; j < 25; ++j) m(29, j) = m(0, j) + m(1, j);
    auto im = clear_denominators(m);
    CHECK(exact_rank(im) == exact_rank_serial(im));
  }
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(RationalMatrix(2, 2, std::vector<Rational>{1, 2, 3}), Error);
}
