#include <doctest.h>

#include "sigvar/paths.hpp"

using namespace sigvar;

namespace {

UniPoly up(const std::string& s, const TablePtr& t = constant_table()) { return UniPoly::parse(s, t); }

}  // namespace

TEST_CASE("polynomial path construction and printing") {
  auto y = poly_path({up("t"), up("t^2"), up("t^3")});
  CHECK(y.dimension() == 3);
  CHECK(y.segments().size() == 1);
  CHECK(y.to_string() == "Path in 3-dimensional space with 1 polynomial segment:\n{{t, t^2, t^3}}");
  auto z = poly_path({up("t + 2 t^2 + 3 t^3"), up("4 t + 5 t^2 + 6 t^3")});
  CHECK(z.to_string() ==
        "Path in 2-dimensional space with 1 polynomial segment:\n{{3 t^3 + 2 t^2 + t, 6 t^3 + 5 t^2 + 4 t}}");
  CHECK(z.segments()[0].degree() == 3);
}

TEST_CASE("constant terms are dropped") {
  auto x = poly_path({up("t + 5"), up("7")});
  CHECK(x.segments()[0][0] == up("t"));
  CHECK(x.segments()[0][1].is_zero());
}

TEST_CASE("linear and piecewise linear paths") {
  auto t = make_table({"x_1", "x_2"});
  auto l = lin_path({MultiPoly::parse("2 x_1", t), MultiPoly::parse("3 x_2", t)});
  CHECK(l.segments()[0][0].to_string() == "2 x_1 t");
  CHECK(l.table() == t);
  RationalMatrix m(2, 3, std::vector<Rational>{1, 0, 2, 0, 1, 2});
  auto p = pw_lin_path(m);
  CHECK(p.dimension() == 2);
  CHECK(p.segments().size() == 3);
  auto e = p.segments()[2].endpoint();
  CHECK(e[0] == MultiPoly(constant_table(), 2));
  CHECK(p.to_string() == "Path in 2-dimensional space with 3 polynomial segments:\n{{t, 0}, {0, t}, {2 t, 2 t}}");
}

TEST_CASE("path errors") {
  CHECK_THROWS_AS(poly_path({}), Error);
  CHECK_THROWS_AS(Path(2, {}), Error);
  CHECK_THROWS_AS(Path(2, {PathSegment({up("t")})}), Error);
  auto a = poly_path({up("t")}), b = poly_path({up("t"), up("t")});
  CHECK_THROWS_AS(concat_paths(a, b), Error);
  RationalMatrix bad(2, 3);
  CHECK_THROWS_AS(apply_matrix(bad, b), Error);
}

TEST_CASE("concatenation keeps segments in order") {
  auto a = poly_path({up("t"), up("t^2")}), b = lin_path({MultiPoly(constant_table(), 1), MultiPoly(constant_table(), -1)});
  auto c = concat_paths(a, b);
  REQUIRE(c.segments().size() == 2);
  CHECK(c.segments()[0] == a.segments()[0]);
  CHECK(c.segments()[1] == b.segments()[0]);
}

TEST_CASE("apply_matrix acts on coordinates") {
  auto y = poly_path({up("t"), up("t^2"), up("t^3")});
  RationalMatrix a(2, 3, std::vector<Rational>{1, 2, 3, 4, 5, 6});
  auto z = apply_matrix(a, y);
  CHECK(z == poly_path({up("t + 2 t^2 + 3 t^3"), up("4 t + 5 t^2 + 6 t^3")}));
  auto tb = make_table({"b"});
  PolyMatrix pa(1, 3, std::vector<MultiPoly>{MultiPoly::variable(tb, 0), MultiPoly(tb), MultiPoly(tb)});
  CHECK(apply_matrix(pa, y).segments()[0][0].to_string() == "b t");
}

TEST_CASE("substitute_path evaluates from the running start point") {
  auto s = make_table({"x", "y"});
  std::vector<MultiPoly> p{MultiPoly::parse("x^2", s), MultiPoly::parse("y^3", s), MultiPoly::parse("x - y", s)};
  auto x = poly_path({up("t"), up("t^2")});
  auto y = substitute_path(p, x);
  CHECK(y == poly_path({up("t^2"), up("t^6"), up("t - t^2")}));
  // second linear piece starts at (1, 0): x^2 becomes (1 + t)^2 - 1
  RationalMatrix m(2, 2, std::vector<Rational>{1, 0, 0, 1});
  auto q = substitute_path({MultiPoly::parse("x^2", s)}, pw_lin_path(m));
  REQUIRE(q.segments().size() == 2);
  CHECK(q.segments()[0][0] == up("t^2"));
  CHECK(q.segments()[1][0].is_zero());
  RationalMatrix m2(2, 2, std::vector<Rational>{1, 1, 0, 0});
  auto q2 = substitute_path({MultiPoly::parse("x^2", s)}, pw_lin_path(m2));
  CHECK(q2.segments()[1][0] == up("t^2 + 2 t"));
  CHECK_THROWS_AS(substitute_path({MultiPoly::parse("x", make_table({"x"}))}, x), Error);
}
