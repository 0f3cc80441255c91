#include <doctest.h>

#include "algext/poly.hpp"

using namespace algext;

namespace {
const std::vector<std::string> xy = {"x", "y"};
}

TEST_CASE("monomial ordering is graded lex") {
  // 1 < y < x < y^2 < x*y < x^2
  Monomial one(2);
  Monomial x = Monomial::var(2, 0);
  Monomial y = Monomial::var(2, 1);
  Monomial x2 = Monomial::var(2, 0, 2);
  Monomial y2 = Monomial::var(2, 1, 2);
  Monomial xym = x * y;
  CHECK(one < y);
  CHECK(y < x);
  CHECK(x < y2);
  CHECK(y2 < xym);
  CHECK(xym < x2);
}

TEST_CASE("parser and arithmetic") {
  MultiPoly p = parse_poly("x^2 + 2*x*y + y^2", xy);
  MultiPoly q = parse_poly("x + y", xy);
  CHECK(p == q * q);
  CHECK((p - q * q).is_zero());

  MultiPoly r = parse_poly("1/2*x - 1/2*x", xy);
  CHECK(r.is_zero());

  CHECK(parse_poly("-x + x", xy).is_zero());
  CHECK(parse_poly("(x + y)^3", xy) == q.pow(3));
  CHECK(parse_poly("0", xy).is_zero());
  CHECK(parse_poly("3/4", xy).constant_term() == Rational(3, 4));
}

TEST_CASE("parser failures carry a position") {
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_poly("x + z", xy)),
                       doctest::Contains("unknown variable"), Error);
  CHECK_THROWS_WITH_AS(static_cast<void>(parse_poly("x +", xy)),
                       doctest::Contains("position"), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_poly("x ^ y", xy)), Error);
  CHECK_THROWS_AS(static_cast<void>(parse_poly("(x", xy)), Error);
}

TEST_CASE("substitution") {
  // f(x, y) = x^2 + y, substitute x -> u + v, y -> u*v
  MultiPoly f = parse_poly("x^2 + y", xy);
  std::vector<std::string> uv = {"u", "v"};
  std::vector<MultiPoly> subs = {parse_poly("u + v", uv), parse_poly("u*v", uv)};
  CHECK(f.substitute(subs) == parse_poly("u^2 + 2*u*v + v^2 + u*v", uv));

  // remap into a bigger variable set
  std::vector<std::string> big = {"a", "b", "c"};
  MultiPoly g = parse_poly("x*y", xy).remap_vars({0, 2}, 3);
  CHECK(g == parse_poly("a*c", big));
}

TEST_CASE("degree filters") {
  MultiPoly f = parse_poly("x^3 + x*y + 2*x + 5", xy);
  CHECK(f.total_degree() == 3);
  CHECK(f.truncate_above(2) == parse_poly("x*y + 2*x + 5", xy));
  CHECK(f.homogeneous_part(1) == parse_poly("2*x", xy));
  CHECK(f.homogeneous_part(2) == parse_poly("x*y", xy));
  CHECK(f.constant_term() == 5);
}

TEST_CASE("printing round-trips") {
  for (const std::string s : {"x^2 + 2*x*y + y^2", "-x + 1/2", "x*y - y", "0", "7"}) {
    MultiPoly p = parse_poly(s, xy);
    CHECK(parse_poly(poly_string(p, xy), xy) == p);
  }
  CHECK(poly_string(parse_poly("y + x", xy), xy) == "x + y");
  CHECK(poly_string(MultiPoly(2), xy) == "0");
}

TEST_CASE("coordinate names") {
  auto names = coordinate_names(2, true);
  CHECK(names == std::vector<std::string>{"x1", "x2", "y1", "y2"});
  CHECK(coordinate_names(1, false) == std::vector<std::string>{"x1"});
}
