#include "doctest.h"
#include "mvlift/error.hpp"
#include "mvlift/sysio.hpp"

#include <random>

using namespace mvlift;

TEST_CASE("parse example system") {
  auto sys = parse_system("vars: x1 x2\n(1 - x1^2)*x2 + 2\n(1 - x1)^2*x2 + 3");
  REQUIRE(sys.size() == 2);
  CHECK(sys[0].support() == std::vector<Exponent>{{2, 1}, {0, 1}, {0, 0}});
  CHECK(sys[1].support() == std::vector<Exponent>{{2, 1}, {1, 1}, {0, 1}, {0, 0}});
  CHECK(sys[1].coefficient({1, 1}) == GaussianRational(-2));
}

TEST_CASE("literal forms") {
  auto sys = parse_system("vars: x y\n(1/2 + 3i)*x*y^-2 + 1");
  CHECK(sys[0].coefficient({1, -2}) == GaussianRational(Rational(1, 2), Rational(3)));
  CHECK(sys[0].coefficient({0, 0}) == GaussianRational(1));
  auto s2 = parse_system("# leading comment\n\nvars: x y\n2x y - x*-y  # trailing\n(x y)^-1 + x/4\n");
  CHECK(s2[0] == parse_polynomial("3*x*y", {"x", "y"}));
  CHECK(s2[1].coefficient({-1, -1}) == GaussianRational(1));
  CHECK(s2[1].coefficient({1, 0}) == GaussianRational(Rational(1, 4)));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_system("vars: x\nx - x"), ParseError);
  CHECK_THROWS_AS(parse_system("x + 1"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: x x\nx"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: x i\nx"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: x\n1.5*x"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: x\nx/x"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: x\n(x+1)^-1"), ParseError);
  try {
    parse_system("vars: x y\nx + 1\nx + z");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
    CHECK(e.offset() == 20);
  }
  try {
    parse_system("vars: x\nx + (1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() <= 7);
  }
}

TEST_CASE("canonical serialization") {
  auto sys = parse_system("vars: x1 x2\n(1 - x1^2)*x2 + 2\n(1 - x1)^2*x2 + 3");
  CHECK(serialize_system(sys) == "vars: x1 x2\n-x1^2*x2 + x2 + 2\nx1^2*x2 - 2*x1*x2 + x2 + 3\n");
  PolySystem empty({"a", "b"}, {});
  CHECK(serialize_system(empty) == "vars: a b\n");
  CHECK(parse_system(serialize_system(empty)) == empty);
}

TEST_CASE("round trip on random systems") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<Int> e(-3, 4), c(-20, 20), n(1, 4);
  for (int t = 0; t < 300; ++t) {
    std::size_t d = 1 + t % 4;
    std::vector<std::string> vars;
    for (std::size_t k = 0; k < d; ++k) vars.push_back("v" + std::to_string(k));
    std::vector<LaurentPolynomial> polys;
    for (int k = 0; k < 1 + t % 3; ++k) {
      LaurentPolynomial f(d);
      for (int j = 0; j < 1 + (t + k) % 6; ++j) {
        Exponent a(d);
        for (auto& x : a) x = e(rng);
        f.add_term(a, GaussianRational(Rational(c(rng), n(rng)), Rational(t % 3 == 0 ? c(rng) : 0, n(rng))));
      }
      if (!f.is_zero()) polys.push_back(f);
    }
    PolySystem sys(vars, polys);
    std::string text = serialize_system(sys);
    CHECK(parse_system(text) == sys);
    CHECK(serialize_system(parse_system(text)) == text);
  }
}
