#include "doctest.h"
#include "mvlift/algebra.hpp"
#include "mvlift/error.hpp"
#include "mvlift/sysio.hpp"

#include <random>

using namespace mvlift;

namespace {

const std::vector<std::string> xy{"x1", "x2"};
LaurentPolynomial P(const std::string& s, const std::vector<std::string>& v = xy) { return parse_polynomial(s, v); }

LaurentPolynomial random_poly(std::mt19937_64& rng, std::size_t dim, std::size_t terms, Int max_exp, Int lo = 0) {
  std::uniform_int_distribution<Int> e(lo, max_exp), c(-9, 9);
  LaurentPolynomial f(dim);
  while (f.size() < terms) {
    Exponent a(dim);
    for (auto& x : a) x = e(rng);
    Int v = c(rng);
    if (v != 0) f.add_term(a, GaussianRational(v));
  }
  return f;
}

}  // namespace

TEST_CASE("newton polytopes") {
  auto f1 = P("(1 - x1^2)*x2 + 2");
  CHECK(newton_polytope(f1) == convex_hull(2, {{0, 0}, {0, 1}, {2, 1}}));
  CHECK(newton_polytope(P("5")).vertices() == std::vector<Point>{{0, 0}});
  CHECK(newton_polytope(P("1 + x1^2 + x1^2*x2^2")) == convex_hull(2, {{0, 0}, {2, 0}, {2, 2}}));
  CHECK_THROWS_AS(newton_polytope(LaurentPolynomial(2)), PreconditionError);
}

TEST_CASE("facial restriction") {
  CHECK(facial_restriction(P("2 + x2 - x1^2*x2"), IntVector{0, 1}) == P("x2 - x1^2*x2"));
  CHECK(facial_restriction(P("2 + x2 - x1^2*x2"), IntVector{1, 0}) == P("-x1^2*x2"));
  std::vector<std::string> v3{"x1", "x2", "x3"};
  auto f3 = P("x1^2*x2^4 + x1^2*x2^2 + x1*x2 + 2 + x3*x1 + x3^2", v3);
  CHECK(facial_restriction(f3, IntVector{0, 0, -1}) == P("2 + x1*x2 + x1^2*x2^2 + x1^2*x2^4", v3));
}

TEST_CASE("division by a linear factor") {
  auto [q, r] = divide_linear(P("1 + x1^2 + x1^2*x2^2"), 0, GaussianRational(2));
  CHECK(q == P("x1*x2^2 + 2*x2^2 + x1 + 2"));
  CHECK(r == P("4*x2^2 + 5"));
  auto [q0, r0] = divide_linear(P("3 + x2"), 0, GaussianRational(5));
  CHECK(q0.is_zero());
  CHECK(r0 == P("3 + x2"));
  CHECK_THROWS_AS(divide_linear(P("x1^-1 + 1"), 0, GaussianRational(1)), PreconditionError);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    auto g = random_poly(rng, 3, 1 + t % 5, 3);
    GaussianRational alpha(Rational(1 + t % 7, 1 + t % 3), Rational(t % 2));
    LaurentPolynomial lin = LaurentPolynomial::variable(3, t % 3) - LaurentPolynomial::constant(3, alpha);
    auto [qq, rr] = divide_linear(g * lin, t % 3, alpha);
    CHECK(rr.is_zero());
    CHECK(qq == g);
    auto f = random_poly(rng, 3, 1 + t % 6, 3);
    auto [q2, r2] = divide_linear(f, t % 3, alpha);
    CHECK(q2 * lin + r2 == f);
    CHECK_FALSE(r2.uses_variable(t % 3));
  }
}

TEST_CASE("univariate gcd") {
  auto g = gcd_univariate(P("1 - x1^2"), P("1 - 2*x1 + x1^2"), 0);
  CHECK(g == P("x1 - 1"));
  CHECK(gcd_univariate(P("2*x1^2 + 4"), P("2*x1^2 + 4"), 0) == P("x1^2 + 2"));
  CHECK(gcd_univariate(P("x1 + 1"), P("x1 + 2"), 0) == P("1"));
  CHECK_THROWS_AS(gcd_univariate(P("x1*x2"), P("x1"), 0), PreconditionError);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    auto a = random_poly(rng, 1, 1 + t % 4, 4);
    auto b = random_poly(rng, 1, 1 + t % 3, 4);
    auto c = random_poly(rng, 1, 2, 2);
    auto d = gcd(to_univariate(a * c, 0), to_univariate(b * c, 0));
    CHECK(divmod(to_univariate(a * c, 0), d).second.is_zero());
    CHECK(divmod(to_univariate(b * c, 0), d).second.is_zero());
    CHECK(divmod(d, to_univariate(c, 0)).second.is_zero());
  }
}

TEST_CASE("monomial changes") {
  PolySystem ex1 = parse_system("vars: x1 x2\n(1 - x1^2)*x2 + 2\n(1 - x1)^2*x2 + 3\n");
  CHECK(apply_monomial_change(ex1, MonomialChange::identity(2, 2)) == ex1);
  MonomialChange flip{{{1, 0}, {0, -1}}, {{0, 1}, {0, 1}}};
  PolySystem flipped = apply_monomial_change(ex1, flip);
  CHECK(flipped[0] == P("1 - x1^2 + 2*x2"));
  CHECK(flipped[1] == P("1 - 2*x1 + x1^2 + 3*x2"));
  CHECK(mixed_volume(newton_polytopes(flipped)) == mixed_volume(newton_polytopes(ex1)));
  MonomialChange bad{{{2, 0}, {0, 1}}, {{0, 0}, {0, 0}}};
  CHECK_THROWS_AS(apply_monomial_change(ex1, bad), PreconditionError);
  // Point maps are mutually inverse and respect evaluation up to the shift monomial.
  MonomialChange t{{{2, 1}, {1, 1}}, {{0, 0}, {0, 0}}};
  std::vector<GaussianRational> x{GaussianRational(Rational(2, 3)), GaussianRational(Rational(1), Rational(1))};
  auto z = t.forward_point(x);
  CHECK(t.backward_point(z) == x);
  auto mapped = apply_monomial_change(ex1, t);
  CHECK(mapped[0].evaluate(z) == ex1[0].evaluate(x));
}

TEST_CASE("normalization") {
  PolySystem ex1 = parse_system("vars: x1 x2\n(1 - x1^2)*x2 + 2\n(1 - x1)^2*x2 + 3\n");
  auto n = normalize_to_direction(ex1, Direction({0, 1}));
  CHECK(n.constant_terms);
  CHECK(n.change.matrix == IntMatrix{{1, 0}, {0, -1}});
  CHECK(n.system[0] == P("1 - x1^2 + 2*x2"));
  CHECK(n.system[1] == P("1 - 2*x1 + x1^2 + 3*x2"));
  auto id = normalize_to_direction(n.system, Direction({0, -1}));
  CHECK(id.change.matrix == identity_matrix(2));
  CHECK(id.system == n.system);

  std::mt19937_64 rng(9);
  std::uniform_int_distribution<Int> dir(-3, 3);
  std::vector<std::string> v3{"a", "b", "c"};
  int with_constants = 0;
  for (int t = 0; t < 150; ++t) {
    std::size_t d = 2 + t % 2;
    std::vector<std::string> vars(v3.begin(), v3.begin() + static_cast<std::ptrdiff_t>(d));
    std::vector<LaurentPolynomial> polys;
    for (std::size_t k = 0; k < d; ++k) polys.push_back(random_poly(rng, d, 2 + (t + k) % 4, 3, -2));
    PolySystem sys(vars, polys);
    IntVector u(d);
    do {
      for (auto& x : u) x = dir(rng);
    } while (is_zero(u));
    Direction du = Direction::primitive_of(u);
    auto out = normalize_to_direction(sys, du);
    CHECK(is_unimodular(out.change.matrix));
    IntVector minus_ed(d, 0);
    minus_ed[d - 1] = -1;
    for (std::size_t k = 0; k < d; ++k) {
      const auto& p = out.system[k];
      CHECK_FALSE(p.has_negative_exponents());
      CHECK(p.min_exponent(d - 1) == 0);
      // The face in direction u maps onto the face in direction -e_d.
      auto image = apply_monomial_change(PolySystem(vars, {facial_restriction(sys[k], du)}),
                                         {out.change.matrix, {out.change.shifts[k]}});
      CHECK(image[0] == facial_restriction(p, minus_ed));
      if (out.constant_terms) CHECK_FALSE(facial_restriction(p, minus_ed).coefficient(Exponent(d, 0)).is_zero());
    }
    if (d == 2) CHECK(out.constant_terms);
    with_constants += out.constant_terms;
    CHECK(mixed_volume(newton_polytopes(out.system)) == mixed_volume(newton_polytopes(sys)));
  }
  CHECK(with_constants > 100);
}
