#include "doctest.h"
#include "mvlift/analysis.hpp"
#include "mvlift/error.hpp"
#include "mvlift/oracle.hpp"
#include "mvlift/roots.hpp"
#include "mvlift/sysio.hpp"
#include "oracles.hpp"

#include <random>

using namespace mvlift;

namespace {

const char* kEx1 = "vars: x1 x2\n(1 - x1^2)*x2 + 2\n(1 - x1)^2*x2 + 3\n";
const char* kThreeVar =
    "vars: x1 x2 x3\n"
    "1 + x1^2*x2^2 + x1^2*x2^4 + x3^2 + x1*x3 + x2*x3\n"
    "1 + x1^2*x2^2 + x1^2*x2^4 + 2*x3^2 + x1*x3 + x2*x3\n"
    "2 + x1*x2 + x1^2*x2^2 + x1^2*x2^4 + x3^2 + x1*x3 + x2*x3\n";

LaurentPolynomial dense_random(std::mt19937_64& rng, std::size_t dim, Int degree) {
  std::uniform_int_distribution<Int> c(-1000, 1000);
  LaurentPolynomial f(dim);
  Exponent e(dim, 0);
  // All exponents with total degree <= degree (dim 2 only).
  for (Int a = 0; a <= degree; ++a)
    for (Int b = 0; a + b <= degree; ++b) {
      Int v = 0;
      while (v == 0) v = c(rng);
      f.add_term({a, b}, GaussianRational(v));
    }
  return f;
}

std::vector<LatticePolytope> drop_one_vertex(std::mt19937_64& rng, const std::vector<LatticePolytope>& tuple) {
  std::vector<LatticePolytope> out = tuple;
  std::uniform_int_distribution<std::size_t> which(0, tuple.size() - 1);
  std::size_t i = which(rng);
  const auto& verts = tuple[i].vertices();
  if (verts.size() < 2) return out;
  std::uniform_int_distribution<std::size_t> v(0, verts.size() - 1);
  std::size_t skip = v(rng);
  std::vector<Point> kept;
  for (std::size_t k = 0; k < verts.size(); ++k)
    if (k != skip) kept.push_back(verts[k]);
  out[i] = convex_hull(tuple[i].ambient_dim(), kept);
  return out;
}

}  // namespace

TEST_CASE("rational roots") {
  auto x = std::vector<std::string>{"x"};
  auto r = find_rational_roots(parse_polynomial("1 - x^2", x));
  REQUIRE(r.roots.size() == 2);
  CHECK_FALSE(r.irrational_roots);
  auto d = find_rational_roots(parse_polynomial("(1 - x)^2", x));
  REQUIRE(d.roots.size() == 1);
  CHECK(d.roots[0].value == GaussianRational(1));
  CHECK(d.roots[0].multiplicity == 2);
  auto none = find_rational_roots(parse_polynomial("x^2 + 1/2", x));
  CHECK(none.roots.empty());
  CHECK(none.irrational_roots);
  auto gauss = find_rational_roots(parse_polynomial("x^3*(4*x^2 + 1)*(3*x - 2)", x));
  CHECK(gauss.roots.size() == 3);
  CHECK_FALSE(gauss.irrational_roots);
  auto laurent = find_rational_roots(parse_polynomial("x - x^-1", x));
  CHECK(laurent.roots.size() == 2);
}

TEST_CASE("bkk bounds of the worked examples") {
  CHECK(bkk_bound(parse_system(kEx1)) == 2);
  CHECK(bkk_bound(parse_system(kThreeVar)) == 16);
  CHECK(bkk_bound(parse_system("vars: a b c\na + 2*b - c + 1\n3*a - b + c - 2\na + b + c + 5\n")) == 1);
  CHECK_THROWS_AS(bkk_bound(parse_system("vars: a b\na + b\n")), PreconditionError);
}

TEST_CASE("facial systems") {
  auto s = parse_system(kEx1);
  auto f = facial_system(s, Direction({0, 1}));
  CHECK(f[0] == parse_polynomial("(1 - x1^2)*x2", s.variables()));
  CHECK(f[1] == parse_polynomial("(1 - x1)^2*x2", s.variables()));
  auto t = parse_system(kThreeVar);
  auto g = facial_system(t, Direction({0, 0, -1}));
  CHECK(g[0] == parse_polynomial("1 + x1^2*x2^2 + x1^2*x2^4", t.variables()));
  CHECK(g[1] == g[0]);
  CHECK(g[2] == parse_polynomial("2 + x1*x2 + x1^2*x2^2 + x1^2*x2^4", t.variables()));
  for (const auto& p : facial_system(s, Direction({1, 1})).polynomials()) CHECK(p.is_monomial());
}

TEST_CASE("example 1 is degenerate along (0,1)") {
  auto s = parse_system(kEx1);
  AnalysisReport r = find_degenerate_directions(s);
  CHECK(r.bkk_bound == 2);
  auto solvable = r.with_status(FacialStatus::solvable);
  REQUIRE(solvable.size() == 1);
  CHECK(solvable[0]->u == Direction({0, 1}));
  REQUIRE(solvable[0]->witness);
  CHECK((*solvable[0]->witness)[0] == GaussianRational(1));
  CHECK(r.with_status(FacialStatus::unknown).empty());
  for (const auto& d : r.directions)
    if (d.witness) {
      PolySystem fac = facial_system(s, d.u);
      for (const auto& f : fac.polynomials()) CHECK(f.evaluate(*d.witness).is_zero());
    }
}

TEST_CASE("three-variable example is solvable along -e3") {
  auto s = parse_system(kThreeVar);
  DirectionReport d = analyze_direction(s, Direction({0, 0, -1}));
  CHECK(d.status == FacialStatus::solvable);
  CHECK(d.certificate == "resultant");
  CHECK_FALSE(d.witness);
  AnalysisReport r = find_degenerate_directions(s);
  bool found = false;
  for (const auto* p : r.with_status(FacialStatus::solvable)) found = found || p->u == Direction({0, 0, -1});
  CHECK(found);
}

TEST_CASE("serial and parallel scans agree") {
  auto s = parse_system(kThreeVar);
  auto a = find_degenerate_directions(s, Execution::serial);
  auto b = find_degenerate_directions(s, Execution::parallel);
  REQUIRE(a.directions.size() == b.directions.size());
  for (std::size_t k = 0; k < a.directions.size(); ++k) {
    CHECK(a.directions[k].u == b.directions[k].u);
    CHECK(a.directions[k].status == b.directions[k].status);
  }
}

TEST_CASE("generic dense bivariate systems have no degenerate direction") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Int deg = 1 + trial % 3;
    PolySystem s({"x", "y"}, {dense_random(rng, 2, deg), dense_random(rng, 2, deg)});
    AnalysisReport r = find_degenerate_directions(s);
    CHECK(r.with_status(FacialStatus::no_solution).size() == r.directions.size());
    CHECK(count_torus_solutions_2d(s).count == static_cast<std::size_t>(r.bkk_bound));
  }
}

TEST_CASE("touch sets") {
  auto p = convex_hull(2, {{0, 0}, {2, 0}, {0, 2}});
  std::vector<LatticePolytope> orig{p, p};
  CHECK(touch_set(orig, orig, Direction({1, 1})) == std::vector<std::size_t>{0, 1});
  std::vector<LatticePolytope> inner{p, convex_hull(2, {{0, 0}})};
  CHECK(touch_set(orig, inner, Direction({1, 0})) == std::vector<std::size_t>{0});
  CHECK(touch_set(orig, inner, Direction({-1, -1})) == std::vector<std::size_t>{0, 1});
  std::vector<LatticePolytope> outside{p, convex_hull(2, {{3, 3}})};
  CHECK_THROWS_AS(touch_set(orig, outside, Direction({1, 0})), PreconditionError);
}

TEST_CASE("strict decrease matches the mixed volume drop") {
  std::mt19937_64 rng(23);
  int drops = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + trial % 2;
    std::vector<LatticePolytope> tuple;
    for (std::size_t i = 0; i < n; ++i) tuple.push_back(convex_hull(n, oracle::random_points(rng, n, 2 + trial % 5, 0, 3)));
    auto smaller = drop_one_vertex(rng, tuple);
    bool expect = mixed_volume(tuple) > mixed_volume(smaller);
    drops += expect;
    StrictDecrease s = strict_decrease(tuple, smaller);
    CHECK(s.decreases == expect);
    CHECK(s.witness.has_value() == expect);
  }
  CHECK(drops > 10);
  std::vector<LatticePolytope> same{convex_hull(2, {{0, 0}, {1, 0}, {0, 1}}), convex_hull(2, {{0, 0}, {1, 1}})};
  CHECK_FALSE(strict_decrease(same, same).decreases);
}
