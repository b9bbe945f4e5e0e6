#include "doctest.h"
#include "mvlift/analysis.hpp"
#include "mvlift/error.hpp"
#include "mvlift/lifting.hpp"
#include "mvlift/oracle.hpp"
#include "mvlift/saturation.hpp"
#include "mvlift/sysio.hpp"
#include "planted.hpp"

#include <random>

using namespace mvlift;
using planted::nonzero;
using planted::triangle_poly;

namespace {

const char* kEx1 = "vars: x1 x2\n(1 - x1^2)*x2 + 2\n(1 - x1)^2*x2 + 3\n";
const char* kThreeVar =
    "vars: x1 x2 x3\n"
    "1 + x1^2*x2^2 + x1^2*x2^4 + x3^2 + x1*x3 + x2*x3\n"
    "1 + x1^2*x2^2 + x1^2*x2^4 + 2*x3^2 + x1*x3 + x2*x3\n"
    "2 + x1*x2 + x1^2*x2^2 + x1^2*x2^4 + x3^2 + x1*x3 + x2*x3\n";

std::string condition_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e.condition();
  }
  return "";
}

}  // namespace

TEST_CASE("strategy names") {
  CHECK(parse_strategy("bigcd") == Strategy::bigcd);
  CHECK(to_string(Strategy::lindep) == "lindep");
  CHECK_THROWS_AS(parse_strategy("newton"), ValidationError);
}

TEST_CASE("division lift of example 1") {
  auto s = parse_system(kEx1);
  LiftResult r = lift_division(s, Direction({0, 1}));
  CHECK(r.alpha == std::vector<GaussianRational>{GaussianRational(1)});
  CHECK(r.lifted.size() == 3);
  CHECK(r.lifted.variables() == std::vector<std::string>{"x1", "x2", "y1"});
  CHECK(r.mv_before == 2);
  CHECK(r.mv_after == 1);
  CHECK(r.diagnostics.empty());
  CHECK(resubstitute(r) == r.normalized);
  CHECK(r.normalized == parse_system("vars: x1 x2\n1 - x1^2 + 2*x2\n(1 - x1)^2 + 3*x2\n"));
  // The comparison tuple of the division construction meets the lift's faces only in h.
  LemmaPolytopes lemma = build_lemma_polytopes(r.normalized, 1);
  std::vector<LatticePolytope> big = lemma.p;
  big.insert(big.end(), lemma.delta.begin(), lemma.delta.end());
  auto lifted = newton_polytopes(r.lifted);
  CHECK(touch_set(big, lifted, Direction({0, -1, -1})) == std::vector<std::size_t>{2});
}

TEST_CASE("division lift preconditions") {
  auto s = parse_system(kEx1);
  CHECK(condition_of([&] { lift_division(s, Direction({0, 1}), {0, {}}); }) == "lift_count");
  CHECK(condition_of([&] { lift_division(s, Direction({0, 1}), {1, {GaussianRational(2)}}); }) == "facial_vanishing");
  CHECK(condition_of([&] { lift_division(s, Direction({0, 1}), {1, {GaussianRational(0)}}); }) == "alpha");
  // Facial parts are constants along -e_2.
  auto c = parse_system("vars: x y\n1 + x*y\n2 + x^2*y\n");
  CHECK(condition_of([&] { lift_division(c, Direction({0, -1})); }) == "facial_vanishing");
  // (1 + x1^2) x2 style facial part that is not 1-saturated in R^2 after normalisation.
  auto unsat = parse_system("vars: x1 x2 x3\n1 + x1^2 + x1^2*x2^2 + x3\nx1 - 1 + x2 + x3\n(x1 - 1)*x2 + x3*x1 + 1\n");
  CHECK(condition_of([&] { lift_division(unsat, Direction({0, 0, -1})); }) == "saturated_facial_system");
  // Common facial root x1 = sqrt(2) is outside Q(i).
  auto irr = parse_system("vars: x1 x2\nx1^2 - 2 + x2\n(x1^2 - 2)*(x1 + 3) + x1*x2\n");
  CHECK(condition_of([&] { lift_division(irr, Direction({0, -1})); }) == "alpha_not_representable");
  CHECK(analyze_direction(irr, Direction({0, -1})).note == "root exists, not exactly representable");
  auto rect = parse_system("vars: a b\na + b\na - b\nb\n");
  CHECK(condition_of([&] { lift_division(rect, Direction({0, 1})); }) == "square_system");
}

TEST_CASE("gcd lift of example 1") {
  auto s = parse_system(kEx1);
  LiftResult r = lift_bivariate_gcd(s, Direction({0, 1}));
  CHECK(r.m == 1);
  CHECK(*r.gcd_factor == parse_polynomial("x1 - 1", {"x1", "x2"}));
  CHECK(r.mv_before == 2);
  CHECK(r.mv_after == 1);
  CHECK(resubstitute(r) == r.normalized);
  CHECK(condition_of([&] { lift_bivariate_gcd(s, Direction({1, 1})); }) == "gcd_degree");
  auto three = parse_system(kThreeVar);
  CHECK(condition_of([&] { lift_bivariate_gcd(three, Direction({0, 0, -1})); }) == "bivariate");
}

TEST_CASE("dependency lift of the three-variable example") {
  auto s = parse_system(kThreeVar);
  LiftResult r = lift_linear_dependent(s, Direction({0, 0, -1}), 0, 1);
  CHECK(*r.lambda == GaussianRational(1));
  CHECK(r.mv_before == 16);
  CHECK(r.mv_after == 12);
  CHECK(r.normalized == s);
  CHECK(resubstitute(r) == s);
  auto expected = parse_system(
      "vars: x1 x2 x3 y1\n"
      "y1 + x3^2 + x1*x3 + x2*x3\n"
      "y1 + 2*x3^2 + x1*x3 + x2*x3\n"
      "2 + x1*x2 + x1^2*x2^2 + x1^2*x2^4 + x3^2 + x1*x3 + x2*x3\n"
      "y1 - (1 + x1^2*x2^2 + x1^2*x2^4)\n");
  CHECK(r.lifted == expected);
  CHECK(condition_of([&] { lift_linear_dependent(s, Direction({0, 0, -1}), 0, 2); }) == "dependency");
  CHECK(condition_of([&] { lift_linear_dependent(s, Direction({0, 0, -1}), 1, 1); }) == "distinct_indices");
  auto facial_only = parse_system("vars: a b\n1 + a\n2 + 2*a + b\n");
  CHECK(condition_of([&] { lift_linear_dependent(facial_only, Direction({0, -1}), 0, 1); }) == "not_facial");
}

TEST_CASE("dependency lift with a non-unit ratio") {
  auto s = parse_system("vars: a b\n2 + 2*a + a^2*b\n1 + a + b + a*b\n");
  LiftResult r = lift_linear_dependent(s, Direction({0, -1}), 0, 1);
  CHECK(*r.lambda == GaussianRational(2));
  CHECK(resubstitute(r) == r.normalized);
  CHECK(r.mv_after < r.mv_before);
}

TEST_CASE("monomial lift keeps the mixed volume") {
  auto s = parse_system(kEx1);
  LiftResult r = lift_monomial(s, {0, 1});
  CHECK(r.mv_before == 2);
  CHECK(r.mv_after == 2);
  CHECK(r.lifted.size() == 3);
  CHECK(resubstitute(r) == s);
  CHECK(condition_of([&] { lift_monomial(s, {3, 3}); }) == "vacuous_substitution");
  CHECK(condition_of([&] { lift_monomial(s, {0, 0}); }) == "monomial_exponent");
  CHECK(condition_of([&] { lift_monomial(s, {-1, 1}); }) == "monomial_exponent");
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    PolySystem t({"a", "b"}, {triangle_poly(rng, 2, 2, 3), triangle_poly(rng, 2, 3, 2)});
    Exponent a{trial % 2, 1};
    LiftResult m = lift_monomial(t, a);
    CHECK(m.mv_before == m.mv_after);
    CHECK(resubstitute(m) == t);
  }
}

TEST_CASE("planted division instances drop by exactly one") {
  std::mt19937_64 rng(41);
  int accepted = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t d = 2 + trial % 2;
    GaussianRational alpha(Rational(nonzero(rng, 3)), Rational(trial % 3 == 0 ? 1 : 0));
    PolySystem s = planted::division(rng, d, alpha);
    IntVector down(d, 0);
    down.back() = -1;
    try {
      LiftResult r = lift_division(s, Direction(down), {1, {alpha}});
      ++accepted;
      CHECK(r.mv_before - r.mv_after == 1);
      CHECK(r.diagnostics.empty());
      CHECK(resubstitute(r) == r.normalized);
    } catch (const PreconditionError& e) {
      MESSAGE("rejected: " << e.condition());
    }
  }
  CHECK(accepted >= 30);
}

TEST_CASE("planted gcd of degree two") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    PolySystem s = planted::gcd(rng, 2);
    LiftResult r = lift_bivariate_gcd(s, planted::down(2));
    CHECK(r.m >= 2);
    CHECK(r.mv_before - r.mv_after >= Integer(r.m));
    CHECK(resubstitute(r) == r.normalized);
  }
}

TEST_CASE("planted dependencies") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 2 + trial % 2;
    GaussianRational lambda(Rational(nonzero(rng, 4)), Rational(trial % 2));
    PolySystem s = planted::dependent(rng, d, lambda);
    LiftResult r = lift_linear_dependent(s, planted::down(d), 0, 1);
    CHECK(*r.lambda == lambda);
    CHECK(r.mv_after < r.mv_before);
    CHECK(resubstitute(r) == r.normalized);
  }
}

TEST_CASE("lifted systems keep the torus solutions") {
  auto s = parse_system(kEx1);
  LiftResult r = lift_bivariate_gcd(s, Direction({0, 1}));
  SolutionCount c = count_torus_solutions_2d(s);
  REQUIRE(c.count == 1);
  using C = std::complex<double>;
  for (const auto& sol : c.solutions) {
    // Normalised coordinates z = x^(U^-1), then y from the last polynomial.
    IntMatrix inv = unimodular_inverse(r.change.matrix);
    std::vector<C> z(2, C(1));
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t i = 0; i < 2; ++i) z[j] *= std::pow(sol.point[i], static_cast<int>(inv[i][j]));
    LaurentPolynomial p = LaurentPolynomial::variable(3, 2) - r.lifted[2];
    std::vector<C> full{z[0], z[1], C(0)};
    full[2] = p.evaluate(full);
    for (const auto& f : r.lifted.polynomials()) CHECK(std::abs(f.evaluate(full)) < 1e-9);
  }
}

TEST_CASE("resubstitution of the published lifted system") {
  auto lifted = parse_system("vars: x1 x2 y\ny*(1 + x1)*x2 + 2\ny*(1 - x1)*x2 + 3\ny - (1 - x1)\n");
  CHECK(resubstitute(lifted, 2) == parse_system(kEx1));
  CHECK(bkk_bound(lifted) == 1);
}

TEST_CASE("strategy assessment and automatic lifting") {
  auto s = parse_system(kEx1);
  AnalysisReport rep = find_degenerate_directions(s);
  assess_strategies(s, rep);
  for (const auto& d : rep.directions) {
    REQUIRE_FALSE(d.strategies.empty());
    if (d.status == FacialStatus::solvable) {
      bool bigcd = false;
      for (const auto& c : d.strategies) bigcd = bigcd || (c.strategy == "bigcd" && c.applicable);
      CHECK(bigcd);
    }
  }
  AutoLift a = auto_lift(s);
  REQUIRE(a.lift);
  CHECK(a.lift->strategy == Strategy::bigcd);
  CHECK(a.lift->mv_after == 1);

  AutoLift b = auto_lift(parse_system(kThreeVar));
  REQUIRE(b.lift);
  CHECK(b.lift->strategy == Strategy::lindep);
  CHECK(b.lift->mv_before == 16);
  CHECK(b.lift->mv_after == 12);

  std::mt19937_64 rng(5);
  PolySystem generic({"x", "y"}, {triangle_poly(rng, 2, 2, 2), triangle_poly(rng, 2, 2, 2)});
  AutoLift c = auto_lift(generic);
  CHECK_FALSE(c.lift);
  CHECK(c.attempts.back() == "no applicable lifting");
}
