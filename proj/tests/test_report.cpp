#include "doctest.h"
#include "mvlift/error.hpp"
#include "mvlift/report.hpp"
#include "mvlift/sysio.hpp"
#include "mvlift/verify.hpp"

using namespace mvlift;

namespace {

const char* kEx1 = "vars: x1 x2\n(1 - x1^2)*x2 + 2\n(1 - x1)^2*x2 + 3\n";

}  // namespace

TEST_CASE("analysis json uses the documented field names") {
  auto s = parse_system(kEx1);
  AnalysisReport r = find_degenerate_directions(s);
  assess_strategies(s, r);
  Json j = analysis_to_json(r);
  CHECK(j["bkk_bound"] == 2);
  REQUIRE(j["degenerate_directions"].is_array());
  bool solvable = false;
  for (const auto& d : j["degenerate_directions"]) {
    CHECK(d.contains("u"));
    CHECK(d.contains("witness"));
    std::string status = d["status"];
    CHECK((status == "solvable" || status == "no_solution" || status == "unknown"));
    if (status == "solvable") {
      solvable = true;
      CHECK(d["u"] == Json::array({0, 1}));
      CHECK(d["witness"][0] == "1");
    }
  }
  CHECK(solvable);
  CHECK(j["strategies"].is_array());
  CHECK(j.dump() == analysis_to_json(r).dump());
}

TEST_CASE("lifted file carries its provenance") {
  auto s = parse_system(kEx1);
  LiftResult lift = lift_bivariate_gcd(s, Direction({0, 1}));
  std::string text = serialize_lift(lift);
  CHECK(parse_system(text) == lift.lifted);
  auto prov = read_provenance(text);
  REQUIRE(prov);
  CHECK((*prov)["strategy"] == "bigcd");
  CHECK((*prov)["gcd"] == "x1 - 1");
  CHECK((*prov)["mv_before"] == 2);
  CHECK((*prov)["mv_after"] == 1);
  MonomialChange c = change_from_json(prov->at("transform"));
  CHECK(c.matrix == lift.change.matrix);
  CHECK(c.shifts == lift.change.shifts);
  CHECK_FALSE(read_provenance(serialize_system(s)));
  CHECK_THROWS_AS(read_provenance("vars: x\n# provenance: {oops\nx\n"), ValidationError);
  CHECK_THROWS_AS(change_from_json(Json{{"matrix", {{2, 0}, {0, 1}}}, {"shifts", {{0, 0}, {0, 0}}}}),
                  ValidationError);
}

TEST_CASE("provenance keys per strategy") {
  auto s = parse_system(kEx1);
  CHECK(provenance_to_json(lift_division(s, Direction({0, 1}))).contains("alpha"));
  CHECK(provenance_to_json(lift_monomial(s, {0, 1}))["monomial"] == Json::array({0, 1}));
  CHECK(provenance_to_json(lift_monomial(s, {0, 1}))["u"].is_null());
  CHECK(integer_to_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
}

TEST_CASE("verification of lifts") {
  auto s = parse_system(kEx1);
  LiftResult lift = lift_division(s, Direction({0, 1}));
  VerifyReport ok = verify_lift(s, lift.lifted, lift.change);
  CHECK(ok.ok());
  REQUIRE(ok.solutions);
  CHECK(*ok.solutions == 1);
  CHECK(ok.extended == 1);
  // Without the transform the lift does not resubstitute to the raw input.
  CHECK_FALSE(verify_lift(s, lift.lifted, std::nullopt).resubstitution);
  auto published = parse_system("vars: x1 x2 y\ny*(1 + x1)*x2 + 2\ny*(1 - x1)*x2 + 3\ny - (1 - x1)\n");
  CHECK(verify_lift(s, published, std::nullopt).ok());
  auto wrong = parse_system("vars: x1 x2 y\ny*(1 + x1)*x2 + 2\ny*(1 - x1)*x2 + 3\ny - (1 + x1)\n");
  CHECK_FALSE(verify_lift(s, wrong, std::nullopt).ok());
  CHECK_THROWS_AS(verify_lift(s, s, std::nullopt), ValidationError);
}

TEST_CASE("relative residual") {
  auto f = parse_polynomial("x - 1", {"x"});
  CHECK(relative_residual(f, {std::complex<double>(1)}) == 0.0);
  CHECK(relative_residual(f, {std::complex<double>(3)}) == doctest::Approx(0.5));
}
