#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvlift/algebra.hpp"
#include "mvlift/analysis.hpp"
#include "mvlift/roots.hpp"

namespace mvlift {

enum class Strategy { division, lindep, bigcd, monomial };

std::string to_string(Strategy s);
/// Accepts "division", "lindep", "bigcd", "monomial".
Strategy parse_strategy(const std::string& name);

/// A lifted system of d + k polynomials in the d original variables followed
/// by y1..yk. The last k polynomials are y_j - p_j with p_j free of the y's.
struct LiftResult {
  PolySystem lifted;
  Strategy strategy = Strategy::division;
  std::optional<Direction> u;
  /// The original system after the monomial change; resubstitution gives it back.
  PolySystem normalized;
  MonomialChange change;

  std::vector<GaussianRational> alpha;          // division
  std::optional<GaussianRational> lambda;       // lindep: f_i1^u = lambda f_i2^u
  std::size_t i1 = 0, i2 = 0;                   // lindep
  std::optional<LaurentPolynomial> gcd_factor;  // bigcd, monic in x1
  std::size_t m = 0;                            // bigcd
  std::optional<Exponent> monomial;             // monomial

  Integer mv_before;
  Integer mv_after;
  /// Departures from the expected accounting that are not defects.
  std::vector<std::string> diagnostics;

  std::size_t original_dim() const { return normalized.dim(); }
  std::size_t lift_count() const { return lifted.dim() - normalized.dim(); }
};

struct DivisionOptions {
  std::size_t k = 1;
  /// Facial root (alpha_1..alpha_k); found automatically when empty and k = 1.
  std::vector<GaussianRational> alpha;
};

/// Throws PreconditionError naming the failed condition: "square_system",
/// "lift_count", "not_divisible_by_last", "saturated_facial_system",
/// "alpha", "alpha_not_representable", "facial_vanishing", "mixed_volume_n".
LiftResult lift_division(const PolySystem& sys, const Direction& u, const DivisionOptions& options = {});

/// Conditions: "square_system", "distinct_indices", "dependency",
/// "essential_facial_tuple", "not_facial".
LiftResult lift_linear_dependent(const PolySystem& sys, const Direction& u, std::size_t i1, std::size_t i2);

/// Conditions: "bivariate", "constant_terms", "gcd_degree".
LiftResult lift_bivariate_gcd(const PolySystem& sys, const Direction& u);

/// Conditions: "square_system", "monomial_exponent", "vacuous_substitution".
LiftResult lift_monomial(const PolySystem& sys, const Exponent& a);

/// Eliminates the y's through the last k polynomials.
PolySystem resubstitute(const PolySystem& lifted, std::size_t original_dim);
PolySystem resubstitute(const LiftResult& lift);

/// Every applicable strategy along every solvable direction; the others get a
/// single "facial_solvable" entry.
void assess_strategies(const PolySystem& sys, AnalysisReport& report);

struct AutoLift {
  std::optional<LiftResult> lift;
  /// One line per attempt: direction, strategy, outcome.
  std::vector<std::string> attempts;
};

/// Tries bigcd (d = 2), lindep, then division (k = 1) along every solvable
/// direction and keeps the first lift with the largest exact reduction.
AutoLift auto_lift(const PolySystem& sys);
/// Same search restricted to one strategy.
AutoLift auto_lift(const PolySystem& sys, std::optional<Strategy> only);

}  // namespace mvlift
