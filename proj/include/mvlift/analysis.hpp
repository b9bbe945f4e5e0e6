#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlift/algebra.hpp"
#include "mvlift/parallel.hpp"
#include "mvlift/polytope.hpp"

namespace mvlift {

enum class FacialStatus { solvable, no_solution, unknown };

std::string to_string(FacialStatus s);

/// Whether one lifting strategy applies along a direction, and if not, the
/// first precondition that failed.
struct StrategyCheck {
  std::string strategy;
  bool applicable = false;
  std::string condition;
  std::string detail;
};

struct DirectionReport {
  explicit DirectionReport(Direction dir) : u(std::move(dir)) {}

  Direction u;
  FacialStatus status = FacialStatus::unknown;
  /// How the status was decided: "monomial", "gcd", "common_factor",
  /// "resultant", "single_polynomial" or "none".
  std::string certificate = "none";
  /// Torus point (original coordinates) where every facial polynomial vanishes.
  std::optional<std::vector<GaussianRational>> witness;
  /// Monic gcd or resultant factor behind the decision, in the normalised
  /// coordinates; text over the original variable names with x_d dropped.
  std::optional<std::string> certificate_polynomial;
  /// Numerical remarks for undecided directions. Never used for a verdict.
  std::string note;
  std::vector<StrategyCheck> strategies;
};

struct AnalysisReport {
  Integer bkk_bound;
  std::vector<DirectionReport> directions;

  std::vector<const DirectionReport*> with_status(FacialStatus s) const;
};

/// Mixed volume of the Newton polytopes. PreconditionError("square_system").
Integer bkk_bound(const PolySystem& sys);

PolySystem facial_system(const PolySystem& sys, const Direction& u);

/// Exact torus solvability of the facial system along u, where decidable.
DirectionReport analyze_direction(const PolySystem& sys, const Direction& u);

/// Scans one representative of every cone of the common refinement of the
/// normal fans.
AnalysisReport find_degenerate_directions(const PolySystem& sys, Execution exec = Execution::parallel);

/// T_u = {i : P_i' meets face_u(P_i)}. PreconditionError("containment").
std::vector<std::size_t> touch_set(std::span<const LatticePolytope> original, std::span<const LatticePolytope> shrunken,
                                   const Direction& u);

struct StrictDecrease {
  bool decreases = false;
  std::optional<Direction> witness;
};

/// MV(P') < MV(P) decided through the face criterion: some u for which
/// {P_i^u : i in T_u} u {P_i' : i not in T_u} is essential.
StrictDecrease strict_decrease(std::span<const LatticePolytope> original, std::span<const LatticePolytope> shrunken,
                               Execution exec = Execution::parallel);

}  // namespace mvlift
