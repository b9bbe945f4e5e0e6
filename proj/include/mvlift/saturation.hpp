#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvlift/algebra.hpp"
#include "mvlift/polytope.hpp"

namespace mvlift {

/// conv{x - e_i, x - x_i e_i : x lattice point of P, x_i > 0}; empty if no such x.
LatticePolytope quotient_polytope(const LatticePolytope& p, std::size_t i);
/// conv{x - x_i e_i : x lattice point of P}.
LatticePolytope remainder_polytope(const LatticePolytope& p, std::size_t i);

/// conv((Q_i(P) + [0, e_i]) u R_i(P)).
LatticePolytope division_envelope(const LatticePolytope& p, std::size_t i);

struct SaturationStep {
  std::size_t index = 0;
  bool saturated = false;
  /// Lattice point of the division envelope outside the tested polytope.
  std::optional<Point> witness;
  /// Whether R_i equals the slice {x_i = 0} of the tested polytope.
  bool slice_criterion = false;
};

struct SaturationProfile {
  LatticePolytope polytope;
  std::vector<std::size_t> order;
  std::vector<SaturationStep> steps;
  /// Steps where the verdict and the slice criterion disagree.
  std::vector<std::string> diagnostics;

  bool saturated() const;
};

/// Step t tests whether R_(order[0..t-1])(P) is order[t]-saturated.
/// Requires non-negative coordinates in the listed indices.
SaturationProfile is_saturated(const LatticePolytope& p, const std::vector<std::size_t>& order);
bool is_i_saturated(const LatticePolytope& p, std::size_t i);

/// R_i(P) == P n {x_i = 0}, with the slice computed exactly over the rationals.
bool slice_criterion(const LatticePolytope& p, std::size_t i);

/// Polytopes of the division lifting for a system already normalised to
/// direction -e_d, with k lifting variables y_1..y_k appended as coordinates
/// d+1..d+k. The N_j drop the first k coordinates, so they live in
/// coordinates (x_{k+1}, ..., x_d, y_1, ..., y_k).
struct LemmaPolytopes {
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<LatticePolytope> p;
  std::vector<LatticePolytope> n;
  std::vector<LatticePolytope> delta;

  /// MV(P_1..P_d, [0,e_1]..[0,e_k]) in R^(d+k).
  Integer mixed_volume_p() const;
  /// MV(N_1..N_d) in R^d.
  Integer mixed_volume_n() const;
};

/// Throws PreconditionError("saturated_facial_system") when some facial
/// polynomial is not (1..k)-saturated and ("lift_count") unless 1 <= k <= d-1.
LemmaPolytopes build_lemma_polytopes(const PolySystem& normalized, std::size_t k);

}  // namespace mvlift
