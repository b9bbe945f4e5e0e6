#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvlift/algebra.hpp"
#include "mvlift/oracle.hpp"

namespace mvlift {

struct VerifyReport {
  /// resubstitute(lifted) equals the original after the monomial change.
  bool resubstitution = false;
  /// Bivariate originals only: torus solutions found by the oracle.
  std::optional<std::size_t> solutions;
  /// Solutions that extend to a common zero of the lifted system.
  std::size_t extended = 0;
  /// Extended solutions with some y_j = 0 (outside the torus of the lift).
  std::size_t non_torus = 0;
  std::vector<std::string> messages;

  bool ok() const { return resubstitution && (!solutions || extended == *solutions); }
};

/// Relative residual of f at x: |f(x)| / max(1, sum |c| |x^a|).
double relative_residual(const LaurentPolynomial& f, const std::vector<std::complex<double>>& x);

/// Checks a lift against its original. `change` maps the original to the
/// coordinates of the lift (identity when absent).
VerifyReport verify_lift(const PolySystem& original, const PolySystem& lifted,
                         const std::optional<MonomialChange>& change, const OracleOptions& options = {});

}  // namespace mvlift
