#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mvlift/algebra.hpp"
#include "mvlift/error.hpp"
#include "mvlift/polytope.hpp"
#include "mvlift/univariate.hpp"

namespace mvlift {

struct OracleOptions {
  double tol = 1e-10;
  int max_iterations = 500;
  int restarts = 8;
  std::uint64_t seed = 0x5eed;
};

/// Thrown when the root finder does not meet the tolerance.
class NonConvergenceError : public Error {
 public:
  using Error::Error;
};

/// All complex roots of the polynomial with the given coefficients (degree 0
/// upward, nonzero leading coefficient) by Aberth iteration.
std::vector<std::complex<double>> aberth_roots(const std::vector<std::complex<double>>& coefficients,
                                               const OracleOptions& options = {});

/// Sylvester resultant eliminating variable `eliminate` (0 or 1) from two
/// bivariate polynomials with non-negative exponents; a polynomial in the
/// other variable. Fraction-free elimination over Q(i)[t].
UniPoly resultant(const LaurentPolynomial& f, const LaurentPolynomial& g, std::size_t eliminate);

struct ApproxSolution {
  std::vector<std::complex<double>> point;
  /// max_i |f_i(p)| / max(1, sum |c_a p^a|)
  double residual = 0;
};

struct SolutionCount {
  std::size_t count = 0;
  std::vector<ApproxSolution> solutions;
  /// Count equals the degree of both square-free, zero-free resultants, so
  /// every resultant root was matched exactly once.
  bool exact = false;
  /// Degrees of the square-free parts of the resultants in x1 and x2.
  int degree_x1 = 0;
  int degree_x2 = 0;
};

/// Distinct solutions in (C*)^2. Throws PreconditionError("no_common_factor")
/// when a resultant vanishes identically, NonConvergenceError on failure.
SolutionCount count_torus_solutions_2d(const PolySystem& sys, const OracleOptions& options = {});

/// Approximate multiplicities: solutions of a slightly perturbed system
/// (same supports, coefficients perturbed by a relative 1e-6) clustered
/// around each solution of `base`. Always approximate.
std::vector<int> estimate_multiplicities(const PolySystem& sys, const SolutionCount& base,
                                         const OracleOptions& options = {});

struct MixedVolumeCrossCheck {
  Integer inclusion_exclusion;
  Integer alternative;
  std::string method;
  bool agree() const { return inclusion_exclusion == alternative; }
};

/// 2D: (Vol(P+Q) - Vol(P) - Vol(Q)) / 2. 3D: sum over facet normals v of
/// P2+P3 of h_P1(v) MV_v-perp(P2^v, P3^v). PreconditionError otherwise.
MixedVolumeCrossCheck mv_cross_check(std::span<const LatticePolytope> tuple);

}  // namespace mvlift
