#pragma once

#include <vector>

#include "mvlift/algebra.hpp"
#include "mvlift/univariate.hpp"

namespace mvlift {

struct RationalRoot {
  GaussianRational value;
  int multiplicity = 1;
};

struct RationalRoots {
  /// Nonzero roots in Q(i), each verified by exact evaluation.
  std::vector<RationalRoot> roots;
  /// Some nonzero root is not in Q(i).
  bool irrational_roots = false;
};

/// Nonzero Gaussian-rational roots. Candidates come from rounding
/// lc * z to Z[i] for the numerical roots z of the primitive square-free part
/// (a rational root times the leading coefficient of a primitive Z[i]
/// polynomial is a Gaussian integer); every candidate is checked exactly.
RationalRoots find_rational_roots(const UniPoly& f);
/// Same for a polynomial in a single variable (Laurent exponents allowed).
RationalRoots find_rational_roots(const LaurentPolynomial& f);

}  // namespace mvlift
