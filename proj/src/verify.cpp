#include "mvlift/verify.hpp"

#include <algorithm>
#include <cmath>

#include "mvlift/error.hpp"
#include "mvlift/lifting.hpp"

namespace mvlift {

using Complex = std::complex<double>;

double relative_residual(const LaurentPolynomial& f, const std::vector<Complex>& x) {
  double scale = 0.0;
  for (const auto& [e, c] : f.terms()) {
    double m = std::abs(c.to_complex());
    for (std::size_t i = 0; i < e.size(); ++i) m *= std::pow(std::abs(x[i]), static_cast<double>(e[i]));
    scale += m;
  }
  return std::abs(f.evaluate(x)) / std::max(1.0, scale);
}

VerifyReport verify_lift(const PolySystem& original, const PolySystem& lifted,
                         const std::optional<MonomialChange>& change, const OracleOptions& options) {
  const std::size_t d = original.dim();
  if (lifted.dim() <= d || lifted.size() != lifted.dim())
    throw ValidationError("lifted system must be square with more variables than the original");
  if (!std::equal(original.variables().begin(), original.variables().end(), lifted.variables().begin()))
    throw ValidationError("lifted system must start with the original variables");
  MonomialChange t = change ? *change : MonomialChange::identity(d, original.size());
  if (t.matrix.size() != d || t.shifts.size() != original.size())
    throw ValidationError("transform does not match the original system");

  VerifyReport out;
  PolySystem target = apply_monomial_change(original, t);
  out.resubstitution = resubstitute(lifted, d) == target;
  if (!out.resubstitution) out.messages.push_back("resubstitution does not reproduce the original");

  if (d != 2 || !original.is_square()) return out;
  SolutionCount count;
  try {
    count = count_torus_solutions_2d(original, options);
  } catch (const PreconditionError& e) {
    out.messages.push_back("solution correspondence skipped: " + e.condition());
    return out;
  }
  out.solutions = count.solutions.size();
  IntMatrix inv = unimodular_inverse(t.matrix);
  const std::size_t k = lifted.dim() - d;
  for (const auto& sol : count.solutions) {
    std::vector<Complex> point(lifted.dim(), Complex(0));
    for (std::size_t j = 0; j < d; ++j) {
      Complex z(1);
      for (std::size_t i = 0; i < d; ++i) z *= std::pow(sol.point[i], static_cast<int>(inv[i][j]));
      point[j] = z;
    }
    bool zero_y = false;
    for (std::size_t j = 0; j < k; ++j) {
      // h_j = c y_j + rest, rest free of the y's.
      const LaurentPolynomial& h = lifted[d + j];
      Exponent ey(lifted.dim(), 0);
      ey[d + j] = 1;
      Complex c = h.coefficient(ey).to_complex();
      LaurentPolynomial rest = h - LaurentPolynomial::monomial(lifted.dim(), ey, h.coefficient(ey));
      point[d + j] = -rest.evaluate(point) / c;
      zero_y = zero_y || std::abs(point[d + j]) < 1e-8;
    }
    double worst = 0;
    for (const auto& f : lifted.polynomials()) worst = std::max(worst, relative_residual(f, point));
    if (worst <= std::max(1e-6, 1e4 * options.tol)) {
      ++out.extended;
      out.non_torus += zero_y;
    } else {
      out.messages.push_back("solution does not extend, residual " + std::to_string(worst));
    }
  }
  return out;
}

}  // namespace mvlift
