#include "mvlift/roots.hpp"

#include <cmath>

#include "mvlift/error.hpp"
#include "mvlift/oracle.hpp"

namespace mvlift {

namespace {

// Scales to Gaussian-integer coefficients.
UniPoly integral(const UniPoly& f) {
  Integer l = 1;
  for (const auto& c : f.coefficients()) {
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c.real()));
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c.imag()));
  }
  return f * GaussianRational(Rational(l));
}

Integer round_to_integer(const Rational& q) {
  // floor(q + 1/2)
  Rational shifted = q + Rational(1, 2);
  Integer n = boost::multiprecision::numerator(shifted), d = boost::multiprecision::denominator(shifted);
  Integer fl = n / d;
  if (n < 0 && fl * d != n) fl -= 1;
  return fl;
}

GaussianRational from_double(std::complex<double> z) {
  return GaussianRational(Rational(z.real()), Rational(z.imag()));
}

}  // namespace

RationalRoots find_rational_roots(const UniPoly& f) {
  if (f.is_zero()) throw ValidationError("find_rational_roots needs a nonzero polynomial");
  RationalRoots out;
  UniPoly rest = f.strip_zero_roots();
  if (rest.degree() < 1) return out;
  UniPoly sq = integral(squarefree_part(rest));
  GaussianRational lc = sq.leading();
  std::vector<std::complex<double>> approx;
  try {
    approx = aberth_roots(sq.to_complex());
  } catch (const NonConvergenceError&) {
    approx.clear();
  }
  for (const auto& z : approx) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) continue;
    GaussianRational scaled_root = lc * from_double(z);
    GaussianRational candidate =
        GaussianRational(Rational(round_to_integer(scaled_root.real())), Rational(round_to_integer(scaled_root.imag()))) / lc;
    if (candidate.is_zero() || !rest(candidate).is_zero()) continue;
    bool seen = false;
    for (const auto& r : out.roots) seen = seen || r.value == candidate;
    if (seen) continue;
    RationalRoot root{candidate, 0};
    UniPoly g = rest, lin = UniPoly::linear(candidate);
    while (true) {
      auto [q, r] = divmod(g, lin);
      if (!r.is_zero()) break;
      g = q;
      ++root.multiplicity;
    }
    out.roots.push_back(root);
  }
  int found = 0;
  for (const auto& r : out.roots) found += r.multiplicity;
  out.irrational_roots = found < rest.degree();
  return out;
}

RationalRoots find_rational_roots(const LaurentPolynomial& f) {
  auto used = f.used_variables();
  if (used.size() > 1) throw ValidationError("find_rational_roots needs a univariate polynomial");
  if (used.empty()) return find_rational_roots(to_univariate(f, 0));
  std::size_t v = used.front();
  Exponent shift(f.dim(), 0);
  shift[v] = -std::min<Int>(0, f.min_exponent(v));
  return find_rational_roots(to_univariate(f.times_monomial(shift), v));
}

}  // namespace mvlift
