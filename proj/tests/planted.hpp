#pragma once

// Random systems with a planted degeneracy along -e_d, shared by the lifting
// tests and the acceptance suite.

#include <random>
#include <string>
#include <vector>

#include "mvlift/algebra.hpp"

namespace planted {

using namespace mvlift;

inline Int nonzero(std::mt19937_64& rng, Int range) {
  std::uniform_int_distribution<Int> c(-range, range);
  Int v = 0;
  while (v == 0) v = c(rng);
  return v;
}

inline std::vector<std::string> names(std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

// Dense polynomial over conv(0, a e_1, b e_2) in the first two of `dim` variables.
inline LaurentPolynomial triangle_poly(std::mt19937_64& rng, std::size_t dim, Int a, Int b) {
  LaurentPolynomial f(dim);
  for (Int i = 0; i <= a; ++i)
    for (Int j = 0; b * i + a * j <= a * b; ++j) {
      Exponent e(dim, 0);
      e[0] = i;
      if (dim > 1) e[1] = j;
      f.add_term(e, GaussianRational(nonzero(rng, 20)));
    }
  return f;
}

inline LaurentPolynomial times_last(const LaurentPolynomial& f, Int power) {
  Exponent e(f.dim(), 0);
  e.back() = power;
  return f.times_monomial(e);
}

// Facial part (free of x_d) plus x_d times a random polynomial.
inline LaurentPolynomial with_upper(std::mt19937_64& rng, const LaurentPolynomial& facial) {
  std::uniform_int_distribution<Int> deg(1, 3);
  std::size_t d = facial.dim();
  return facial + times_last(triangle_poly(rng, d, deg(rng), d > 2 ? 1 : 0), 1);
}

// Facial parts vanish at (alpha, 0, ..., 0).
inline PolySystem division(std::mt19937_64& rng, std::size_t d, const GaussianRational& alpha) {
  std::uniform_int_distribution<Int> deg(1, 3);
  std::vector<LaurentPolynomial> polys;
  for (std::size_t i = 0; i < d; ++i) {
    LaurentPolynomial facial = triangle_poly(rng, d, deg(rng), d > 2 ? deg(rng) : 0);
    std::vector<GaussianRational> at(d, GaussianRational(0));
    at[0] = alpha;
    facial.add_term(Exponent(d, 0), -facial.evaluate(at));
    polys.push_back(with_upper(rng, facial));
  }
  return PolySystem(names(d), polys);
}

// Bivariate system whose facial parts along -e_2 share a factor of degree m.
inline PolySystem gcd(std::mt19937_64& rng, std::size_t m) {
  LaurentPolynomial g = LaurentPolynomial::constant(2, GaussianRational(1));
  for (std::size_t r = 0; r < m; ++r)
    g = g * (LaurentPolynomial::variable(2, 0) - LaurentPolynomial::constant(2, GaussianRational(nonzero(rng, 6))));
  std::uniform_int_distribution<Int> deg(1, 3);
  std::vector<LaurentPolynomial> polys;
  for (int j = 0; j < 2; ++j) polys.push_back(with_upper(rng, g * triangle_poly(rng, 2, deg(rng), 0)));
  return PolySystem(names(2), polys);
}

// f_1^u = lambda f_2^u along -e_d.
inline PolySystem dependent(std::mt19937_64& rng, std::size_t d, const GaussianRational& lambda) {
  std::uniform_int_distribution<Int> deg(1, 3);
  LaurentPolynomial shared = triangle_poly(rng, d, deg(rng), d > 2 ? deg(rng) : 0);
  std::vector<LaurentPolynomial> polys{with_upper(rng, shared * lambda), with_upper(rng, shared)};
  for (std::size_t i = 2; i < d; ++i) polys.push_back(with_upper(rng, triangle_poly(rng, d, deg(rng), deg(rng))));
  return PolySystem(names(d), polys);
}

inline Direction down(std::size_t d) {
  IntVector u(d, 0);
  u.back() = -1;
  return Direction(u);
}

}  // namespace planted
