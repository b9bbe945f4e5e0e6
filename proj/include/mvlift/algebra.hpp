#pragma once

#include <complex>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mvlift/lattice.hpp"
#include "mvlift/numeric.hpp"
#include "mvlift/polytope.hpp"
#include "mvlift/univariate.hpp"

namespace mvlift {

/// Graded-lex, largest first: higher total degree, then lexicographically larger.
struct GrlexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse Laurent polynomial in a fixed number of variables over Q(i).
class LaurentPolynomial {
 public:
  using Terms = std::map<Exponent, GaussianRational, GrlexDescending>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::size_t dim) : dim_(dim) {}

  static LaurentPolynomial constant(std::size_t dim, const GaussianRational& c);
  static LaurentPolynomial monomial(std::size_t dim, Exponent e, const GaussianRational& c = GaussianRational(1));
  static LaurentPolynomial variable(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  GaussianRational coefficient(const Exponent& e) const;

  /// Adds c x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const GaussianRational& c);

  std::vector<Exponent> support() const;
  bool has_negative_exponents() const;
  /// Whether variable i occurs with a nonzero exponent.
  bool uses_variable(std::size_t i) const;
  /// Variables that occur, ascending.
  std::vector<std::size_t> used_variables() const;
  Int max_exponent(std::size_t i) const;
  Int min_exponent(std::size_t i) const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(LaurentPolynomial a, const GaussianRational& s);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

  /// Non-negative powers only.
  LaurentPolynomial pow(unsigned e) const;
  LaurentPolynomial times_monomial(const Exponent& e) const;

  /// Exact evaluation; zero coordinates are rejected when a negative exponent needs them.
  GaussianRational evaluate(const std::vector<GaussianRational>& x) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& x) const;

  /// Appends `extra` variables that do not occur.
  LaurentPolynomial extend(std::size_t extra) const;
  /// Keeps only the listed variables (in order); the others must not occur.
  LaurentPolynomial restrict_to(const std::vector<std::size_t>& kept) const;
  /// Replaces variable i (non-negative exponents) by g, which must share dim.
  LaurentPolynomial substitute(std::size_t i, const LaurentPolynomial& g) const;

 private:
  std::size_t dim_ = 0;
  Terms terms_;
};

/// Ordered polynomials sharing one variable list.
class PolySystem {
 public:
  PolySystem() = default;
  /// Validates distinct names, common dimension, and nonzero polynomials.
  PolySystem(std::vector<std::string> variables, std::vector<LaurentPolynomial> polynomials);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<LaurentPolynomial>& polynomials() const { return polys_; }
  const LaurentPolynomial& operator[](std::size_t i) const { return polys_[i]; }
  std::size_t size() const { return polys_.size(); }
  std::size_t dim() const { return vars_.size(); }
  bool is_square() const { return polys_.size() == vars_.size(); }

  friend bool operator==(const PolySystem& a, const PolySystem& b) {
    return a.vars_ == b.vars_ && a.polys_ == b.polys_;
  }
  friend bool operator!=(const PolySystem& a, const PolySystem& b) { return !(a == b); }

 private:
  std::vector<std::string> vars_;
  std::vector<LaurentPolynomial> polys_;
};

/// Exponent map a -> U a + shift_i for polynomial i. In variables: x_i is
/// replaced by z^(U e_i) and polynomial i is multiplied by z^shift_i.
struct MonomialChange {
  IntMatrix matrix;
  std::vector<Exponent> shifts;

  static MonomialChange identity(std::size_t dim, std::size_t count);
  /// x -> z for a torus point: z_j = x^(U^-1 e_j).
  std::vector<GaussianRational> forward_point(const std::vector<GaussianRational>& x) const;
  /// z -> x: x_i = z^(U e_i).
  std::vector<GaussianRational> backward_point(const std::vector<GaussianRational>& z) const;
};

LatticePolytope newton_polytope(const LaurentPolynomial& f);
std::vector<LatticePolytope> newton_polytopes(const PolySystem& sys);

/// Terms whose exponents maximise <., u>.
LaurentPolynomial facial_restriction(const LaurentPolynomial& f, const IntVector& u);
inline LaurentPolynomial facial_restriction(const LaurentPolynomial& f, const Direction& u) {
  return facial_restriction(f, u.vector());
}

/// f = q (x_i - alpha) + r with r free of x_i. Requires non-negative exponents.
std::pair<LaurentPolynomial, LaurentPolynomial> divide_linear(const LaurentPolynomial& f, std::size_t i,
                                                              const GaussianRational& alpha);

/// Univariate view of a polynomial in variable i only (non-negative exponents).
UniPoly to_univariate(const LaurentPolynomial& f, std::size_t i);
LaurentPolynomial from_univariate(const UniPoly& p, std::size_t dim, std::size_t i);
bool is_univariate_in(const LaurentPolynomial& f, std::size_t i);

/// Monic gcd of two polynomials in variable i only.
LaurentPolynomial gcd_univariate(const LaurentPolynomial& f, const LaurentPolynomial& g, std::size_t i);

/// Applies the change; throws PreconditionError("unimodular") if |det U| != 1.
PolySystem apply_monomial_change(const PolySystem& sys, const MonomialChange& t);

struct Normalization {
  PolySystem system;
  MonomialChange change;
  /// Every facial polynomial (direction -e_d) has a constant term.
  bool constant_terms = true;
};

/// Monomial change taking u to -e_d with non-negative exponents, minimum
/// d-th exponent zero in each polynomial, and (when achievable) facial
/// constant terms.
Normalization normalize_to_direction(const PolySystem& sys, const Direction& u);

}  // namespace mvlift
