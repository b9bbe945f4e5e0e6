#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "mvlift/numeric.hpp"

namespace mvlift {

/// Dense univariate polynomial over Q(i), coefficients from degree 0 upward,
/// no trailing zeros (the zero polynomial has no coefficients).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coefficients);
  static UniPoly constant(GaussianRational c);
  /// x - a
  static UniPoly linear(const GaussianRational& a);

  const std::vector<GaussianRational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const GaussianRational& leading() const { return c_.back(); }
  GaussianRational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : GaussianRational(); }
  /// Multiplicity of the root 0.
  std::size_t valuation() const;

  UniPoly monic() const;
  UniPoly derivative() const;
  /// Divides out x^valuation.
  UniPoly strip_zero_roots() const;

  GaussianRational operator()(const GaussianRational& x) const;
  std::complex<double> operator()(std::complex<double> x) const;
  std::vector<std::complex<double>> to_complex() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const GaussianRational& s);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Product of the distinct irreducible factors, monic.
UniPoly squarefree_part(const UniPoly& f);

}  // namespace mvlift
