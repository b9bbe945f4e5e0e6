#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mvlift {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using Int = std::int64_t;
using IntVector = std::vector<Int>;

/// Exponent vectors and lattice points share one representation.
using Exponent = IntVector;
using Point = IntVector;

Int gcd(Int a, Int b);
Int gcd(const IntVector& v);
Int dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& v, Int s);
bool is_zero(const IntVector& v);

/// Divides out the content. The zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

/// Overflow-checked 64-bit arithmetic; throws InvariantError on overflow.
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

/// "p" or "p/q".
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional leading sign). Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Exact square root of a non-negative rational, if it is a perfect square.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Element of Q(i): exact, always reduced (mpq keeps lowest terms).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;
  GaussianRational pow(Int e) const;

  std::complex<double> to_complex() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Canonical text: "3", "-1/2", "2*i", "-i", "(1/2 + 3*i)". Parses back with sysio.
  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Exact square root in Q(i) when it exists.
std::optional<GaussianRational> exact_sqrt(const GaussianRational& z);

/// Parses the canonical coefficient text produced by GaussianRational::to_string
/// as well as forms like "1/2+3i", "-i", "2i". Throws std::invalid_argument.
GaussianRational parse_gaussian(const std::string& text);

}  // namespace mvlift
