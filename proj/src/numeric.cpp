#include "mvlift/numeric.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "mvlift/error.hpp"

namespace mvlift {

Int gcd(Int a, Int b) { return std::gcd(a, b); }

Int gcd(const IntVector& v) {
  Int g = 0;
  for (Int x : v) g = std::gcd(g, x);
  return g;
}

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantError("64-bit overflow in lattice arithmetic");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("64-bit overflow in lattice arithmetic");
  return r;
}

Int dot(const IntVector& a, const IntVector& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], -b[i]);
  return r;
}

IntVector scaled(const IntVector& v, Int s) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = checked_mul(v[i], s);
  return r;
}

bool is_zero(const IntVector& v) {
  for (Int x : v)
    if (x != 0) return false;
  return true;
}

IntVector primitive(const IntVector& v) {
  Int g = gcd(v);
  if (g <= 1) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  auto parse_int = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("empty integer literal");
    for (std::size_t k = start; k < s.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw std::invalid_argument("bad integer literal '" + s + "'");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator");
  return Rational(num, den);
}

std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = numerator(q), d = denominator(q);
  Integer sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

GaussianRational GaussianRational::inverse() const {
  Rational n = norm();
  if (n == 0) throw std::domain_error("division by zero in Q(i)");
  return {re_ / n, -im_ / n};
}

GaussianRational GaussianRational::pow(Int e) const {
  if (e < 0) return inverse().pow(-e);
  GaussianRational result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> GaussianRational::to_complex() const {
  return {re_.convert_to<double>(), im_.convert_to<double>()};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_ == 0 && o.im_ == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.im_ == 0) {
    if (o.re_ == 0) throw std::domain_error("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
  if (im_ == 0) return mvlift::to_string(re_);
  auto imag_part = [](const Rational& b) {
    Rational a = abs(b);
    return a == 1 ? std::string("i") : mvlift::to_string(a) + "*i";
  };
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imag_part(im_);
  return "(" + mvlift::to_string(re_) + (im_ < 0 ? " - " : " + ") + imag_part(im_) + ")";
}

std::optional<GaussianRational> exact_sqrt(const GaussianRational& z) {
  if (z.is_zero()) return GaussianRational(0);
  // sqrt(a+bi) = p+qi with p^2 = (a+|z|)/2, q^2 = (|z|-a)/2, sign(pq) = sign(b).
  auto modulus = exact_sqrt(z.norm());
  if (!modulus) return std::nullopt;
  auto p = exact_sqrt((z.real() + *modulus) / 2);
  auto q = exact_sqrt((*modulus - z.real()) / 2);
  if (!p || !q) return std::nullopt;
  Rational qq = z.imag() < 0 ? Rational(-*q) : *q;
  return GaussianRational(*p, qq);
}

GaussianRational parse_gaussian(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '*') s += c;
  if (s.empty()) throw std::invalid_argument("empty coefficient");
  // Split into signed summands at '+'/'-' not at position 0 and not after '/'.
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
      parts.push_back(s.substr(start, k - start));
      start = k;
    }
  }
  parts.push_back(s.substr(start));
  GaussianRational result;
  for (const auto& part : parts) {
    if (!part.empty() && part.back() == 'i') {
      std::string body = part.substr(0, part.size() - 1);
      Rational b = (body.empty() || body == "+") ? Rational(1) : body == "-" ? Rational(-1) : parse_rational(body);
      result += GaussianRational(Rational(0), b);
    } else {
      result += GaussianRational(parse_rational(part));
    }
  }
  return result;
}

}  // namespace mvlift
