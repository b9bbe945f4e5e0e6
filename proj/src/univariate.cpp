#include "mvlift/univariate.hpp"

#include <stdexcept>

namespace mvlift {

UniPoly::UniPoly(std::vector<GaussianRational> coefficients) : c_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::constant(GaussianRational c) { return UniPoly({std::move(c)}); }

UniPoly UniPoly::linear(const GaussianRational& a) { return UniPoly({-a, GaussianRational(1)}); }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::size_t UniPoly::valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  return k;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  GaussianRational inv = leading().inverse();
  UniPoly r = *this;
  for (auto& x : r.c_) x *= inv;
  return r;
}

UniPoly UniPoly::derivative() const {
  std::vector<GaussianRational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * GaussianRational(static_cast<long long>(k)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::strip_zero_roots() const {
  std::size_t v = valuation();
  return UniPoly(std::vector<GaussianRational>(c_.begin() + static_cast<std::ptrdiff_t>(v), c_.end()));
}

GaussianRational UniPoly::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::complex<double> UniPoly::operator()(std::complex<double> x) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

std::vector<std::complex<double>> UniPoly::to_complex() const {
  std::vector<std::complex<double>> out;
  out.reserve(c_.size());
  for (const auto& x : c_) out.push_back(x.to_complex());
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly operator*(UniPoly a, const GaussianRational& s) {
  for (auto& x : a.c_) x *= s;
  a.trim();
  return a;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<GaussianRational> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<GaussianRational> q(static_cast<std::size_t>(a.degree() - db + 1));
  GaussianRational inv = b.leading().inverse();
  for (int k = a.degree(); k >= db; --k) {
    GaussianRational c = rem[static_cast<std::size_t>(k)] * inv;
    if (c.is_zero()) continue;
    q[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficient(static_cast<std::size_t>(j));
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& f) {
  if (f.degree() <= 0) return f.monic();
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

}  // namespace mvlift
