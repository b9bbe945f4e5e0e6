#include "mvlift/algebra.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "mvlift/error.hpp"

namespace mvlift {

bool GrlexDescending::operator()(const Exponent& a, const Exponent& b) const {
  Int sa = 0, sb = 0;
  for (Int x : a) sa += x;
  for (Int x : b) sb += x;
  if (sa != sb) return sa > sb;
  return a > b;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const GaussianRational& c) {
  return monomial(dim, Exponent(dim, 0), c);
}

LaurentPolynomial LaurentPolynomial::monomial(std::size_t dim, Exponent e, const GaussianRational& c) {
  if (e.size() != dim) throw ValidationError("exponent length does not match polynomial dimension");
  LaurentPolynomial p(dim);
  p.add_term(e, c);
  return p;
}

LaurentPolynomial LaurentPolynomial::variable(std::size_t dim, std::size_t i) {
  Exponent e(dim, 0);
  e.at(i) = 1;
  return monomial(dim, std::move(e));
}

bool LaurentPolynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && mvlift::is_zero(terms_.begin()->first));
}

GaussianRational LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const GaussianRational& c) {
  if (e.size() != dim_) throw ValidationError("exponent length does not match polynomial dimension");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

std::vector<Exponent> LaurentPolynomial::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

bool LaurentPolynomial::has_negative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (Int x : e)
      if (x < 0) return true;
  return false;
}

bool LaurentPolynomial::uses_variable(std::size_t i) const {
  for (const auto& [e, c] : terms_)
    if (e[i] != 0) return true;
  return false;
}

std::vector<std::size_t> LaurentPolynomial::used_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim_; ++i)
    if (uses_variable(i)) out.push_back(i);
  return out;
}

Int LaurentPolynomial::max_exponent(std::size_t i) const {
  Int m = std::numeric_limits<Int>::min();
  for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
  return m;
}

Int LaurentPolynomial::min_exponent(std::size_t i) const {
  Int m = std::numeric_limits<Int>::max();
  for (const auto& [e, c] : terms_) m = std::min(m, e[i]);
  return m;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  if (o.dim_ != dim_) throw ValidationError("polynomial dimensions differ");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  if (o.dim_ != dim_) throw ValidationError("polynomial dimensions differ");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.dim_ != b.dim_) throw ValidationError("polynomial dimensions differ");
  LaurentPolynomial r(a.dim_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPolynomial operator*(LaurentPolynomial a, const GaussianRational& s) {
  if (s.is_zero()) return LaurentPolynomial(a.dim_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned e) const {
  LaurentPolynomial result = constant(dim_, 1);
  LaurentPolynomial base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

LaurentPolynomial LaurentPolynomial::times_monomial(const Exponent& m) const {
  LaurentPolynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + m, c);
  return r;
}

GaussianRational LaurentPolynomial::evaluate(const std::vector<GaussianRational>& x) const {
  if (x.size() != dim_) throw ValidationError("point dimension does not match polynomial");
  GaussianRational s;
  for (const auto& [e, c] : terms_) {
    GaussianRational t = c;
    for (std::size_t i = 0; i < dim_; ++i)
      if (e[i] != 0) t *= x[i].pow(e[i]);
    s += t;
  }
  return s;
}

std::complex<double> LaurentPolynomial::evaluate(const std::vector<std::complex<double>>& x) const {
  if (x.size() != dim_) throw ValidationError("point dimension does not match polynomial");
  std::complex<double> s = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (std::size_t i = 0; i < dim_; ++i)
      if (e[i] != 0) t *= std::pow(x[i], static_cast<double>(e[i]));
    s += t;
  }
  return s;
}

LaurentPolynomial LaurentPolynomial::extend(std::size_t extra) const {
  LaurentPolynomial r(dim_ + extra);
  for (const auto& [e, c] : terms_) {
    Exponent f = e;
    f.resize(dim_ + extra, 0);
    r.terms_.emplace(std::move(f), c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::restrict_to(const std::vector<std::size_t>& kept) const {
  std::vector<bool> keep(dim_, false);
  for (auto k : kept) keep.at(k) = true;
  LaurentPolynomial r(kept.size());
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < dim_; ++i)
      if (!keep[i] && e[i] != 0) throw ValidationError("dropped variable occurs in polynomial");
    Exponent f;
    for (auto k : kept) f.push_back(e[k]);
    r.add_term(f, c);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::substitute(std::size_t i, const LaurentPolynomial& g) const {
  if (g.dim_ != dim_) throw ValidationError("substituted polynomial has a different dimension");
  std::vector<LaurentPolynomial> powers{constant(dim_, 1)};
  LaurentPolynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[i] < 0) throw ValidationError("cannot substitute into a negative power");
    while (powers.size() <= static_cast<std::size_t>(e[i])) powers.push_back(powers.back() * g);
    Exponent rest = e;
    rest[i] = 0;
    r += powers[static_cast<std::size_t>(e[i])].times_monomial(rest) * c;
  }
  return r;
}

PolySystem::PolySystem(std::vector<std::string> variables, std::vector<LaurentPolynomial> polynomials)
    : vars_(std::move(variables)), polys_(std::move(polynomials)) {
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw ValidationError("duplicate variable name");
  for (const auto& p : polys_) {
    if (p.dim() != vars_.size()) throw ValidationError("polynomial dimension does not match variable list");
    if (p.is_zero()) throw ValidationError("zero polynomial in system");
  }
}

MonomialChange MonomialChange::identity(std::size_t dim, std::size_t count) {
  return {identity_matrix(dim), std::vector<Exponent>(count, Exponent(dim, 0))};
}

namespace {

std::vector<GaussianRational> monomial_map(const IntMatrix& m, const std::vector<GaussianRational>& x) {
  // out_j = prod_i x_i^(m_ij)
  const std::size_t n = m.size();
  if (x.size() != n) throw ValidationError("point dimension does not match transform");
  std::vector<GaussianRational> out(n, GaussianRational(1));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][j] != 0) out[j] *= x[i].pow(m[i][j]);
  return out;
}

}  // namespace

std::vector<GaussianRational> MonomialChange::forward_point(const std::vector<GaussianRational>& x) const {
  return monomial_map(unimodular_inverse(matrix), x);
}

std::vector<GaussianRational> MonomialChange::backward_point(const std::vector<GaussianRational>& z) const {
  return monomial_map(matrix, z);
}

LatticePolytope newton_polytope(const LaurentPolynomial& f) {
  if (f.is_zero()) throw PreconditionError("nonzero_polynomial", "Newton polytope of the zero polynomial");
  return convex_hull(f.dim(), f.support());
}

std::vector<LatticePolytope> newton_polytopes(const PolySystem& sys) {
  std::vector<LatticePolytope> out;
  for (const auto& f : sys.polynomials()) out.push_back(newton_polytope(f));
  return out;
}

LaurentPolynomial facial_restriction(const LaurentPolynomial& f, const IntVector& u) {
  if (u.size() != f.dim()) throw ValidationError("direction dimension does not match polynomial");
  if (f.is_zero()) return f;
  Int best = std::numeric_limits<Int>::min();
  for (const auto& [e, c] : f.terms()) best = std::max(best, dot(u, e));
  LaurentPolynomial r(f.dim());
  for (const auto& [e, c] : f.terms())
    if (dot(u, e) == best) r.add_term(e, c);
  return r;
}

std::pair<LaurentPolynomial, LaurentPolynomial> divide_linear(const LaurentPolynomial& f, std::size_t i,
                                                              const GaussianRational& alpha) {
  if (i >= f.dim()) throw ValidationError("variable index out of range");
  if (f.has_negative_exponents()) throw PreconditionError("nonnegative_exponents", "division needs a polynomial");
  if (alpha.is_zero()) throw PreconditionError("nonzero_alpha", "division point must be nonzero");
  // Group by the exponents of the other variables, then divide each
  // univariate slice synthetically from its top degree down.
  std::map<Exponent, std::vector<GaussianRational>> slices;
  for (const auto& [e, c] : f.terms()) {
    Exponent rest = e;
    rest[i] = 0;
    auto& coeffs = slices[rest];
    std::size_t k = static_cast<std::size_t>(e[i]);
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] = c;
  }
  LaurentPolynomial q(f.dim()), r(f.dim());
  for (const auto& [rest, coeffs] : slices) {
    GaussianRational carry;
    for (std::size_t k = coeffs.size(); k-- > 1;) {
      carry = coeffs[k] + alpha * carry;
      Exponent e = rest;
      e[i] = static_cast<Int>(k - 1);
      q.add_term(e, carry);
    }
    r.add_term(rest, coeffs[0] + alpha * carry);
  }
  LaurentPolynomial linear = LaurentPolynomial::variable(f.dim(), i) - LaurentPolynomial::constant(f.dim(), alpha);
  if (q * linear + r != f) throw InvariantError("division identity failed");
  return {std::move(q), std::move(r)};
}

bool is_univariate_in(const LaurentPolynomial& f, std::size_t i) {
  for (const auto& [e, c] : f.terms())
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != i && e[j] != 0) return false;
  return true;
}

UniPoly to_univariate(const LaurentPolynomial& f, std::size_t i) {
  if (!is_univariate_in(f, i)) throw PreconditionError("univariate", "polynomial involves other variables");
  if (f.has_negative_exponents()) throw PreconditionError("nonnegative_exponents", "negative exponent");
  std::vector<GaussianRational> c;
  for (const auto& [e, coef] : f.terms()) {
    auto k = static_cast<std::size_t>(e[i]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] = coef;
  }
  return UniPoly(std::move(c));
}

LaurentPolynomial from_univariate(const UniPoly& p, std::size_t dim, std::size_t i) {
  LaurentPolynomial f(dim);
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    Exponent e(dim, 0);
    e.at(i) = static_cast<Int>(k);
    f.add_term(e, p.coefficients()[k]);
  }
  return f;
}

LaurentPolynomial gcd_univariate(const LaurentPolynomial& f, const LaurentPolynomial& g, std::size_t i) {
  if (f.is_zero() || g.is_zero()) throw PreconditionError("nonzero_polynomial", "gcd of the zero polynomial");
  return from_univariate(gcd(to_univariate(f, i), to_univariate(g, i)), f.dim(), i);
}

PolySystem apply_monomial_change(const PolySystem& sys, const MonomialChange& t) {
  if (t.matrix.size() != sys.dim() || !is_unimodular(t.matrix))
    throw PreconditionError("unimodular", "monomial change needs a unimodular matrix");
  if (t.shifts.size() != sys.size()) throw ValidationError("one shift per polynomial required");
  std::vector<LaurentPolynomial> out;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    LaurentPolynomial p(sys.dim());
    for (const auto& [e, c] : sys[k].terms()) p.add_term(multiply(t.matrix, e) + t.shifts[k], c);
    out.push_back(std::move(p));
  }
  return PolySystem(sys.variables(), std::move(out));
}

namespace {

Int ceil_div(Int a, Int b) {  // b > 0
  Int q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

struct Attempt {
  IntMatrix matrix;
  std::vector<Exponent> shifts;
  bool constant_terms = true;
};

// Given U with last row -u, finds the shear and shifts.
Attempt finish(const PolySystem& sys, IntMatrix u) {
  const std::size_t d = sys.dim();
  std::vector<std::vector<Exponent>> images(sys.size());
  std::vector<Int> low(sys.size());
  for (std::size_t k = 0; k < sys.size(); ++k) {
    for (const auto& [e, c] : sys[k].terms()) images[k].push_back(multiply(u, e));
    low[k] = std::numeric_limits<Int>::max();
    for (const auto& b : images[k]) low[k] = std::min(low[k], b[d - 1]);
  }
  // Smallest non-negative shear keeping every exponent above the facial minimum.
  for (std::size_t j = 0; j + 1 < d; ++j) {
    Int shear = 0;
    for (std::size_t k = 0; k < sys.size(); ++k) {
      Int facial_min = std::numeric_limits<Int>::max();
      for (const auto& b : images[k])
        if (b[d - 1] == low[k]) facial_min = std::min(facial_min, b[j]);
      for (const auto& b : images[k])
        if (b[d - 1] > low[k]) shear = std::max(shear, ceil_div(facial_min - b[j], b[d - 1] - low[k]));
    }
    if (shear != 0) u[j] = u[j] + scaled(u[d - 1], shear);
  }
  Attempt a;
  a.matrix = u;
  for (std::size_t k = 0; k < sys.size(); ++k) {
    std::vector<Exponent> pts;
    for (const auto& [e, c] : sys[k].terms()) pts.push_back(multiply(u, e));
    Exponent shift(d);
    for (std::size_t j = 0; j < d; ++j) {
      Int m = std::numeric_limits<Int>::max();
      for (const auto& b : pts)
        if (b[d - 1] == low[k]) m = std::min(m, b[j]);
      shift[j] = -m;
    }
    bool has_constant = false;
    for (const auto& b : pts)
      if (is_zero(b + shift)) has_constant = true;
    a.constant_terms = a.constant_terms && has_constant;
    a.shifts.push_back(std::move(shift));
  }
  return a;
}

// Unimodular matrices with entries in {-1,0,1}, identity first.
std::vector<IntMatrix> small_unimodular(std::size_t n) {
  std::vector<IntMatrix> out{identity_matrix(n)};
  const std::size_t cells = n * n;
  std::size_t total = 1;
  for (std::size_t c = 0; c < cells; ++c) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    IntMatrix m(n, IntVector(n));
    std::size_t x = code;
    for (std::size_t c = 0; c < cells; ++c, x /= 3) m[c / n][c % n] = static_cast<Int>(x % 3) - 1;
    if (m != out[0] && is_unimodular(m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

Normalization normalize_to_direction(const PolySystem& sys, const Direction& u) {
  const std::size_t d = sys.dim();
  if (u.dim() != d) throw ValidationError("direction dimension does not match system");
  IntMatrix base = complete_to_unimodular(scaled(u.vector(), -1));
  Attempt best = finish(sys, base);
  // Facial constant terms may need a change of the first d-1 coordinates.
  if (!best.constant_terms && d >= 3 && d - 1 <= 3) {
    for (const auto& v : small_unimodular(d - 1)) {
      IntMatrix u2 = base;
      for (std::size_t r = 0; r + 1 < d; ++r) {
        u2[r].assign(d, 0);
        for (std::size_t s = 0; s + 1 < d; ++s) u2[r] = u2[r] + scaled(base[s], v[r][s]);
      }
      Attempt a = finish(sys, u2);
      if (a.constant_terms) {
        best = std::move(a);
        break;
      }
    }
  }
  Normalization n;
  n.change = {best.matrix, best.shifts};
  n.system = apply_monomial_change(sys, n.change);
  n.constant_terms = best.constant_terms;
  if (n.change.matrix.back() != scaled(u.vector(), -1)) throw InvariantError("normalization lost the direction");
  for (const auto& p : n.system.polynomials()) {
    if (p.has_negative_exponents()) throw InvariantError("normalization left a negative exponent");
    if (p.min_exponent(d - 1) != 0) throw InvariantError("normalization left x_d dividing a polynomial");
  }
  return n;
}

}  // namespace mvlift
