#include "mvlift/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mvlift/error.hpp"
#include "mvlift/lattice.hpp"

namespace mvlift {

namespace {

using Complex = std::complex<double>;

// p(z) and p'(z) by Horner; coefficients low to high.
std::pair<Complex, Complex> horner(const std::vector<Complex>& a, Complex z) {
  Complex p = 0, dp = 0;
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
  }
  return {p, dp};
}

double scale_at(const std::vector<Complex>& a, Complex z) {
  double s = 0, r = std::abs(z), pw = 1;
  for (const auto& c : a) {
    s += std::abs(c) * pw;
    pw *= r;
  }
  return s;
}

bool try_aberth(const std::vector<Complex>& a, std::vector<Complex>& z, const OracleOptions& opt) {
  const std::size_t n = z.size();
  std::vector<bool> done(n, false);
  for (int it = 0; it < opt.max_iterations; ++it) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      auto [p, dp] = horner(a, z[i]);
      if (p == Complex(0)) {
        done[i] = true;
        continue;
      }
      Complex ratio = p / dp;
      Complex sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      Complex w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) return false;
      z[i] -= w;
      double rel = std::abs(w) / std::max(std::abs(z[i]), 1e-300);
      double res = std::abs(horner(a, z[i]).first) / scale_at(a, z[i]);
      if (rel < opt.tol && res < opt.tol)
        done[i] = true;
      else
        all = false;
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

std::vector<Complex> aberth_roots(const std::vector<Complex>& coefficients, const OracleOptions& options) {
  if (coefficients.empty() || coefficients.back() == Complex(0))
    throw ValidationError("aberth_roots needs a nonzero leading coefficient");
  const std::size_t n = coefficients.size() - 1;
  if (n == 0) return {};
  std::vector<Complex> a(coefficients.size());
  for (std::size_t k = 0; k <= n; ++k) a[k] = coefficients[k] / coefficients.back();
  if (n == 1) return {-a[0]};
  double radius = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != Complex(0)) radius = std::max(radius, std::pow(std::abs(a[k]), 1.0 / double(n - k)));
  if (radius == 0) radius = 1;
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < options.restarts; ++attempt) {
    std::vector<Complex> z(n);
    double offset = unit(rng) * 2 * std::numbers::pi;
    double r = radius * (0.5 + unit(rng));
    for (std::size_t k = 0; k < n; ++k) z[k] = std::polar(r, offset + 2 * std::numbers::pi * double(k) / double(n));
    if (try_aberth(a, z, options)) return z;
  }
  throw NonConvergenceError("Aberth iteration did not converge for a degree-" + std::to_string(n) + " polynomial");
}

namespace {

// Coefficients of f in x_e, each a polynomial in the other variable.
std::vector<UniPoly> split(const LaurentPolynomial& f, std::size_t e) {
  std::size_t other = 1 - e;
  std::vector<std::vector<GaussianRational>> raw;
  for (const auto& [exp, c] : f.terms()) {
    auto de = static_cast<std::size_t>(exp[e]);
    auto dt = static_cast<std::size_t>(exp[other]);
    if (raw.size() <= de) raw.resize(de + 1);
    if (raw[de].size() <= dt) raw[de].resize(dt + 1);
    raw[de][dt] += c;
  }
  std::vector<UniPoly> out;
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

UniPoly exact_quotient(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantError("fraction-free elimination produced an inexact division");
  return q;
}

UniPoly bareiss_determinant(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly::constant(GaussianRational(1));
  UniPoly prev = UniPoly::constant(GaussianRational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t s = k + 1;
      while (s < n && m[s][k].is_zero()) ++s;
      if (s == n) return UniPoly();
      std::swap(m[k], m[s]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_quotient(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? det * GaussianRational(-1) : det;
}

}  // namespace

UniPoly resultant(const LaurentPolynomial& f, const LaurentPolynomial& g, std::size_t eliminate) {
  if (f.dim() != 2 || g.dim() != 2 || eliminate > 1) throw ValidationError("resultant needs bivariate polynomials");
  if (f.has_negative_exponents() || g.has_negative_exponents())
    throw PreconditionError("nonnegative_exponents", "resultant needs polynomials");
  if (f.is_zero() || g.is_zero()) return UniPoly();
  auto a = split(f, eliminate);
  auto b = split(g, eliminate);
  const std::size_t m = a.size() - 1, n = b.size() - 1, size = m + n;
  std::vector<std::vector<UniPoly>> s(size, std::vector<UniPoly>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  return bareiss_determinant(std::move(s));
}

namespace {

LaurentPolynomial derivative(const LaurentPolynomial& f, std::size_t i) {
  LaurentPolynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponent d = e;
    d[i] -= 1;
    out.add_term(d, c * GaussianRational(static_cast<long long>(e[i])));
  }
  return out;
}

// Divides out the monomial content; torus solutions do not see it.
LaurentPolynomial to_polynomial(const LaurentPolynomial& f) {
  Exponent shift(f.dim(), 0);
  for (std::size_t i = 0; i < f.dim(); ++i) shift[i] = -f.min_exponent(i);
  return f.times_monomial(shift);
}

struct NumericPoly {
  std::vector<std::pair<Exponent, Complex>> terms;

  explicit NumericPoly(const LaurentPolynomial& f) {
    for (const auto& [e, c] : f.terms()) terms.emplace_back(e, c.to_complex());
  }
  Complex operator()(const std::vector<Complex>& x) const {
    Complex s = 0;
    for (const auto& [e, c] : terms) s += c * monomial(e, x);
    return s;
  }
  double scale(const std::vector<Complex>& x) const {
    double s = 0;
    for (const auto& [e, c] : terms) s += std::abs(c) * std::abs(monomial(e, x));
    return s;
  }
  static Complex monomial(const Exponent& e, const std::vector<Complex>& x) {
    Complex m = 1;
    for (std::size_t i = 0; i < e.size(); ++i) m *= std::pow(x[i], static_cast<int>(e[i]));
    return m;
  }
};

struct NumericSystem {
  std::vector<NumericPoly> f;
  std::vector<std::vector<NumericPoly>> jac;

  explicit NumericSystem(const PolySystem& sys) {
    for (std::size_t r = 0; r < sys.size(); ++r) {
      f.emplace_back(sys[r]);
      jac.emplace_back();
      for (std::size_t c = 0; c < sys.dim(); ++c) jac.back().emplace_back(derivative(sys[r], c));
    }
  }

  double residual(const std::vector<Complex>& x) const {
    double r = 0;
    for (const auto& p : f) r = std::max(r, std::abs(p(x)) / std::max(1.0, p.scale(x)));
    return r;
  }

  // Two-variable Newton polish.
  std::vector<Complex> refine(std::vector<Complex> x, int steps) const {
    for (int s = 0; s < steps; ++s) {
      Complex f0 = f[0](x), f1 = f[1](x);
      Complex a = jac[0][0](x), b = jac[0][1](x), c = jac[1][0](x), d = jac[1][1](x);
      Complex det = a * d - b * c;
      if (std::abs(det) == 0) break;
      Complex dx = (d * f0 - b * f1) / det, dy = (a * f1 - c * f0) / det;
      if (!std::isfinite(std::abs(dx)) || !std::isfinite(std::abs(dy))) break;
      x[0] -= dx;
      x[1] -= dy;
      if (std::abs(dx) + std::abs(dy) < 1e-15 * (std::abs(x[0]) + std::abs(x[1]))) break;
    }
    return x;
  }
};

double distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
  return d;
}

std::vector<Complex> roots_of(const UniPoly& r, const OracleOptions& options) {
  UniPoly p = r.monic();
  return aberth_roots(p.to_complex(), options);
}

}  // namespace

SolutionCount count_torus_solutions_2d(const PolySystem& sys, const OracleOptions& options) {
  if (sys.dim() != 2 || sys.size() != 2)
    throw PreconditionError("bivariate_square", "solution counting needs two polynomials in two variables");
  PolySystem poly(sys.variables(), {to_polynomial(sys[0]), to_polynomial(sys[1])});
  UniPoly r1 = resultant(poly[0], poly[1], 1);
  UniPoly r2 = resultant(poly[0], poly[1], 0);
  if (r1.is_zero() || r2.is_zero())
    throw PreconditionError("no_common_factor", "the polynomials share a factor; the solution set is not finite");
  UniPoly s1 = squarefree_part(r1.strip_zero_roots());
  UniPoly s2 = squarefree_part(r2.strip_zero_roots());

  SolutionCount out;
  out.degree_x1 = s1.degree();
  out.degree_x2 = s2.degree();
  auto xs = roots_of(s1, options);
  auto ys = roots_of(s2, options);
  NumericSystem num(poly);
  for (const auto& a : xs)
    for (const auto& b : ys) {
      std::vector<Complex> start{a, b};
      if (num.residual(start) > 1e-4) continue;
      auto x = num.refine(start, 20);
      if (distance(x, start) > 1e-6) continue;
      double res = num.residual(x);
      if (res >= options.tol || std::abs(x[0]) < options.tol || std::abs(x[1]) < options.tol) continue;
      bool seen = false;
      for (const auto& s : out.solutions)
        if (distance(x, s.point) < 1e-8) seen = true;
      if (!seen) out.solutions.push_back({x, res});
    }
  out.count = out.solutions.size();
  out.exact = static_cast<int>(out.count) == out.degree_x1 && static_cast<int>(out.count) == out.degree_x2;
  return out;
}

std::vector<int> estimate_multiplicities(const PolySystem& sys, const SolutionCount& base,
                                         const OracleOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long long> pick(-1000, 1000);
  std::vector<LaurentPolynomial> perturbed;
  const Rational eps(Integer(1), Integer(1000000000));
  for (const auto& f : sys.polynomials()) {
    LaurentPolynomial g(f.dim());
    for (const auto& [e, c] : f.terms()) {
      GaussianRational factor(Rational(1) + eps * Rational(pick(rng)), eps * Rational(pick(rng)));
      g.add_term(e, c * factor);
    }
    perturbed.push_back(std::move(g));
  }
  SolutionCount moved = count_torus_solutions_2d(PolySystem(sys.variables(), std::move(perturbed)), options);
  std::vector<int> mult(base.solutions.size(), 0);
  for (const auto& s : moved.solutions) {
    std::size_t best = 0;
    double best_d = INFINITY;
    for (std::size_t i = 0; i < base.solutions.size(); ++i) {
      double d = distance(s.point, base.solutions[i].point);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    if (best_d < 1e-2) ++mult[best];
  }
  return mult;
}

namespace {

// Lattice coordinates of the hyperplane sections orthogonal to v.
LatticePolytope flatten(const LatticePolytope& p, const IntMatrix& u) {
  std::vector<Point> pts;
  for (const auto& x : p.vertices()) {
    Point y(2, 0);
    for (std::size_t r = 0; r < 2; ++r) y[r] = dot(u[r], x);
    pts.push_back(std::move(y));
  }
  return convex_hull(2, std::move(pts));
}

}  // namespace

MixedVolumeCrossCheck mv_cross_check(std::span<const LatticePolytope> tuple) {
  const std::size_t n = tuple.size();
  for (const auto& p : tuple)
    if (p.ambient_dim() != n || p.is_empty()) throw PreconditionError("square_tuple", "need n nonempty polytopes in R^n");
  if (n != 2 && n != 3) throw PreconditionError("dimension", "cross-check covers dimensions 2 and 3");
  MixedVolumeCrossCheck out;
  out.inclusion_exclusion = mixed_volume(tuple, Execution::serial);
  if (n == 2) {
    out.method = "area of the Minkowski sum";
    Integer twice = normalized_volume(minkowski_sum(tuple[0], tuple[1])) - normalized_volume(tuple[0]) -
                    normalized_volume(tuple[1]);
    if (twice % 2 != 0) throw InvariantError("odd doubled mixed area");
    out.alternative = twice / 2;
    return out;
  }
  out.method = "facet sum of support values";
  LatticePolytope s = minkowski_sum(tuple[1], tuple[2]);
  std::vector<IntVector> normals;
  if (s.dim() == 3) {
    for (const auto& f : s.facets()) normals.push_back(primitive(f.normal));
  } else if (s.dim() == 2) {
    IntVector w = primitive(s.equations().front().normal);
    normals.push_back(w);
    normals.push_back(scaled(w, -1));
  }
  Integer total = 0;
  for (const auto& v : normals) {
    IntMatrix u = complete_to_unimodular(v);
    std::vector<LatticePolytope> pair{flatten(face(tuple[1], v), u), flatten(face(tuple[2], v), u)};
    Integer mv = mixed_volume(pair, Execution::serial);
    if (mv != 0) total += Integer(support_value(tuple[0], v)) * mv;
  }
  out.alternative = total;
  return out;
}

}  // namespace mvlift
