#include "mvlift/lifting.hpp"

#include <algorithm>
#include <functional>

#include "mvlift/error.hpp"
#include "mvlift/saturation.hpp"

namespace mvlift {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::division:
      return "division";
    case Strategy::lindep:
      return "lindep";
    case Strategy::bigcd:
      return "bigcd";
    case Strategy::monomial:
      return "monomial";
  }
  return "division";
}

Strategy parse_strategy(const std::string& name) {
  for (Strategy s : {Strategy::division, Strategy::lindep, Strategy::bigcd, Strategy::monomial})
    if (to_string(s) == name) return s;
  throw ValidationError("unknown strategy '" + name + "'");
}

namespace {

Integer mv_of(const PolySystem& s) {
  auto nps = newton_polytopes(s);
  return mixed_volume(nps);
}

LaurentPolynomial facial_down(const LaurentPolynomial& f) {
  IntVector down(f.dim(), 0);
  down[f.dim() - 1] = -1;
  return facial_restriction(f, down);
}

std::vector<std::string> lifted_names(const std::vector<std::string>& vars, std::size_t k) {
  std::vector<std::string> out = vars;
  for (std::size_t j = 0; j < k; ++j) {
    std::string name = "y" + std::to_string(j + 1);
    while (std::find(out.begin(), out.end(), name) != out.end()) name += "_";
    out.push_back(name);
  }
  return out;
}

LaurentPolynomial y_var(std::size_t d, std::size_t k, std::size_t j) { return LaurentPolynomial::variable(d + k, d + j); }

void require_square(const PolySystem& sys) {
  if (!sys.is_square() || sys.dim() == 0)
    throw PreconditionError("square_system", "lifting needs as many polynomials as variables");
}

// Fills the accounting fields and checks the resubstitution identity.
LiftResult finish(LiftResult r, const PolySystem& original) {
  r.mv_before = mv_of(original);
  r.mv_after = mv_of(r.lifted);
  if (resubstitute(r) != r.normalized) throw InvariantError("resubstitution does not reproduce the normalised system");
  bool reducing = r.strategy != Strategy::monomial;
  if (reducing && r.mv_after >= r.mv_before)
    r.diagnostics.push_back("mixed volume did not decrease: " + r.mv_before.str() + " -> " + r.mv_after.str());
  if (r.strategy == Strategy::division && r.mv_before - r.mv_after != 1)
    r.diagnostics.push_back("division lift changed the mixed volume by " + Integer(r.mv_before - r.mv_after).str() +
                            ", expected exactly one");
  if (r.strategy == Strategy::bigcd && r.mv_before - r.mv_after < Integer(r.m))
    r.diagnostics.push_back("gcd lift dropped the mixed volume by less than m = " + std::to_string(r.m));
  if (r.strategy == Strategy::monomial && r.mv_after != r.mv_before)
    r.diagnostics.push_back("monomial lift changed the mixed volume: " + r.mv_before.str() + " -> " + r.mv_after.str());
  return r;
}

// Terms of f whose exponents vanish at the listed coordinates.
LaurentPolynomial set_zero(const LaurentPolynomial& f, const std::vector<std::size_t>& coords) {
  LaurentPolynomial out(f.dim());
  for (const auto& [e, c] : f.terms()) {
    bool keep = true;
    for (std::size_t i : coords) keep = keep && e[i] == 0;
    if (keep) out.add_term(e, c);
  }
  return out;
}

std::vector<GaussianRational> automatic_alpha(const std::vector<LaurentPolynomial>& facial) {
  const std::size_t d = facial.front().dim();
  std::vector<std::size_t> zeroed;
  for (std::size_t i = 1; i + 1 < d; ++i) zeroed.push_back(i);
  UniPoly g;
  for (const auto& f : facial) {
    LaurentPolynomial restricted = set_zero(f, zeroed);
    if (restricted.is_zero()) continue;
    g = gcd(g, to_univariate(restricted, 0));
  }
  if (g.is_zero()) return {GaussianRational(1)};
  RationalRoots roots = find_rational_roots(g);
  auto found = roots.roots;
  if (found.empty() && roots.irrational_roots)
    throw PreconditionError("alpha_not_representable", "a facial root exists but is not a Gaussian rational");
  if (found.empty()) return {};
  std::sort(found.begin(), found.end(), [](const RationalRoot& a, const RationalRoot& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return {found.front().value};
}

}  // namespace

LiftResult lift_division(const PolySystem& sys, const Direction& u, const DivisionOptions& options) {
  require_square(sys);
  const std::size_t d = sys.dim(), k = options.k;
  if (k < 1 || k + 1 > d) throw PreconditionError("lift_count", "need 1 <= k <= d - 1");
  Normalization nz = normalize_to_direction(sys, u);
  const PolySystem& n = nz.system;
  std::vector<LaurentPolynomial> facial;
  for (std::size_t i = 0; i < d; ++i) {
    if (n[i].min_exponent(d - 1) > 0)
      throw PreconditionError("not_divisible_by_last", "polynomial " + std::to_string(i + 1) + " is divisible by x_d");
    facial.push_back(facial_down(n[i]));
  }
  std::vector<std::size_t> prefix(k);
  for (std::size_t l = 0; l < k; ++l) prefix[l] = l;
  for (std::size_t i = 0; i < d; ++i)
    if (!is_saturated(newton_polytope(facial[i]), prefix).saturated())
      throw PreconditionError("saturated_facial_system",
                              "facial polynomial " + std::to_string(i + 1) + " is not saturated in x_1..x_k");

  std::vector<GaussianRational> alpha = options.alpha;
  if (alpha.empty()) {
    if (k != 1) throw PreconditionError("alpha", "a facial root must be given when k > 1");
    alpha = automatic_alpha(facial);
    if (alpha.empty())
      throw PreconditionError("facial_vanishing", "no Gaussian-rational facial root with x_2 = ... = x_(d-1) = 0");
  }
  if (alpha.size() != k) throw PreconditionError("alpha", "alpha needs exactly k coordinates");
  for (const auto& a : alpha)
    if (a.is_zero()) throw PreconditionError("alpha", "alpha must lie in the torus");
  std::vector<GaussianRational> point(d, GaussianRational(0));
  for (std::size_t l = 0; l < k; ++l) point[l] = alpha[l];
  point[d - 1] = GaussianRational(1);
  for (std::size_t i = 0; i < d; ++i)
    if (!facial[i].evaluate(point).is_zero())
      throw PreconditionError("facial_vanishing",
                              "facial polynomial " + std::to_string(i + 1) + " does not vanish at (alpha, 0)");

  LemmaPolytopes lemma = build_lemma_polytopes(n, k);
  if (lemma.mixed_volume_n() == 0) throw PreconditionError("mixed_volume_n", "MV(N_1, ..., N_d) = 0");

  std::vector<LaurentPolynomial> out;
  for (std::size_t i = 0; i < d; ++i) {
    LaurentPolynomial rest = facial[i];
    LaurentPolynomial g = (n[i] - facial[i]).extend(k);
    for (std::size_t l = 0; l < k; ++l) {
      auto [q, r] = divide_linear(rest, l, alpha[l]);
      g += y_var(d, k, l) * q.extend(k);
      rest = r;
    }
    g += rest.extend(k);
    out.push_back(std::move(g));
  }
  for (std::size_t l = 0; l < k; ++l)
    out.push_back(y_var(d, k, l) - LaurentPolynomial::variable(d + k, l) +
                  LaurentPolynomial::constant(d + k, alpha[l]));

  LiftResult r;
  r.lifted = PolySystem(lifted_names(sys.variables(), k), std::move(out));
  r.strategy = Strategy::division;
  r.u = u;
  r.normalized = n;
  r.change = nz.change;
  r.alpha = alpha;
  return finish(std::move(r), sys);
}

LiftResult lift_linear_dependent(const PolySystem& sys, const Direction& u, std::size_t i1, std::size_t i2) {
  require_square(sys);
  const std::size_t d = sys.dim();
  if (i1 == i2 || i1 >= d || i2 >= d) throw PreconditionError("distinct_indices", "need two distinct polynomial indices");
  Normalization nz = normalize_to_direction(sys, u);
  const PolySystem& n = nz.system;
  std::vector<LaurentPolynomial> facial;
  for (const auto& f : n.polynomials()) facial.push_back(facial_down(f));

  const auto& a = facial[i1].terms();
  const auto& b = facial[i2].terms();
  if (a.size() != b.size()) throw PreconditionError("dependency", "facial polynomials have different supports");
  std::optional<GaussianRational> lambda;
  for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib) {
    if (ia->first != ib->first) throw PreconditionError("dependency", "facial polynomials have different supports");
    GaussianRational ratio = ia->second / ib->second;
    if (lambda && *lambda != ratio) throw PreconditionError("dependency", "coefficient ratio is not constant");
    lambda = ratio;
  }

  // MV over the facial tuple without i1, in the first d-1 coordinates.
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c + 1 < d; ++c) kept.push_back(c);
  std::vector<LatticePolytope> tuple;
  for (std::size_t j = 0; j < d; ++j)
    if (j != i1) tuple.push_back(project(newton_polytope(facial[j]), kept));
  if (d > 1 && mixed_volume(tuple) == 0)
    throw PreconditionError("essential_facial_tuple", "facial tuple without polynomial " + std::to_string(i1 + 1) +
                                                          " has mixed volume zero");
  if (n[i1] == facial[i1])
    throw PreconditionError("not_facial", "polynomial " + std::to_string(i1 + 1) + " equals its facial part");

  const LaurentPolynomial y = y_var(d, 1, 0);
  std::vector<LaurentPolynomial> out;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == i1)
      out.push_back(y + (n[j] - facial[j]).extend(1));
    else if (j == i2)
      out.push_back(y * lambda->inverse() + (n[j] - facial[j]).extend(1));
    else
      out.push_back(n[j].extend(1));
  }
  out.push_back(y - facial[i1].extend(1));

  LiftResult r;
  r.lifted = PolySystem(lifted_names(sys.variables(), 1), std::move(out));
  r.strategy = Strategy::lindep;
  r.u = u;
  r.normalized = n;
  r.change = nz.change;
  r.lambda = lambda;
  r.i1 = i1;
  r.i2 = i2;
  return finish(std::move(r), sys);
}

LiftResult lift_bivariate_gcd(const PolySystem& sys, const Direction& u) {
  if (sys.dim() != 2 || !sys.is_square())
    throw PreconditionError("bivariate", "gcd lifting needs two polynomials in two variables");
  Normalization nz = normalize_to_direction(sys, u);
  const PolySystem& n = nz.system;
  std::vector<LaurentPolynomial> facial{facial_down(n[0]), facial_down(n[1])};
  for (const auto& f : facial)
    if (f.coefficient(Exponent{0, 0}).is_zero())
      throw InvariantError("normalised facial polynomial without constant term");
  UniPoly a = to_univariate(facial[0], 0), b = to_univariate(facial[1], 0);
  UniPoly g = gcd(a, b);
  if (g.degree() < 1) throw PreconditionError("gcd_degree", "facial polynomials are coprime");

  const LaurentPolynomial y = y_var(2, 1, 0);
  std::vector<LaurentPolynomial> out;
  for (std::size_t j = 0; j < 2; ++j) {
    auto [q, rem] = divmod(j == 0 ? a : b, g);
    out.push_back(y * from_univariate(q, 2, 0).extend(1) + from_univariate(rem, 2, 0).extend(1) +
                  (n[j] - facial[j]).extend(1));
  }
  LaurentPolynomial gp = from_univariate(g, 2, 0);
  out.push_back(y - gp.extend(1));

  LiftResult r;
  r.lifted = PolySystem(lifted_names(sys.variables(), 1), std::move(out));
  r.strategy = Strategy::bigcd;
  r.u = u;
  r.normalized = n;
  r.change = nz.change;
  r.gcd_factor = gp;
  r.m = static_cast<std::size_t>(g.degree());
  return finish(std::move(r), sys);
}

LiftResult lift_monomial(const PolySystem& sys, const Exponent& a) {
  require_square(sys);
  const std::size_t d = sys.dim();
  bool nonzero = false, nonneg = a.size() == d;
  for (Int v : a) {
    nonzero = nonzero || v != 0;
    nonneg = nonneg && v >= 0;
  }
  if (!nonzero || !nonneg) throw PreconditionError("monomial_exponent", "exponent must be non-negative and nonzero");
  bool used = false;
  std::vector<LaurentPolynomial> out;
  for (const auto& f : sys.polynomials()) {
    LaurentPolynomial g(d + 1);
    for (const auto& [e, c] : f.terms()) {
      Int t = -1;
      for (std::size_t i = 0; i < d; ++i)
        if (a[i] > 0) {
          Int q = e[i] >= 0 ? e[i] / a[i] : 0;
          t = t < 0 ? q : std::min(t, q);
        }
      t = std::max<Int>(t, 0);
      used = used || t > 0;
      Exponent ne = e;
      for (std::size_t i = 0; i < d; ++i) ne[i] -= t * a[i];
      ne.push_back(t);
      g.add_term(ne, c);
    }
    out.push_back(std::move(g));
  }
  if (!used) throw PreconditionError("vacuous_substitution", "no term is divisible by the monomial");
  Exponent ea = a;
  ea.push_back(0);
  out.push_back(y_var(d, 1, 0) - LaurentPolynomial::monomial(d + 1, ea));

  LiftResult r;
  r.lifted = PolySystem(lifted_names(sys.variables(), 1), std::move(out));
  r.strategy = Strategy::monomial;
  r.normalized = sys;
  r.change = MonomialChange::identity(d, d);
  r.monomial = a;
  return finish(std::move(r), sys);
}

PolySystem resubstitute(const PolySystem& lifted, std::size_t d) {
  const std::size_t total = lifted.dim();
  if (total < d || lifted.size() != total) throw ValidationError("lifted system must be square over the original variables");
  const std::size_t k = total - d;
  std::vector<LaurentPolynomial> values;
  for (std::size_t j = 0; j < k; ++j) {
    const LaurentPolynomial& h = lifted[d + j];
    Exponent ey(total, 0);
    ey[d + j] = 1;
    GaussianRational c = h.coefficient(ey);
    LaurentPolynomial rest = h - LaurentPolynomial::monomial(total, ey, c);
    for (std::size_t l = d; l < total; ++l)
      if (rest.uses_variable(l)) throw ValidationError("polynomial " + std::to_string(d + j + 1) + " is not of the form c*y - p(x)");
    if (c.is_zero()) throw ValidationError("polynomial " + std::to_string(d + j + 1) + " does not contain its y linearly");
    values.push_back(rest * (-c.inverse()));
  }
  std::vector<std::size_t> kept(d);
  for (std::size_t i = 0; i < d; ++i) kept[i] = i;
  std::vector<LaurentPolynomial> out;
  for (std::size_t i = 0; i < d; ++i) {
    LaurentPolynomial g = lifted[i];
    for (std::size_t j = 0; j < k; ++j) g = g.substitute(d + j, values[j]);
    out.push_back(g.restrict_to(kept));
  }
  std::vector<std::string> names(lifted.variables().begin(), lifted.variables().begin() + static_cast<long>(d));
  return PolySystem(std::move(names), std::move(out));
}

PolySystem resubstitute(const LiftResult& lift) { return resubstitute(lift.lifted, lift.original_dim()); }

namespace {

std::vector<std::pair<Strategy, std::function<LiftResult()>>> candidates(const PolySystem& sys, const Direction& u) {
  std::vector<std::pair<Strategy, std::function<LiftResult()>>> out;
  if (sys.dim() == 2) out.emplace_back(Strategy::bigcd, [&sys, u] { return lift_bivariate_gcd(sys, u); });
  for (std::size_t i1 = 0; i1 < sys.dim(); ++i1)
    for (std::size_t i2 = 0; i2 < sys.dim(); ++i2)
      if (i1 != i2) out.emplace_back(Strategy::lindep, [&sys, u, i1, i2] { return lift_linear_dependent(sys, u, i1, i2); });
  out.emplace_back(Strategy::division, [&sys, u] { return lift_division(sys, u); });
  return out;
}

std::string describe(const LiftResult& r) {
  std::string s = "mv " + r.mv_before.str() + " -> " + r.mv_after.str();
  if (r.strategy == Strategy::lindep) s += " (i1 = " + std::to_string(r.i1 + 1) + ", i2 = " + std::to_string(r.i2 + 1) + ")";
  return s;
}

std::string direction_text(const Direction& u) {
  std::string s = "(";
  for (std::size_t i = 0; i < u.dim(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
  return s + ")";
}

}  // namespace

void assess_strategies(const PolySystem& sys, AnalysisReport& report) {
  for (auto& dir : report.directions) {
    dir.strategies.clear();
    if (dir.status != FacialStatus::solvable) {
      dir.strategies.push_back({"all", false, "facial_solvable", "facial system not known to be solvable"});
      continue;
    }
    // Keep one entry per strategy: the first success, else the first failure.
    for (auto& [strategy, attempt] : candidates(sys, dir.u)) {
      std::string name = to_string(strategy);
      auto existing = std::find_if(dir.strategies.begin(), dir.strategies.end(),
                                   [&](const StrategyCheck& c) { return c.strategy == name; });
      if (existing != dir.strategies.end() && existing->applicable) continue;
      StrategyCheck check{name, false, "", ""};
      try {
        LiftResult r = attempt();
        check.applicable = true;
        check.detail = describe(r);
      } catch (const PreconditionError& e) {
        check.condition = e.condition();
        check.detail = e.what();
      }
      if (existing == dir.strategies.end())
        dir.strategies.push_back(std::move(check));
      else if (check.applicable)
        *existing = std::move(check);
    }
  }
}

AutoLift auto_lift(const PolySystem& sys) { return auto_lift(sys, std::nullopt); }

AutoLift auto_lift(const PolySystem& sys, std::optional<Strategy> only) {
  AutoLift out;
  if (!sys.is_square()) {
    out.attempts.push_back("system is not square");
    return out;
  }
  AnalysisReport report = find_degenerate_directions(sys);
  for (const auto& dir : report.directions) {
    if (dir.status != FacialStatus::solvable) continue;
    for (auto& [strategy, attempt] : candidates(sys, dir.u)) {
      if (only && strategy != *only) continue;
      std::string head = direction_text(dir.u) + " " + to_string(strategy) + ": ";
      try {
        LiftResult r = attempt();
        out.attempts.push_back(head + describe(r));
        if (r.mv_after >= r.mv_before) continue;
        if (!out.lift || r.mv_before - r.mv_after > out.lift->mv_before - out.lift->mv_after) out.lift = std::move(r);
      } catch (const PreconditionError& e) {
        out.attempts.push_back(head + e.condition());
      }
    }
  }
  if (!out.lift) out.attempts.push_back("no applicable lifting");
  return out;
}

}  // namespace mvlift
