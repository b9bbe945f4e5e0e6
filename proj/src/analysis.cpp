#include "mvlift/analysis.hpp"

#include <algorithm>
#include <sstream>

#include "mvlift/error.hpp"
#include "mvlift/oracle.hpp"
#include "mvlift/roots.hpp"
#include "mvlift/sysio.hpp"

namespace mvlift {

std::string to_string(FacialStatus s) {
  switch (s) {
    case FacialStatus::solvable:
      return "solvable";
    case FacialStatus::no_solution:
      return "no_solution";
    case FacialStatus::unknown:
      return "unknown";
  }
  return "unknown";
}

std::vector<const DirectionReport*> AnalysisReport::with_status(FacialStatus s) const {
  std::vector<const DirectionReport*> out;
  for (const auto& d : directions)
    if (d.status == s) out.push_back(&d);
  return out;
}

Integer bkk_bound(const PolySystem& sys) {
  if (!sys.is_square()) throw PreconditionError("square_system", "BKK bound needs as many polynomials as variables");
  auto nps = newton_polytopes(sys);
  return mixed_volume(nps);
}

PolySystem facial_system(const PolySystem& sys, const Direction& u) {
  if (u.vector().size() != sys.dim()) throw ValidationError("direction has the wrong dimension");
  std::vector<LaurentPolynomial> out;
  for (const auto& f : sys.polynomials()) out.push_back(facial_restriction(f, u));
  return PolySystem(sys.variables(), std::move(out));
}

namespace {

LaurentPolynomial strip_monomial_content(const LaurentPolynomial& f) {
  Exponent shift(f.dim(), 0);
  for (std::size_t i = 0; i < f.dim(); ++i) shift[i] = -f.min_exponent(i);
  return f.times_monomial(shift);
}

LaurentPolynomial make_monic(const LaurentPolynomial& f) { return f * f.terms().begin()->second.inverse(); }

std::vector<std::string> z_names(std::size_t d) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < d; ++i) v.push_back("z" + std::to_string(i + 1));
  return v;
}

// Polynomial in variable `var` with `other` fixed to `value` (only used for
// bivariate restrictions).
UniPoly specialize(const LaurentPolynomial& f, std::size_t var, std::size_t other, const GaussianRational& value) {
  std::vector<GaussianRational> c;
  for (const auto& [e, coef] : f.terms()) {
    auto k = static_cast<std::size_t>(e[var]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += coef * value.pow(e[other]);
  }
  return UniPoly(std::move(c));
}

UniPoly leading_in(const LaurentPolynomial& f, std::size_t var, std::size_t other) {
  Int top = f.max_exponent(var);
  std::vector<GaussianRational> c;
  for (const auto& [e, coef] : f.terms()) {
    if (e[var] != top) continue;
    auto k = static_cast<std::size_t>(e[other]);
    if (c.size() <= k) c.resize(k + 1);
    c[k] += coef;
  }
  return UniPoly(std::move(c));
}

class DirectionAnalyzer {
 public:
  DirectionAnalyzer(const PolySystem& sys, const Direction& u) : sys_(sys), u_(u), rep_(u) {}

  DirectionReport run() {
    facial_ = facial_system(sys_, u_);
    for (const auto& f : facial_.polynomials())
      if (f.is_monomial()) return decide(FacialStatus::no_solution, "monomial");

    const std::size_t d = sys_.dim();
    norm_ = normalize_to_direction(sys_, u_);
    IntVector down(d, 0);
    down[d - 1] = -1;
    for (const auto& f : norm_.system.polynomials()) {
      LaurentPolynomial g = make_monic(strip_monomial_content(facial_restriction(f, down)));
      if (g.uses_variable(d - 1)) throw InvariantError("normalised facial polynomial depends on the last variable");
      if (std::find(distinct_.begin(), distinct_.end(), g) == distinct_.end()) distinct_.push_back(g);
    }
    std::vector<std::size_t> used;
    for (const auto& g : distinct_)
      for (std::size_t v : g.used_variables())
        if (std::find(used.begin(), used.end(), v) == used.end()) used.push_back(v);
    std::sort(used.begin(), used.end());

    if (distinct_.size() == 1) return single(used);
    if (used.size() == 1) return univariate(used.front());
    if (used.size() == 2) return bivariate(used[0], used[1]);
    rep_.note = "facial system involves " + std::to_string(used.size()) +
                " variables after normalisation; no exact decision procedure";
    return rep_;
  }

 private:
  DirectionReport decide(FacialStatus s, std::string certificate) {
    rep_.status = s;
    rep_.certificate = std::move(certificate);
    if (s == FacialStatus::solvable && !rep_.witness && rep_.note.empty())
      rep_.note = "root exists, not exactly representable";
    return rep_;
  }

  void certify(const LaurentPolynomial& p) { rep_.certificate_polynomial = format_polynomial(p, z_names(sys_.dim())); }

  // Accepts a normalised-coordinate point (last coordinate free) if it maps
  // to a torus zero of the original facial system.
  bool offer_witness(std::vector<GaussianRational> z) {
    for (const auto& c : z)
      if (c.is_zero()) return false;
    for (const auto& g : distinct_)
      if (!g.evaluate(z).is_zero()) return false;
    std::vector<GaussianRational> x = norm_.change.backward_point(z);
    for (const auto& f : facial_.polynomials())
      if (!f.evaluate(x).is_zero()) throw InvariantError("witness does not map to a facial zero");
    rep_.witness = std::move(x);
    return true;
  }

  std::vector<GaussianRational> ones() const { return std::vector<GaussianRational>(sys_.dim(), GaussianRational(1)); }

  DirectionReport single(const std::vector<std::size_t>& used) {
    // A non-monomial polynomial always vanishes somewhere on the torus.
    certify(distinct_.front());
    for (std::size_t v : used) {
      std::vector<GaussianRational> base = ones();
      LaurentPolynomial restricted = distinct_.front();
      UniPoly p;
      {
        std::vector<GaussianRational> c;
        for (const auto& [e, coef] : restricted.terms()) {
          auto k = static_cast<std::size_t>(e[v]);
          if (c.size() <= k) c.resize(k + 1);
          c[k] += coef;
        }
        p = UniPoly(std::move(c));
      }
      if (p.strip_zero_roots().degree() < 1) continue;
      for (const auto& r : find_rational_roots(p).roots) {
        base[v] = r.value;
        if (offer_witness(base)) return decide(FacialStatus::solvable, "single_polynomial");
      }
    }
    return decide(FacialStatus::solvable, "single_polynomial");
  }

  DirectionReport univariate(std::size_t v) {
    UniPoly g;
    for (const auto& f : distinct_) g = gcd(g, to_univariate(f, v));
    g = g.strip_zero_roots();
    certify(from_univariate(g, sys_.dim(), v));
    if (g.degree() < 1) return decide(FacialStatus::no_solution, "gcd");
    for (const auto& r : find_rational_roots(g).roots) {
      auto z = ones();
      z[v] = r.value;
      if (offer_witness(z)) break;
    }
    return decide(FacialStatus::solvable, "gcd");
  }

  DirectionReport bivariate(std::size_t a, std::size_t b) {
    std::vector<LaurentPolynomial> two;
    for (const auto& f : distinct_) two.push_back(f.restrict_to({a, b}));
    // Any pair without common torus zeros settles the question.
    std::vector<UniPoly> stripped;
    for (std::size_t j = 1; j < two.size(); ++j) {
      UniPoly r = resultant(two[0], two[j], 1);
      if (r.is_zero()) {
        stripped.emplace_back();
        continue;
      }
      UniPoly s = squarefree_part(r.strip_zero_roots());
      if (s.degree() < 1) {
        certify(from_univariate(s, sys_.dim(), a));
        return decide(FacialStatus::no_solution, "resultant");
      }
      stripped.push_back(s);
    }
    if (two.size() == 2) {
      if (stripped[0].is_zero()) return decide(FacialStatus::solvable, "common_factor");
      UniPoly s = stripped[0];
      UniPoly lc = gcd(leading_in(two[0], 1, 0), leading_in(two[1], 1, 0));
      UniPoly h = divmod(s, gcd(s, lc)).first;
      UniPoly at_zero = gcd(specialize(two[0], 0, 1, GaussianRational(0)), specialize(two[1], 0, 1, GaussianRational(0)));
      if (!at_zero.is_zero()) h = divmod(h, gcd(h, at_zero)).first;
      if (h.degree() >= 1) {
        certify(from_univariate(h.monic(), sys_.dim(), a));
        search_witness(two, h, a, b);
        return decide(FacialStatus::solvable, "resultant");
      }
    } else if (!stripped[0].is_zero() && search_witness(two, stripped[0], a, b)) {
      return decide(FacialStatus::solvable, "resultant");
    }
    annotate_numeric(two);
    return rep_;
  }

  bool search_witness(const std::vector<LaurentPolynomial>& two, const UniPoly& in_a, std::size_t a, std::size_t b) {
    for (const auto& r : find_rational_roots(in_a).roots) {
      UniPoly g;
      for (const auto& f : two) g = gcd(g, specialize(f, 1, 0, r.value));
      if (g.is_zero() || g.strip_zero_roots().degree() < 1) continue;
      for (const auto& s : find_rational_roots(g).roots) {
        auto z = ones();
        z[a] = r.value;
        z[b] = s.value;
        if (offer_witness(z)) return true;
      }
    }
    return false;
  }

  void annotate_numeric(const std::vector<LaurentPolynomial>& two) {
    try {
      SolutionCount c = count_torus_solutions_2d(PolySystem({"a", "b"}, {two[0], two[1]}));
      std::ostringstream os;
      os << "numerically " << c.count << " common torus zero(s) of the first two normalised facial polynomials";
      rep_.note = os.str();
    } catch (const Error& e) {
      rep_.note = std::string("numeric check failed: ") + e.what();
    }
  }

  const PolySystem& sys_;
  Direction u_;
  DirectionReport rep_;
  PolySystem facial_;
  Normalization norm_;
  std::vector<LaurentPolynomial> distinct_;
};

void require_contained(std::span<const LatticePolytope> original, std::span<const LatticePolytope> shrunken) {
  if (original.size() != shrunken.size()) throw ValidationError("tuples differ in length");
  for (std::size_t i = 0; i < original.size(); ++i)
    if (shrunken[i].is_empty() || !original[i].contains(shrunken[i]))
      throw PreconditionError("containment", "polytope " + std::to_string(i + 1) + " is not contained in the original");
}

}  // namespace

DirectionReport analyze_direction(const PolySystem& sys, const Direction& u) {
  if (!sys.is_square()) throw PreconditionError("square_system", "analysis needs a square system");
  return DirectionAnalyzer(sys, u).run();
}

AnalysisReport find_degenerate_directions(const PolySystem& sys, Execution exec) {
  AnalysisReport report;
  report.bkk_bound = bkk_bound(sys);
  auto nps = newton_polytopes(sys);
  std::vector<Direction> dirs = enumerate_fan_directions(nps);
  std::vector<std::optional<DirectionReport>> slots(dirs.size());
  for_each_index(dirs.size(), exec, [&](std::size_t k) { slots[k] = analyze_direction(sys, dirs[k]); });
  for (auto& s : slots) report.directions.push_back(std::move(*s));
  return report;
}

std::vector<std::size_t> touch_set(std::span<const LatticePolytope> original, std::span<const LatticePolytope> shrunken,
                                   const Direction& u) {
  require_contained(original, shrunken);
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < original.size(); ++i) {
    Int h = support_value(original[i], u);
    if (support_value(shrunken[i], u) == h) t.push_back(i);
  }
  return t;
}

StrictDecrease strict_decrease(std::span<const LatticePolytope> original, std::span<const LatticePolytope> shrunken,
                               Execution exec) {
  require_contained(original, shrunken);
  std::vector<LatticePolytope> all(original.begin(), original.end());
  all.insert(all.end(), shrunken.begin(), shrunken.end());
  std::vector<Direction> dirs = enumerate_fan_directions(all);
  const std::size_t n = original.empty() ? 0 : original.front().ambient_dim();
  std::vector<char> hit(dirs.size(), 0);
  for_each_index(dirs.size(), exec, [&](std::size_t k) {
    auto t = touch_set(original, shrunken, dirs[k]);
    std::vector<LatticePolytope> tuple(original.begin(), original.end());
    for (std::size_t i : t) tuple[i] = face(original[i], dirs[k]);
    hit[k] = is_essential(tuple, n) ? 1 : 0;
  });
  StrictDecrease out;
  for (std::size_t k = 0; k < dirs.size(); ++k)
    if (hit[k]) {
      out.decreases = true;
      out.witness = dirs[k];
      break;
    }
  return out;
}

}  // namespace mvlift
