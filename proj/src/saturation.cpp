#include "mvlift/saturation.hpp"

#include <algorithm>

#include "mvlift/error.hpp"

namespace mvlift {

namespace {

void require_nonnegative(const LatticePolytope& p, std::size_t i) {
  if (i >= p.ambient_dim()) throw ValidationError("coordinate index out of range");
  for (const auto& v : p.vertices())
    if (v[i] < 0) throw PreconditionError("nonnegative_coordinates", "polytope has a negative coordinate in the divided variable");
}

Point unit(std::size_t n, std::size_t i) {
  Point e(n, 0);
  e[i] = 1;
  return e;
}

LatticePolytope embed(const LatticePolytope& p, std::size_t ambient) {
  if (p.is_empty()) return LatticePolytope::empty(ambient);
  std::vector<Point> pts;
  for (auto v : p.vertices()) {
    v.resize(ambient, 0);
    pts.push_back(std::move(v));
  }
  return convex_hull(ambient, std::move(pts));
}

LatticePolytope translate(const LatticePolytope& p, const Point& t) {
  if (p.is_empty()) return p;
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) pts.push_back(v + t);
  return convex_hull(p.ambient_dim(), std::move(pts));
}

LatticePolytope hull_of_union(std::size_t ambient, const std::vector<LatticePolytope>& parts,
                              const std::vector<Point>& extra = {}) {
  std::vector<Point> pts = extra;
  for (const auto& q : parts) pts.insert(pts.end(), q.vertices().begin(), q.vertices().end());
  if (pts.empty()) return LatticePolytope::empty(ambient);
  return convex_hull(ambient, std::move(pts));
}

}  // namespace

LatticePolytope quotient_polytope(const LatticePolytope& p, std::size_t i) {
  require_nonnegative(p, i);
  std::vector<Point> pts;
  for (const auto& x : p.lattice_points()) {
    if (x[i] <= 0) continue;
    Point a = x, b = x;
    a[i] -= 1;
    b[i] = 0;
    pts.push_back(std::move(a));
    pts.push_back(std::move(b));
  }
  if (pts.empty()) return LatticePolytope::empty(p.ambient_dim());
  return convex_hull(p.ambient_dim(), std::move(pts));
}

LatticePolytope remainder_polytope(const LatticePolytope& p, std::size_t i) {
  require_nonnegative(p, i);
  if (p.is_empty()) return p;
  std::vector<Point> pts;
  for (auto x : p.lattice_points()) {
    x[i] = 0;
    pts.push_back(std::move(x));
  }
  return convex_hull(p.ambient_dim(), std::move(pts));
}

LatticePolytope division_envelope(const LatticePolytope& p, std::size_t i) {
  LatticePolytope q = quotient_polytope(p, i);
  LatticePolytope r = remainder_polytope(p, i);
  std::vector<Point> lifted;
  for (const auto& v : q.vertices()) lifted.push_back(v + unit(p.ambient_dim(), i));
  return hull_of_union(p.ambient_dim(), {q, r}, lifted);
}

bool is_i_saturated(const LatticePolytope& p, std::size_t i) {
  require_nonnegative(p, i);
  for (const auto& x : p.lattice_points())
    if (x[i] != 0) return division_envelope(p, i) == p;
  return true;
}

bool slice_criterion(const LatticePolytope& p, std::size_t i) {
  require_nonnegative(p, i);
  if (p.is_empty()) return true;
  // With non-negative coordinates the slice {x_i = 0} is a face of P.
  std::vector<Point> slice;
  for (const auto& v : p.vertices())
    if (v[i] == 0) slice.push_back(v);
  LatticePolytope r = remainder_polytope(p, i);
  if (slice.empty()) return r.is_empty();
  return r == convex_hull(p.ambient_dim(), std::move(slice));
}

bool SaturationProfile::saturated() const {
  return std::all_of(steps.begin(), steps.end(), [](const SaturationStep& s) { return s.saturated; });
}

SaturationProfile is_saturated(const LatticePolytope& p, const std::vector<std::size_t>& order) {
  SaturationProfile profile;
  profile.polytope = p;
  profile.order = order;
  LatticePolytope current = p;
  for (std::size_t i : order) {
    SaturationStep step;
    step.index = i;
    step.saturated = is_i_saturated(current, i);
    if (!step.saturated) {
      LatticePolytope env = division_envelope(current, i);
      for (const auto& v : env.vertices())
        if (!current.contains(v)) {
          step.witness = v;
          break;
        }
      if (!step.witness) throw InvariantError("unsaturated polytope without a witness");
    }
    step.slice_criterion = slice_criterion(current, i);
    if (step.slice_criterion != step.saturated)
      profile.diagnostics.push_back("coordinate " + std::to_string(i + 1) + ": saturation verdict " +
                                    (step.saturated ? "true" : "false") + " but slice criterion " +
                                    (step.slice_criterion ? "true" : "false"));
    profile.steps.push_back(std::move(step));
    current = remainder_polytope(current, i);
  }
  return profile;
}

Integer LemmaPolytopes::mixed_volume_p() const {
  std::vector<LatticePolytope> tuple = p;
  for (std::size_t l = 0; l < k; ++l) tuple.push_back(convex_hull(d + k, {Point(d + k, 0), unit(d + k, l)}));
  return mixed_volume(tuple);
}

Integer LemmaPolytopes::mixed_volume_n() const { return mixed_volume(n); }

LemmaPolytopes build_lemma_polytopes(const PolySystem& sys, std::size_t k) {
  const std::size_t d = sys.dim();
  if (!sys.is_square()) throw PreconditionError("square_system", "lemma polytopes need a square system");
  if (k < 1 || k + 1 > d) throw PreconditionError("lift_count", "need 1 <= k <= d-1");
  for (const auto& f : sys.polynomials())
    if (f.has_negative_exponents()) throw PreconditionError("nonnegative_exponents", "system is not normalised");
  IntVector down(d, 0);
  down[d - 1] = -1;
  std::vector<std::size_t> prefix(k);
  for (std::size_t l = 0; l < k; ++l) prefix[l] = l;

  LemmaPolytopes out;
  out.d = d;
  out.k = k;
  const std::size_t big = d + k;
  for (std::size_t j = 0; j < d; ++j) {
    const LaurentPolynomial& f = sys[j];
    LaurentPolynomial facial = facial_restriction(f, down);
    LatticePolytope np_facial = newton_polytope(facial);
    if (!is_saturated(np_facial, prefix).saturated())
      throw PreconditionError("saturated_facial_system",
                              "facial polynomial " + std::to_string(j + 1) + " is not (1..k)-saturated");
    std::vector<LatticePolytope> parts;
    LaurentPolynomial rest = f - facial;
    if (!rest.is_zero()) parts.push_back(embed(newton_polytope(rest), big));
    LatticePolytope r = np_facial;
    for (std::size_t i = 0; i < k; ++i) {
      parts.push_back(translate(embed(quotient_polytope(r, i), big), unit(big, d + i)));
      r = remainder_polytope(r, i);
    }
    parts.push_back(embed(r, big));
    out.p.push_back(hull_of_union(big, parts));

    // N_j: forget the first k coordinates of R^(d+k).
    std::vector<Point> pts{Point(d, 0)};
    LatticePolytope np = newton_polytope(f);
    for (const auto& v : np.vertices()) {
      Point w(d, 0);
      for (std::size_t c = k; c < d; ++c) w[c - k] = v[c];
      pts.push_back(std::move(w));
    }
    for (std::size_t l = 0; l < k; ++l)
      if (facial.uses_variable(l)) pts.push_back(unit(d, d - k + l));
    out.n.push_back(convex_hull(d, std::move(pts)));
  }
  for (std::size_t j = 0; j < k; ++j)
    out.delta.push_back(convex_hull(big, {Point(big, 0), unit(big, j), unit(big, d + j)}));
  return out;
}

}  // namespace mvlift
