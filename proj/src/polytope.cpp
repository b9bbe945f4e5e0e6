#include "mvlift/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <set>

#include "mvlift/error.hpp"
#include "mvlift/lattice.hpp"

namespace mvlift {

Direction::Direction(IntVector v) : v_(std::move(v)) {
  if (v_.empty() || is_zero(v_) || gcd(v_) != 1)
    throw PreconditionError("primitive_direction", "direction must be a nonzero primitive integer vector");
}

Direction Direction::primitive_of(const IntVector& v) {
  if (is_zero(v)) throw PreconditionError("primitive_direction", "zero vector has no direction");
  return Direction(primitive(v));
}

Direction Direction::operator-() const { return Direction(scaled(v_, -1)); }

namespace detail {

struct PolytopeData {
  std::size_t ambient = 0;
  int dim = -1;
  std::vector<Point> vertices;
  std::vector<Facet> facets;
  std::vector<Equation> equations;
  mutable std::once_flag points_once;
  mutable std::vector<Point> points;
};

}  // namespace detail

namespace {

using Bits = std::vector<std::uint64_t>;

Bits make_bits(std::size_t n) { return Bits((n + 63) / 64, 0); }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

Bits bits_and(const Bits& a, const Bits& b) {
  Bits r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
  return r;
}

bool bits_subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::size_t popcount(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Int narrow(__int128 x) {
  if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min())
    throw InvariantError("64-bit overflow in hull computation");
  return static_cast<Int>(x);
}

__int128 dot128(const IntVector& a, const IntVector& b) {
  __int128 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
  return s;
}

struct Ray {
  IntVector y;
  Bits zero;
};

// Extreme rays of {y : <a_j, y> >= 0 for all j}, a pointed full-dimensional
// cone in R^m, by the double description method.
std::vector<Ray> double_description(const std::vector<IntVector>& a, std::size_t m) {
  const std::size_t count = a.size();
  // Initial basis of m linearly independent constraint rows.
  std::vector<std::size_t> basis;
  std::vector<IntVector> chosen;
  for (std::size_t j = 0; j < count && basis.size() < m; ++j) {
    chosen.push_back(a[j]);
    if (rank_info(chosen, m).rank == chosen.size()) {
      basis.push_back(j);
    } else {
      chosen.pop_back();
    }
  }
  if (basis.size() != m) throw InvariantError("hull: constraint rows do not span");

  // Columns of the inverse of the basis matrix are the initial rays.
  std::vector<std::vector<Rational>> g(m, std::vector<Rational>(2 * m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g[i][j] = a[basis[i]][j];
    g[i][m + i] = 1;
  }
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t p = c;
    while (g[p][c] == 0) ++p;
    std::swap(g[p], g[c]);
    Rational pivot = g[c][c];
    for (auto& x : g[c]) x /= pivot;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || g[r][c] == 0) continue;
      Rational f = g[r][c];
      for (std::size_t j = 0; j < 2 * m; ++j) g[r][j] -= f * g[c][j];
    }
  }
  std::vector<Ray> rays;
  for (std::size_t k = 0; k < m; ++k) {
    Integer lcm = 1;
    for (std::size_t i = 0; i < m; ++i) lcm = boost::multiprecision::lcm(lcm, Integer(denominator(g[i][m + k])));
    std::vector<Integer> col(m);
    for (std::size_t i = 0; i < m; ++i) col[i] = numerator(g[i][m + k]) * (lcm / denominator(g[i][m + k]));
    Integer content = 0;
    for (const auto& x : col) content = boost::multiprecision::gcd(content, x);
    Ray ray;
    ray.y.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Integer v = col[i] / content;
      if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        throw InvariantError("64-bit overflow in hull computation");
      ray.y[i] = v.convert_to<Int>();
    }
    ray.zero = make_bits(count);
    for (std::size_t l = 0; l < m; ++l)
      if (l != k) set_bit(ray.zero, basis[l]);
    rays.push_back(std::move(ray));
  }

  std::vector<bool> in_basis(count, false);
  for (auto b : basis) in_basis[b] = true;
  const std::size_t adjacency_rank = m >= 2 ? m - 2 : 0;

  for (std::size_t j = 0; j < count; ++j) {
    if (in_basis[j]) continue;
    std::vector<__int128> s(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot128(a[j], rays[r].y);
      if (s[r] > 0) pos.push_back(r);
      else if (s[r] < 0) neg.push_back(r);
      else set_bit(rays[r].zero, j);
    }
    if (neg.empty()) continue;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r)
      if (s[r] >= 0) next.push_back(rays[r]);
    for (auto p : pos)
      for (auto n : neg) {
        Bits common = bits_and(rays[p].zero, rays[n].zero);
        if (popcount(common) < adjacency_rank) continue;
        bool adjacent = true;
        for (std::size_t w = 0; w < rays.size() && adjacent; ++w) {
          if (w == p || w == n) continue;
          if (bits_subset(common, rays[w].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        std::vector<__int128> y(m);
        __int128 content = 0;
        for (std::size_t i = 0; i < m; ++i) {
          y[i] = s[p] * rays[n].y[i] - s[n] * rays[p].y[i];
          __int128 u = y[i] < 0 ? -y[i] : y[i];
          __int128 c = content;
          while (u != 0) {
            __int128 t = c % u;
            c = u;
            u = t;
          }
          content = c;
        }
        Ray ray;
        ray.y.resize(m);
        for (std::size_t i = 0; i < m; ++i) ray.y[i] = narrow(y[i] / content);
        ray.zero = common;
        set_bit(ray.zero, j);
        next.push_back(std::move(ray));
      }
    rays = std::move(next);
  }
  return rays;
}

std::shared_ptr<detail::PolytopeData> build(std::size_t ambient, std::vector<Point> pts) {
  auto d = std::make_shared<detail::PolytopeData>();
  d->ambient = ambient;
  for (const auto& p : pts)
    if (p.size() != ambient) throw ValidationError("point dimension does not match ambient dimension");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) return d;

  std::vector<IntVector> diffs;
  for (std::size_t j = 1; j < pts.size(); ++j) diffs.push_back(pts[j] - pts[0]);
  RankInfo info = rank_info(diffs, ambient);
  const std::size_t r = info.rank;
  d->dim = static_cast<int>(r);
  if (r < ambient) {
    for (auto& c : rational_kernel(diffs.empty() ? std::vector<IntVector>{IntVector(ambient, 0)} : diffs, ambient))
      d->equations.push_back({c, dot(c, pts[0])});
  }
  if (r == 0) {
    d->vertices = {pts[0]};
    return d;
  }

  // Homogenised coordinates restricted to the pivot columns.
  const auto& cols = info.pivots;
  std::vector<IntVector> rows;
  rows.reserve(pts.size());
  for (const auto& p : pts) {
    IntVector row(r + 1);
    row[0] = 1;
    for (std::size_t t = 0; t < r; ++t) row[t + 1] = p[cols[t]];
    rows.push_back(std::move(row));
  }
  std::vector<Ray> rays = double_description(rows, r + 1);

  std::vector<std::vector<std::size_t>> incident(pts.size());
  for (std::size_t f = 0; f < rays.size(); ++f)
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (test_bit(rays[f].zero, j)) incident[j].push_back(f);

  std::vector<std::size_t> index(pts.size(), pts.size());
  for (std::size_t j = 0; j < pts.size(); ++j) {
    std::vector<IntVector> normals;
    for (auto f : incident[j]) normals.emplace_back(rays[f].y.begin() + 1, rays[f].y.end());
    if (normals.size() >= r && rank_info(normals, r).rank == r) {
      index[j] = d->vertices.size();
      d->vertices.push_back(pts[j]);
    }
  }

  for (const auto& ray : rays) {
    Facet facet;
    facet.normal.assign(ambient, 0);
    for (std::size_t t = 0; t < r; ++t) facet.normal[cols[t]] = -ray.y[t + 1];
    facet.offset = ray.y[0];
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (index[j] != pts.size() && test_bit(ray.zero, j)) facet.vertices.push_back(index[j]);
    d->facets.push_back(std::move(facet));
  }
  std::sort(d->facets.begin(), d->facets.end(),
            [](const Facet& x, const Facet& y) { return x.vertices < y.vertices; });
  return d;
}

}  // namespace

LatticePolytope::LatticePolytope() : d_(std::make_shared<detail::PolytopeData>()) {}

LatticePolytope::LatticePolytope(std::shared_ptr<const detail::PolytopeData> data) : d_(std::move(data)) {}

LatticePolytope LatticePolytope::empty(std::size_t ambient) {
  auto d = std::make_shared<detail::PolytopeData>();
  d->ambient = ambient;
  return LatticePolytope(std::move(d));
}

LatticePolytope LatticePolytope::hull(std::size_t ambient, std::vector<Point> points) {
  if (points.empty()) throw PreconditionError("nonempty_input", "convex hull of an empty point set");
  return LatticePolytope(build(ambient, std::move(points)));
}

std::size_t LatticePolytope::ambient_dim() const { return d_->ambient; }
bool LatticePolytope::is_empty() const { return d_->vertices.empty(); }
int LatticePolytope::dim() const { return d_->dim; }
const std::vector<Point>& LatticePolytope::vertices() const { return d_->vertices; }
const std::vector<Facet>& LatticePolytope::facets() const { return d_->facets; }
const std::vector<Equation>& LatticePolytope::equations() const { return d_->equations; }

bool LatticePolytope::contains(const Point& x) const {
  if (is_empty() || x.size() != d_->ambient) return false;
  for (const auto& e : d_->equations)
    if (dot128(e.normal, x) != e.value) return false;
  for (const auto& f : d_->facets)
    if (dot128(f.normal, x) > f.offset) return false;
  return true;
}

bool LatticePolytope::contains(const std::vector<Integer>& numerators, const Integer& denominator) const {
  if (is_empty() || numerators.size() != d_->ambient) return false;
  if (denominator <= 0) throw PreconditionError("positive_denominator", "rational point needs a positive denominator");
  auto lhs = [&](const IntVector& normal) {
    Integer s = 0;
    for (std::size_t i = 0; i < normal.size(); ++i) s += Integer(normal[i]) * numerators[i];
    return s;
  };
  for (const auto& e : d_->equations)
    if (lhs(e.normal) != Integer(e.value) * denominator) return false;
  for (const auto& f : d_->facets)
    if (lhs(f.normal) > Integer(f.offset) * denominator) return false;
  return true;
}

bool LatticePolytope::contains(const LatticePolytope& other) const {
  if (other.is_empty()) return true;
  for (const auto& v : other.vertices())
    if (!contains(v)) return false;
  return true;
}

const std::vector<Point>& LatticePolytope::lattice_points() const {
  std::call_once(d_->points_once, [this] {
    if (is_empty()) return;
    const std::size_t n = d_->ambient;
    IntVector lo = d_->vertices[0], hi = d_->vertices[0];
    for (const auto& v : d_->vertices)
      for (std::size_t i = 0; i < n; ++i) {
        lo[i] = std::min(lo[i], v[i]);
        hi[i] = std::max(hi[i], v[i]);
      }
    IntVector x = lo;
    while (true) {
      if (contains(x)) d_->points.push_back(x);
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (x[i] < hi[i]) {
          ++x[i];
          break;
        }
        x[i] = lo[i];
        if (i == 0) return;
      }
      if (n == 0) return;
    }
  });
  return d_->points;
}

bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
  return a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices();
}

LatticePolytope convex_hull(std::size_t ambient, std::vector<Point> points) {
  return LatticePolytope::hull(ambient, std::move(points));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw ValidationError("Minkowski sum of polytopes in different dimensions");
  if (p.is_empty() || q.is_empty()) return LatticePolytope::empty(p.ambient_dim());
  std::vector<Point> pts;
  pts.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = checked_add(a[i], b[i]);
      pts.push_back(std::move(s));
    }
  return LatticePolytope::hull(p.ambient_dim(), std::move(pts));
}

LatticePolytope minkowski_sum(std::span<const LatticePolytope> tuple) {
  if (tuple.empty()) throw PreconditionError("nonempty_input", "Minkowski sum of an empty tuple");
  LatticePolytope acc = tuple[0];
  for (std::size_t i = 1; i < tuple.size(); ++i) acc = minkowski_sum(acc, tuple[i]);
  return acc;
}

Int support_value(const LatticePolytope& p, const IntVector& v) {
  if (p.is_empty()) throw PreconditionError("nonempty_polytope", "support function of the empty polytope");
  if (v.size() != p.ambient_dim()) throw ValidationError("direction dimension does not match polytope");
  Int best = std::numeric_limits<Int>::min();
  for (const auto& x : p.vertices()) best = std::max(best, dot(v, x));
  return best;
}

LatticePolytope face(const LatticePolytope& p, const IntVector& u) {
  if (p.is_empty()) return p;
  Int h = support_value(p, u);
  std::vector<Point> pts;
  for (const auto& x : p.vertices())
    if (dot(u, x) == h) pts.push_back(x);
  return LatticePolytope::hull(p.ambient_dim(), std::move(pts));
}

LatticePolytope face(const LatticePolytope& p, const Direction& u) { return face(p, u.vector()); }

int affine_dimension(const std::vector<Point>& points, std::size_t ambient) {
  if (points.empty()) return -1;
  std::vector<IntVector> diffs;
  for (std::size_t j = 1; j < points.size(); ++j) diffs.push_back(points[j] - points[0]);
  return static_cast<int>(rank_info(diffs, ambient).rank);
}

namespace {

// Pulling triangulation: cone from the first vertex over every facet avoiding it.
void accumulate_volume(const LatticePolytope& p, std::vector<Point>& apexes, Integer& total) {
  const auto& verts = p.vertices();
  if (verts.size() == static_cast<std::size_t>(p.dim()) + 1) {
    std::vector<Point> simplex = apexes;
    simplex.insert(simplex.end(), verts.begin(), verts.end());
    IntMatrix m;
    for (std::size_t j = 1; j < simplex.size(); ++j) m.push_back(simplex[j] - simplex[0]);
    total += boost::multiprecision::abs(determinant(m));
    return;
  }
  apexes.push_back(verts[0]);
  for (const auto& f : p.facets()) {
    if (std::find(f.vertices.begin(), f.vertices.end(), std::size_t{0}) != f.vertices.end()) continue;
    std::vector<Point> pts;
    for (auto i : f.vertices) pts.push_back(verts[i]);
    accumulate_volume(LatticePolytope::hull(p.ambient_dim(), std::move(pts)), apexes, total);
  }
  apexes.pop_back();
}

}  // namespace

Integer normalized_volume(const LatticePolytope& p) {
  if (p.is_empty() || p.dim() < static_cast<int>(p.ambient_dim())) return Integer(0);
  if (p.ambient_dim() == 0) return Integer(1);
  std::vector<Point> apexes;
  Integer total = 0;
  accumulate_volume(p, apexes, total);
  return total;
}

namespace {

Integer factorial(std::size_t n) {
  Integer f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

Integer combine_subset_volumes(const std::vector<Integer>& vol, std::size_t n) {
  Integer sum = 0;
  for (std::size_t mask = 1; mask < vol.size(); ++mask) {
    std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    if ((n - size) % 2 == 0) sum += vol[mask];
    else sum -= vol[mask];
  }
  Integer f = factorial(n);
  if (sum % f != 0) throw InvariantError("mixed volume sum not divisible by n!");
  return sum / f;
}

}  // namespace

Integer mixed_volume(std::span<const LatticePolytope> tuple, Execution exec) {
  const std::size_t n = tuple.size();
  if (n == 0) throw PreconditionError("square_tuple", "mixed volume of an empty tuple");
  for (const auto& p : tuple)
    if (p.ambient_dim() != n) throw PreconditionError("square_tuple", "mixed volume needs n polytopes in R^n");
  for (const auto& p : tuple)
    if (p.is_empty()) return Integer(0);
  if (n >= 31) throw PreconditionError("dimension_limit", "mixed volume limited to fewer than 31 polytopes");
  const std::size_t masks = std::size_t{1} << n;
  std::vector<Integer> vol(masks, Integer(0));

  if (exec == Execution::serial) {
    for (std::size_t mask = 1; mask < masks; ++mask) {
      std::vector<LatticePolytope> chosen;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) chosen.push_back(tuple[i]);
      vol[mask] = normalized_volume(minkowski_sum(chosen));
    }
    return combine_subset_volumes(vol, n);
  }

  // Level k sums reuse level k-1 sums (drop the lowest summand).
  std::vector<LatticePolytope> sums(masks);
  for (std::size_t level = 1; level <= n; ++level) {
    std::vector<std::size_t> batch;
    for (std::size_t mask = 1; mask < masks; ++mask)
      if (static_cast<std::size_t>(std::popcount(mask)) == level) batch.push_back(mask);
    for_each_index(batch.size(), Execution::parallel, [&](std::size_t b) {
      std::size_t mask = batch[b];
      std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
      std::size_t rest = mask & (mask - 1);
      sums[mask] = rest == 0 ? tuple[low] : minkowski_sum(sums[rest], tuple[low]);
      vol[mask] = normalized_volume(sums[mask]);
    });
  }
  return combine_subset_volumes(vol, n);
}

bool is_essential(std::span<const LatticePolytope> tuple, std::size_t ambient) {
  const std::size_t k = tuple.size();
  if (k > ambient) throw PreconditionError("tuple_size", "essentiality needs at most n polytopes in R^n");
  if (k >= 31) throw PreconditionError("dimension_limit", "essentiality limited to fewer than 31 polytopes");
  for (const auto& p : tuple) {
    if (p.ambient_dim() != ambient) throw ValidationError("polytope dimension does not match ambient dimension");
    if (p.is_empty()) return false;
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<IntVector> diffs;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(mask >> i & 1U)) continue;
      const auto& verts = tuple[i].vertices();
      for (std::size_t j = 1; j < verts.size(); ++j) diffs.push_back(verts[j] - verts[0]);
    }
    std::size_t dim = rank_info(diffs, ambient).rank;
    if (dim + 1 <= static_cast<std::size_t>(std::popcount(mask))) return false;
  }
  return true;
}

std::vector<FaceRecord> proper_faces(const LatticePolytope& p) {
  std::vector<FaceRecord> out;
  if (p.is_empty()) return out;
  const auto& facets = p.facets();
  const std::size_t nv = p.vertices().size();
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  for (const auto& f : facets)
    if (seen.insert(f.vertices).second) queue.push_back(f.vertices);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (const auto& f : facets) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[qi].begin(), queue[qi].end(), f.vertices.begin(), f.vertices.end(),
                            std::back_inserter(meet));
      if (meet.empty() || meet.size() == queue[qi].size()) continue;
      if (seen.insert(meet).second) queue.push_back(meet);
    }
  }
  for (const auto& verts : queue) {
    FaceRecord rec;
    rec.vertices = verts;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (std::includes(facets[f].vertices.begin(), facets[f].vertices.end(), verts.begin(), verts.end()))
        rec.facets.push_back(f);
    std::vector<Point> pts;
    for (auto i : verts) pts.push_back(p.vertices()[i]);
    rec.dim = affine_dimension(pts, p.ambient_dim());
    out.push_back(std::move(rec));
  }
  if (p.dim() < static_cast<int>(p.ambient_dim())) {
    FaceRecord whole;
    for (std::size_t i = 0; i < nv; ++i) whole.vertices.push_back(i);
    whole.dim = p.dim();
    out.push_back(std::move(whole));
  }
  return out;
}

std::vector<Direction> enumerate_fan_directions(std::span<const LatticePolytope> tuple) {
  if (tuple.empty()) return {};
  LatticePolytope sum = minkowski_sum(tuple);
  if (sum.is_empty()) return {};
  const std::size_t n = sum.ambient_dim();
  if (n == 0) return {};
  std::vector<std::pair<int, Direction>> found;
  for (const auto& rec : proper_faces(sum)) {
    IntVector acc(n, 0);
    for (auto f : rec.facets) acc = acc + primitive(sum.facets()[f].normal);
    if (rec.facets.empty() || is_zero(acc)) {
      // Only the lineality space contributes.
      if (sum.equations().empty()) continue;
      acc = acc + sum.equations()[0].normal;
    }
    found.emplace_back(rec.dim, Direction::primitive_of(acc));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<Direction> out;
  for (auto& [dim, dir] : found) out.push_back(std::move(dir));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LatticePolytope project(const LatticePolytope& p, const std::vector<std::size_t>& kept) {
  for (auto c : kept)
    if (c >= p.ambient_dim()) throw ValidationError("projection coordinate out of range");
  if (p.is_empty()) return LatticePolytope::empty(kept.size());
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) {
    Point q;
    for (auto c : kept) q.push_back(v[c]);
    pts.push_back(std::move(q));
  }
  return LatticePolytope::hull(kept.size(), std::move(pts));
}

}  // namespace mvlift
