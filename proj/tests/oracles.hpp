#pragma once

// Test-side reference computations. Deliberately naive and independent of the
// library's algorithms.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mvlift/numeric.hpp"

namespace oracle {

using mvlift::Int;
using mvlift::Point;

inline std::vector<Point> random_points(std::mt19937_64& rng, std::size_t n, std::size_t count, Int lo, Int hi) {
  std::uniform_int_distribution<Int> d(lo, hi);
  std::vector<Point> pts(count, Point(n));
  for (auto& p : pts)
    for (auto& x : p) x = d(rng);
  return pts;
}

inline Int cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Andrew's monotone chain, strict (no collinear points kept). Sorted output.
inline std::vector<Point> hull_vertices_2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i - 1]) <= 0) --k;
    h[k++] = pts[i - 1];
  }
  h.resize(k - 1);
  if (h.size() == 1) return h;
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  return h;
}

/// Twice the area of a point set's hull (shoelace).
inline Int normalized_area(const std::vector<Point>& pts) {
  std::vector<Point> v = hull_vertices_2d(pts);
  if (v.size() < 3) return 0;
  Point c = v[0];
  std::sort(v.begin() + 1, v.end(), [&](const Point& a, const Point& b) { return cross(c, a, b) > 0; });
  Int s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return s < 0 ? -s : s;
}

inline Point add(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline std::vector<Point> minkowski_points(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> r;
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(add(x, y));
  return r;
}

inline Int mixed_area(const std::vector<Point>& p, const std::vector<Point>& q) {
  return (normalized_area(minkowski_points(p, q)) - normalized_area(p) - normalized_area(q)) / 2;
}

/// Brute-force 3D hull: supporting planes through point triples.
/// Returns the vertex set (sorted) and the |det| sum for 6 * volume.
struct Hull3 {
  std::vector<Point> vertices;
  Int normalized_volume = 0;
};

inline Point cross3(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Point sub(const Point& a, const Point& b) {
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Int dot(const Point& a, const Point& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Only valid for full-dimensional point sets.
inline Hull3 hull_3d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::set<std::pair<Point, Int>> planes;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      for (std::size_t k = j + 1; k < m; ++k) {
        Point n = cross3(sub(pts[j], pts[i]), sub(pts[k], pts[i]));
        if (n[0] == 0 && n[1] == 0 && n[2] == 0) continue;
        Int b = dot(n, pts[i]);
        bool above = false, below = false;
        for (const auto& p : pts) {
          Int v = dot(n, p) - b;
          if (v > 0) above = true;
          if (v < 0) below = true;
        }
        if (above && below) continue;
        if (above) {
          n = {-n[0], -n[1], -n[2]};
          b = -b;
        }
        Int g = mvlift::gcd(mvlift::gcd(n[0], n[1]), mvlift::gcd(n[2], b));
        planes.insert({{n[0] / g, n[1] / g, n[2] / g}, b / g});
      }
  Hull3 out;
  // Vertices: points on at least three planes with independent normals.
  for (const auto& p : pts) {
    std::vector<Point> ns;
    for (const auto& [n, b] : planes)
      if (dot(n, p) == b) ns.push_back(n);
    bool vertex = false;
    for (std::size_t a = 0; a < ns.size() && !vertex; ++a)
      for (std::size_t b = a + 1; b < ns.size() && !vertex; ++b)
        for (std::size_t c = b + 1; c < ns.size() && !vertex; ++c)
          if (dot(cross3(ns[a], ns[b]), ns[c]) != 0) vertex = true;
    if (vertex) out.vertices.push_back(p);
  }
  // Volume: cone from the first vertex over each facet polygon.
  const Point& apex = out.vertices[0];
  for (const auto& [n, b] : planes) {
    if (dot(n, apex) == b) continue;
    std::vector<Point> f;
    for (const auto& v : out.vertices)
      if (dot(n, v) == b) f.push_back(v);
    // Fan-triangulate the facet polygon after angular sorting about f[0].
    Point c = f[0];
    std::sort(f.begin() + 1, f.end(), [&](const Point& x, const Point& y) {
      return dot(cross3(sub(x, c), sub(y, c)), n) > 0;
    });
    for (std::size_t t = 1; t + 1 < f.size(); ++t) {
      Int d = dot(cross3(sub(f[t], c), sub(f[t + 1], c)), sub(c, apex));
      out.normalized_volume += d < 0 ? -d : d;
    }
  }
  return out;
}

/// Lattice points of the hull: box points that leave the hull unchanged.
inline std::size_t count_lattice_points_2d(const std::vector<Point>& pts) {
  std::vector<Point> v = hull_vertices_2d(pts);
  Int x0 = v[0][0], x1 = v[0][0], y0 = v[0][1], y1 = v[0][1];
  for (const auto& p : v) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
  std::size_t count = 0;
  for (Int x = x0; x <= x1; ++x)
    for (Int y = y0; y <= y1; ++y) {
      std::vector<Point> with = v;
      with.push_back({x, y});
      if (hull_vertices_2d(with) == v) ++count;
    }
  return count;
}

}  // namespace oracle
