#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "mvlift/numeric.hpp"
#include "mvlift/parallel.hpp"

namespace mvlift {

/// Nonzero primitive integer vector.
class Direction {
 public:
  /// Throws PreconditionError unless v is nonzero with content 1.
  explicit Direction(IntVector v);
  /// Divides out the content of a nonzero vector.
  static Direction primitive_of(const IntVector& v);

  const IntVector& vector() const { return v_; }
  std::size_t dim() const { return v_.size(); }
  Int operator[](std::size_t i) const { return v_[i]; }
  Direction operator-() const;

  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  IntVector v_;
};

/// normal . x <= offset on the polytope, with equality exactly on the listed
/// vertices. In lower-dimensional polytopes the normal is one representative
/// modulo the orthogonal complement of the affine hull.
struct Facet {
  IntVector normal;
  Int offset = 0;
  std::vector<std::size_t> vertices;
};

/// normal . x == value on the affine hull.
struct Equation {
  IntVector normal;
  Int value = 0;
};

namespace detail {
struct PolytopeData;
}

/// Lattice polytope given by its (irredundant, lexicographically sorted)
/// vertex set. Empty and lower-dimensional polytopes are first-class.
class LatticePolytope {
 public:
  /// The empty polytope in R^0.
  LatticePolytope();

  static LatticePolytope empty(std::size_t ambient);
  /// Throws PreconditionError on an empty point set.
  static LatticePolytope hull(std::size_t ambient, std::vector<Point> points);

  std::size_t ambient_dim() const;
  bool is_empty() const;
  /// Affine dimension; -1 for the empty polytope.
  int dim() const;

  const std::vector<Point>& vertices() const;
  const std::vector<Facet>& facets() const;
  const std::vector<Equation>& equations() const;

  bool contains(const Point& x) const;
  /// Membership of the rational point numerators / denominator.
  bool contains(const std::vector<Integer>& numerators, const Integer& denominator) const;
  bool contains(const LatticePolytope& other) const;

  /// All lattice points, sorted. Computed once and cached.
  const std::vector<Point>& lattice_points() const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b);
  friend bool operator!=(const LatticePolytope& a, const LatticePolytope& b) { return !(a == b); }

 private:
  explicit LatticePolytope(std::shared_ptr<const detail::PolytopeData> data);
  std::shared_ptr<const detail::PolytopeData> d_;
};

LatticePolytope convex_hull(std::size_t ambient, std::vector<Point> points);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope minkowski_sum(std::span<const LatticePolytope> tuple);

/// Face maximising <., u>.
LatticePolytope face(const LatticePolytope& p, const Direction& u);
LatticePolytope face(const LatticePolytope& p, const IntVector& u);

/// max over p of <v, .>. Requires p nonempty.
Int support_value(const LatticePolytope& p, const IntVector& v);
inline Int support_value(const LatticePolytope& p, const Direction& v) { return support_value(p, v.vector()); }

/// n! times the Euclidean volume; zero for lower-dimensional polytopes.
Integer normalized_volume(const LatticePolytope& p);

/// Normalized mixed volume of n polytopes in R^n by inclusion-exclusion over
/// the 2^n - 1 partial Minkowski sums. The parallel kernel evaluates the sums
/// level by level with OpenMP; the serial path is the reference.
Integer mixed_volume(std::span<const LatticePolytope> tuple, Execution exec = Execution::parallel);

/// Essentiality of k <= n polytopes in R^n: no nonempty subset I with
/// dim(sum_{i in I} P_i) <= |I| - 1.
bool is_essential(std::span<const LatticePolytope> tuple, std::size_t ambient);

/// One primitive relative-interior representative for every nonzero cone of
/// the normal fan of the Minkowski sum of the tuple (the common refinement of
/// the individual fans). Ordered by face dimension (descending), then
/// lexicographically.
std::vector<Direction> enumerate_fan_directions(std::span<const LatticePolytope> tuple);

/// Hull of the coordinate projection onto `kept` (in that order).
LatticePolytope project(const LatticePolytope& p, const std::vector<std::size_t>& kept);

/// Nonempty faces as vertex-index sets, the polytope itself included only when
/// it is lower-dimensional (its normal cone is then a nonzero linear space).
struct FaceRecord {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> facets;
  int dim = 0;
};
std::vector<FaceRecord> proper_faces(const LatticePolytope& p);

/// Affine dimension of a point set (-1 when empty).
int affine_dimension(const std::vector<Point>& points, std::size_t ambient);

}  // namespace mvlift
