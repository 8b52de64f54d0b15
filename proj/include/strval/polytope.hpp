#pragma once

#include "strval/rational.hpp"

#include <cstdint>
#include <vector>

namespace strval {

/// normal . x <= rhs (inequality) or normal . x == rhs (equation). Normals are primitive integer vectors.
struct Halfspace {
  RationalVector normal;
  Rational rhs;
  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.rhs < b.rhs;
  }
};

/// Bounded rational polytope with both descriptions. Vertices are sorted; facets are given
/// relative to the affine hull, which is cut out by `equations`.
struct RationalPolytope {
  int ambient_dim = 0;
  int dim = -1;  // intrinsic dimension; -1 for the empty set
  std::vector<RationalVector> vertices;
  std::vector<Halfspace> facets;
  std::vector<Halfspace> equations;

  bool empty() const { return dim < 0; }
  bool contains(const RationalVector& x, const Rational& scale = 1) const;
  RationalPolytope scaled(const Rational& k) const;
  friend bool operator==(const RationalPolytope& a, const RationalPolytope& b) { return a.vertices == b.vertices; }
};

/// Extreme rays of the pointed cone { x : A x <= 0 } by the double description method.
/// Each ray is a primitive integer vector. Throws DomainError when the cone is not pointed.
std::vector<RationalVector> extreme_rays(const std::vector<RationalVector>& constraints, int n);

/// Exact convex hull of finitely many points. Throws DomainError on an empty input.
RationalPolytope convex_hull(std::vector<RationalVector> points, int ambient_dim);

/// Vertex enumeration from the H-description (facets + equations) alone.
std::vector<RationalVector> vertices_from_halfspaces(const RationalPolytope& p);

/// Number of integer points of k * P by enumeration over the bounding box.
std::uint64_t lattice_count(const RationalPolytope& p, std::int64_t k = 1);
std::vector<std::vector<std::int64_t>> lattice_points(const RationalPolytope& p, std::int64_t k = 1);

struct VolumeResult {
  Rational volume;
  int intrinsic_dim = 0;
};

/// Euclidean volume in the ambient dimension (0 for lower-dimensional polytopes), by a pulling
/// triangulation and determinants.
VolumeResult volume(const RationalPolytope& p);

}  // namespace strval
