#pragma once

#include "sympair/matrix.hpp"

#include <vector>

namespace sympair {

enum class Membership { Exterior, Boundary, Interior };
const char* to_string(Membership m);

// Convex hull of finitely many rational points in Q^d. Facets are found by
// testing the hyperplane through every affinely independent subset of points.
class Polytope {
 public:
  struct Facet {
    RatVector normal;  // outward, in local coordinates
    Rational offset;   // normal . y <= offset on the polytope
    std::vector<std::size_t> points;  // indices into local_points()
  };

  explicit Polytope(std::vector<RatVector> points);

  std::size_t ambient_dim() const { return d_; }
  std::size_t dim() const { return basis_.cols(); }  // dimension of the affine hull
  const std::vector<RatVector>& points() const { return points_; }
  const std::vector<Facet>& facets() const { return facets_; }
  // Points of points() that are vertices of the hull.
  std::vector<RatVector> vertices() const;

  Membership locate(const RatVector& x) const;
  bool contains(const RatVector& x) const { return locate(x) != Membership::Exterior; }

  // d-dimensional volume in the ambient coordinates (zero when lower-dimensional).
  Rational volume() const;
  // Simplices (dim()+1 ambient points each) with disjoint interiors covering the hull.
  std::vector<std::vector<RatVector>> triangulation() const;
  // The facets as polytopes in ambient coordinates.
  std::vector<Polytope> facet_polytopes() const;

 private:
  std::vector<std::vector<RatVector>> local_triangulation() const;

  std::size_t d_;
  std::vector<RatVector> points_;  // distinct input points
  RatVector origin_;
  RatMatrix basis_;                // d x k, directions of the affine hull
  std::vector<RatVector> local_;   // k-dim coordinates of points_
  std::vector<Facet> facets_;
};

Polytope minkowski_sum(const Polytope& a, const Polytope& b);

}  // namespace sympair
