#pragma once

#include "fundform/arith.hpp"
#include "fundform/matrix.hpp"

#include <cstddef>
#include <memory>
#include <vector>

namespace fundform {

using LatticePoint = IntVector;

/// Order used for every emitted list of lattice points: coordinate sum
/// ascending, then lexicographically descending.
bool point_before(const LatticePoint& a, const LatticePoint& b);
void sort_points(std::vector<LatticePoint>& pts);

/// Ordered list of distinct lattice points in Z^dim.
struct PointConfig {
  std::size_t dim = 0;
  std::vector<LatticePoint> points;
  /// Pairwise differences generate Z^dim (not just a finite-index sublattice).
  bool differences_generate = false;

  /// Validates coordinates and rejects duplicates; keeps the given order.
  static PointConfig make(std::size_t dim, std::vector<LatticePoint> points);
  std::size_t size() const noexcept { return points.size(); }
};

/// Supporting half-space normal . x <= offset with a primitive integer normal.
struct Facet {
  IntVector normal;
  Integer offset;
};

/// Affine lattice chart of an affine subspace: x = origin + basis^T y for
/// y in Z^d, with y recovered as the first d entries of coordinate_map * (x - origin).
struct AffineChart {
  LatticePoint origin;
  IntegerMatrix basis;           ///< d x k, saturated
  IntegerMatrix coordinate_map;  ///< k x k unimodular
  std::size_t dimension() const noexcept { return basis.rows(); }
  RatVector to_chart(const RatVector& x) const;
  LatticePoint from_chart(const IntVector& y) const;
};

/// Affine chart for the lattice points of aff(points).
AffineChart affine_chart(std::size_t dim, const std::vector<LatticePoint>& points);

/// Convex hull of finitely many lattice points. The constructor keeps only
/// the extreme points; lattice points are computed on first request.
class LatticePolytope {
 public:
  LatticePolytope(std::size_t dim, const std::vector<LatticePoint>& points);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  std::size_t affine_dimension() const noexcept { return chart_.dimension(); }
  bool is_full_dimensional() const noexcept { return affine_dimension() == dim_; }
  const AffineChart& chart() const noexcept { return chart_; }
  /// Facets in chart coordinates (ambient coordinates when full-dimensional).
  const std::vector<Facet>& facets() const noexcept { return facets_; }

  bool contains(const RatVector& x) const;

  /// All lattice points in point_before order. Throws BudgetExceeded when
  /// more than `budget` points would be produced.
  const std::vector<LatticePoint>& lattice_points(std::size_t budget = 10'000'000) const;

 private:
  std::size_t dim_;
  std::vector<LatticePoint> vertices_;
  AffineChart chart_;
  std::vector<Facet> facets_;
  struct PointCache;
  std::shared_ptr<PointCache> points_cache_;
};

/// A primitive nonzero integer vector; throws InvalidInput otherwise.
IntVector make_direction(const IntVector& v);

/// Lattice points of conv(vertices) for rational vertices in Q^dim.
std::vector<LatticePoint> lattice_points_of_hull(std::size_t dim,
                                                 const std::vector<RatVector>& vertices,
                                                 std::size_t budget = 10'000'000);

PointConfig lattice_points(const LatticePolytope& p);

Integer width_in_direction(const LatticePolytope& p, const IntVector& v);

struct LatticeWidth {
  Integer width;
  IntVector direction;  ///< zero vector for a point
  bool certified = false;
};

/// Minimal width over primitive directions. Ties are broken by the smallest
/// sum of absolute values, then lexicographically largest, with positive
/// leading entry. `budget` caps the number of candidate directions.
LatticeWidth lattice_width(const LatticePolytope& p, std::size_t budget = 2'000'000);

/// Image x -> U x + t; throws InvalidInput when U is not unimodular.
LatticePolytope unimodular_image(const LatticePolytope& p, const IntegerMatrix& u,
                                 const LatticePoint& t);

LatticePolytope dilate(const LatticePolytope& p, const Integer& r);

/// Lattice points of p on <x, v> = level, enumerated inside the slice only.
PointConfig slice_points(const LatticePolytope& p, const IntVector& v, const Integer& level,
                         std::size_t budget = 10'000'000);

/// Vertices of the rational polytope p cut by <x, v> = level (unordered,
/// possibly with redundant points).
std::vector<RatVector> slice_vertices(const std::vector<LatticePoint>& vertices,
                                      const IntVector& v, const Integer& level);

}  // namespace fundform
