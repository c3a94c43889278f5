#pragma once

#include "fundform/jets.hpp"
#include "fundform/polynomial.hpp"
#include "fundform/polytope.hpp"

#include <optional>
#include <vector>

namespace fundform {

/// Affine hypersurface (v . x)^m + lower_terms = 0 through a configuration.
struct WitnessHypersurface {
  std::size_t k = 0;
  int m = 0;
  IntVector direction;
  Polynomial lower_terms;

  Polynomial polynomial() const;
  bool vanishes_on(const PointConfig& s) const;
};

struct BasePointResult {
  bool base_point = false;
  std::optional<WitnessHypersurface> witness;
};

/// Decides whether [v] is a base point of the m-th fundamental form by
/// solving for the lower-order coefficients of a hypersurface with leading
/// form (v . x)^m through S. The witness has every free coefficient zero.
BasePointResult is_base_point(const PointConfig& s, int m, const IntVector& v);

/// Same question answered by evaluating the canonical form basis at w = v.
bool is_base_point_via_form(const PointConfig& s, int m, const IntVector& v);
bool is_base_point_via_form(const FundamentalForm& ff, const IntVector& v);

/// Base locus of a binary form system in P^1.
struct BaseLocusK2 {
  /// Rational points [w1 : w2], scaled to coprime integers with the first
  /// nonzero coordinate positive.
  std::vector<IntVector> rational_points;
  /// Degree of the part of the gcd without rational roots (counts the
  /// irrational base points with multiplicity one each).
  int irrational_degree = 0;
  bool empty() const noexcept { return rational_points.empty() && irrational_degree == 0; }
};

BaseLocusK2 base_locus_k2(const PointConfig& s, int m);
BaseLocusK2 base_locus_k2(const FundamentalForm& ff);

struct WidthBasePoint {
  IntVector direction;
  Integer width;
  WitnessHypersurface witness;
};

/// Hyperplane-stack witness (v.x)^(m-lw-1) * prod_{i=min}^{max} (v.x - i)
/// for a width direction v. Throws HypothesisFailed when lw >= m.
WidthBasePoint width_base_point(const LatticePolytope& p, int m);

}  // namespace fundform
