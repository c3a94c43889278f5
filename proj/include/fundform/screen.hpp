#pragma once

#include "fundform/matrix.hpp"
#include "fundform/polynomial.hpp"
#include "fundform/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fundform {

/// Degree-lw witness Q * prod_{i=1}^{lw-2} (h - i), kept factored because lw
/// can be in the thousands. h = <v, x> - (min + 1) vanishes on the slice
/// through the points next to p_min; f, g are affine with f = g = 0 there,
/// f(p_min) = 0, g(p_max) = 0 and f + g = h. Q = h^2 - f(p_max) f - g(p_min) g.
struct ParaboloidWitness {
  Polynomial h;
  Polynomial f;
  Polynomial g;
  Polynomial paraboloid;
  Integer hyperplane_count;

  /// Evaluates the full witness at a lattice point.
  Rational evaluate(const LatticePoint& x) const;
  std::string to_string() const;
};

struct CorollaryReport {
  IntVector direction;
  Integer min_value;
  Integer max_value;
  Integer lw;
  LatticePoint p_min;
  LatticePoint p_max;
  PointConfig slice;
  std::size_t slice_dimension = 0;  ///< affine dimension of the slice points
  bool slice_empty = false;
  bool cond1 = false;
  bool cond2 = false;
  bool cond3 = false;
  std::optional<ParaboloidWitness> witness;
  bool verified = false;

  bool passed() const noexcept { return cond1 && cond2 && cond3 && verified; }
};

/// Checks the three hypotheses of the non-semiampleness criterion for a
/// full-dimensional polytope and a width direction v, and builds and
/// verifies the witness when they hold.
CorollaryReport corollary_check(const LatticePolytope& p, const IntVector& v);

/// Evaluates the witness on every lattice point of p (small polytopes only).
bool verify_witness_by_enumeration(const LatticePolytope& p, const ParaboloidWitness& w,
                                   std::size_t budget = 10'000);

Integer pseudonef_bound(const LatticePolytope& p);

struct NefReport {
  std::vector<Integer> degrees;
  Rational bound;
  bool degrees_ok = false;
  bool saturation_ok = false;
  bool nef = false;
};

/// nef iff every degree is below d / lw and the rows of l span a saturated
/// lattice. Rows of l may be dependent; only the lattice they span matters.
NefReport nef_check(const std::vector<Integer>& degrees, const Integer& d, const Integer& lw,
                    const IntegerMatrix& l);

}  // namespace fundform
