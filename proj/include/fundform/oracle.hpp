#pragma once

// Brute-force reference implementations. They share only the number types
// with the main library and are meant for small inputs.

#include "fundform/arith.hpp"
#include "fundform/matrix.hpp"

#include <vector>

namespace fundform::oracle {

/// Fraction-free Bareiss elimination.
std::size_t bareiss_rank(const IntegerMatrix& m);
/// Rank of a rational matrix after clearing denominators row by row.
std::size_t bareiss_rank(const RationalMatrix& m);
Integer bareiss_determinant(const IntegerMatrix& m);

struct ScanWidth {
  Integer width;
  IntVector direction;  ///< first direction reaching the minimum in scan order
};

/// Minimum width over all primitive directions in [-radius, radius]^k.
ScanWidth scan_width(const std::vector<IntVector>& vertices, int radius);

/// Membership in conv(vertices) for a full-dimensional point set, decided by
/// testing every simplex spanned by k + 1 vertices (Caratheodory).
bool in_hull(const std::vector<IntVector>& vertices, const IntVector& x);

/// Lattice points of the bounding box that lie in the hull, in box order.
/// Requires full-dimensional vertices.
std::vector<IntVector> box_scan_points(const std::vector<IntVector>& vertices);

/// gcd of all r x r minors, r = rank; this is the index of the row lattice
/// in its saturation.
Integer minor_gcd(const IntegerMatrix& m);
bool saturated_by_minors(const IntegerMatrix& m);

/// Rows of k lie in the right kernel of m, have the expected count
/// cols - rank(m) and span a saturated lattice.
bool is_integral_kernel_of(const IntegerMatrix& m, const IntegerMatrix& k);

/// Least degree d such that the evaluation matrix of all monomials of degree
/// <= d on the points has a nontrivial left kernel.
int vanishing_degree_by_rank(const std::vector<IntVector>& points);

}  // namespace fundform::oracle
