#pragma once

#include "fundform/arith.hpp"
#include "fundform/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fundform {

struct RrefResult {
  RationalMatrix reduced;            ///< reduced row echelon form, same shape
  std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Gauss-Jordan elimination over Q, pivoting on the first nonzero entry.
/// Deterministic: the result depends only on the input matrix.
RrefResult rref(const RationalMatrix& m);

/// Rank over Q. Throws InvalidInput on a matrix with a zero dimension.
std::size_t rank(const RationalMatrix& m);

enum class Side { Left, Right };

/// Basis of a left or right kernel, canonicalised as the nonzero rows of a
/// reduced row echelon form (each vector starts with a 1 in its pivot).
struct KernelBasis {
  Side side = Side::Right;
  std::vector<RatVector> vectors;
  std::size_t dimension() const noexcept { return vectors.size(); }
};

KernelBasis kernel_basis(const RationalMatrix& m, Side side);

/// Nonzero rows of rref(m) as vectors; a canonical basis of the row span.
std::vector<RatVector> canonical_row_basis(const RationalMatrix& m);

/// Particular solution of A x = b with every free variable set to zero, or
/// nullopt when the system is inconsistent.
std::optional<RatVector> solve(const RationalMatrix& a, const RatVector& b);

Rational determinant(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);

/// Inverse over Q; throws InvalidInput when singular or not square.
RationalMatrix inverse(const RationalMatrix& m);

/// Inverse of a unimodular integer matrix; throws when det != +-1.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

/// Incrementally built row space over Q. Rows are kept fully reduced so that
/// membership and rank queries are exact.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dimension) : dim_(dimension) {}

  /// Adds v; returns true when it was independent of the current span.
  bool add(const RatVector& v);
  bool contains(const RatVector& v) const;
  std::size_t rank() const noexcept { return basis_.size(); }
  std::size_t dimension() const noexcept { return dim_; }

 private:
  RatVector reduce(RatVector v) const;

  std::size_t dim_;
  std::vector<RatVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Row-style Hermite normal form: U * M = H with U unimodular. Nonzero rows
/// of H come first, pivots are positive and entries above a pivot lie in
/// [0, pivot).
struct HermiteForm {
  IntegerMatrix h;
  IntegerMatrix u;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntegerMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ... , all
/// diagonal entries nonnegative.
struct SmithForm {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
  /// Nonzero diagonal entries of D in order.
  std::vector<Integer> divisors;
};
SmithForm smith_normal_form(const IntegerMatrix& m);

/// True iff the row lattice of L is saturated (all elementary divisors 1).
/// Throws InvalidInput("dependent generators") when L is rank deficient.
bool is_saturated(const IntegerMatrix& l);

/// Index of the row lattice of M inside its saturation: the product of the
/// nonzero elementary divisors.
Integer lattice_index(const IntegerMatrix& m);

/// Rows form a Z-basis of {x in Z^cols : M x = 0}, canonicalised by Hermite
/// reduction. A matrix with no rows has the identity as kernel.
IntegerMatrix integral_kernel(const IntegerMatrix& m);

/// For a saturated basis B (rows, d x k), a unimodular U with U * B^T equal
/// to the first d columns of the identity. The first d entries of U * x are
/// then the coordinates of x in B for any x in the row lattice.
IntegerMatrix lattice_coordinate_map(const IntegerMatrix& basis);

/// Unimodular matrix whose first row is the given primitive vector.
IntegerMatrix complete_to_unimodular(const IntVector& primitive);

/// LLL reduction (delta = 3/4) of the rows of `basis` with respect to the
/// positive definite form x^T Q y.
IntegerMatrix lll_reduce(const IntegerMatrix& basis, const RationalMatrix& form);

}  // namespace fundform
