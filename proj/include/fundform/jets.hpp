#pragma once

#include "fundform/exact_linalg.hpp"
#include "fundform/polynomial.hpp"
#include "fundform/polytope.hpp"

#include <cstddef>
#include <vector>

namespace fundform {

/// Matrices of m-jets of the monomial map at the identity. Row alpha,
/// column i holds P_alpha(p_i) = prod_j p_ij (p_ij - 1) ... (p_ij - alpha_j + 1)
/// in J, and p_i^alpha in Lt. Rows follow the enumeration order, so the
/// jets of order r form a prefix of both matrices.
struct JetSystem {
  PointConfig config;
  int order = 0;
  std::vector<Exponent> row_exponents;
  RationalMatrix j;
  RationalMatrix lt;
  std::vector<std::size_t> j_ranks;   ///< rank(J_r) for r = 0..order
  std::vector<std::size_t> lt_ranks;  ///< rank(Lt(J_r)) for r = 0..order

  /// Number of rows of J_r.
  std::size_t rows_for_order(int r) const;
  RationalMatrix j_block(int r) const { return j.row_block(0, rows_for_order(r)); }
  RationalMatrix lt_block(int r) const { return lt.row_block(0, rows_for_order(r)); }
};

/// Falling-factorial monomial P_alpha evaluated at an integer point.
Integer falling_monomial(const Exponent& alpha, const LatticePoint& p);

JetSystem build_jets(const PointConfig& s, int m);

/// dim H^0(pi^*H - mE) = (n + 1) - rank(J_{m-1}).
std::size_t h0(const PointConfig& s, int m);

/// max(0, n + 1 - C(m - 1 + k, k)).
Integer expected_h0(std::size_t n, std::size_t k, int m);

bool is_special(const PointConfig& s, int m);

/// Least d >= 1 such that a nonzero polynomial of degree <= d vanishes on S.
int min_vanishing_degree(const PointConfig& s);

/// Canonical basis of the degree-m fundamental form: coefficient vectors over
/// graded_monomials(k, m), in reduced row echelon form.
struct FundamentalForm {
  std::size_t k = 0;
  int m = 0;
  std::vector<Exponent> monomials;
  std::vector<RatVector> basis;

  std::size_t dimension() const noexcept { return basis.size(); }
  std::vector<Polynomial> forms() const;
  /// True iff every basis form vanishes at w.
  bool vanishes_at(const RatVector& w) const;
};

FundamentalForm fundamental_form(const PointConfig& s, int m);

}  // namespace fundform
