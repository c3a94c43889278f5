#pragma once

#include "fundform/matrix.hpp"
#include "fundform/polytope.hpp"
#include "fundform/screen.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fundform {

/// Weights (a1, ..., a4) of a weighted projective space.
struct WeightVector {
  IntVector weights;
  /// No weight lies in the numerical semigroup generated by the others.
  bool well_formed = false;

  /// Requires four positive weights with gcd 1.
  static WeightVector make(const IntVector& weights);
};

/// x^plus - x^minus with plus - minus = u and w . plus = w . minus = degree.
struct BinomialGenerator {
  IntVector u;
  IntVector plus;
  IntVector minus;
  Integer degree;

  std::string to_string() const;
};

Integer weight_lcm(const WeightVector& w);

/// Simplex with vertices (lcm / a_i) e_i in the hyperplane u . w = lcm.
LatticePolytope rr_polytope(const WeightVector& w);

/// Exponent vectors of w-degree d, lexicographically descending.
std::vector<IntVector> weighted_monomials(const WeightVector& w, const Integer& d);

/// Binomials of w-degree d from monomial pairs with disjoint support and a
/// primitive difference, ordered by (plus, minus) in descending lex order.
std::vector<BinomialGenerator> binomial_candidates(const WeightVector& w, const Integer& d);

/// The first `count` linearly independent candidates by ascending degree.
/// Throws StageError when none are found up to degree_budget (0 means the
/// largest pairwise lcm of the weights, where independent binomials always exist).
std::vector<BinomialGenerator> lowest_degree_binomials(const WeightVector& w, std::size_t count = 2,
                                                       const Integer& degree_budget = 0);

/// v_tilde such that {w, v_tilde} is a Z-basis of {x : u1 . x = u2 . x = 0},
/// reduced modulo w to first entry in [0, a1) and chosen lex-smallest among +-.
IntVector width_direction(const WeightVector& w, const IntVector& u1, const IntVector& u2);

struct Projection {
  LatticePolytope polytope;
  IntVector direction;
  IntegerMatrix basis;  ///< rows: Z-basis of w^perp
  LatticePoint origin;
};

/// Translates rr by its first vertex and writes it in a basis of w^perp;
/// v_tilde becomes basis * v_tilde.
Projection project_to_3d(const LatticePolytope& rr, const WeightVector& w, const IntVector& v_tilde);
Projection project_to_3d(const LatticePolytope& rr, const WeightVector& w, const IntVector& v_tilde,
                         const IntegerMatrix& basis);

struct FiberExtension {
  Integer degree_bound;
  std::vector<BinomialGenerator> added;
};

/// Scans degrees 1..degree_bound for monomial fibers of the one-parameter
/// subgroup lattice {u : u.w = u.v_tilde = 0} that are disconnected under the
/// moves +-u of the chosen binomials, adding the first bridging candidate of
/// each such degree. At most max_added binomials are added.
FiberExtension extend_by_fibers(const WeightVector& w, std::vector<BinomialGenerator>& chosen,
                                const IntVector& v_tilde, const Integer& degree_bound,
                                std::size_t max_added = 3);

enum class Verdict { NefNotSemiample, Inconclusive };
std::string to_string(Verdict v);

struct ScreenOptions {
  bool certify_width = true;
  std::size_t width_budget = 2'000'000;
  Integer degree_budget = 0;
  std::size_t max_extra_binomials = 3;
};

struct ScreenReport {
  WeightVector weights;
  Integer lcm;
  std::vector<BinomialGenerator> binomials;
  std::vector<BinomialGenerator> alternatives;  ///< unchosen candidates of the chosen degrees
  std::string extension_reason;                 ///< why extra binomials were added, if any
  IntVector v_tilde;
  std::vector<Integer> vertex_values;
  Integer m;
  std::optional<Integer> certified_width;  ///< set when lattice_width certified its result
  std::vector<LatticePoint> projected_vertices;
  IntVector direction;
  int orientation = 1;  ///< +1 for v, -1 when the corollary passed only for -v
  CorollaryReport corollary;
  NefReport nef;
  Verdict verdict = Verdict::Inconclusive;
};

/// Full pipeline; stage failures surface as StageError.
ScreenReport screen(const WeightVector& w, const ScreenOptions& options = {});

struct TableRow {
  IntVector weights;
  Integer m;
};

std::vector<TableRow> load_table(const std::string& path);

struct TableResult {
  TableRow row;
  std::optional<ScreenReport> report;
  std::string error;
  bool m_match = false;
  bool pass = false;
};

/// Screens every row on `threads` workers; results keep the row order.
std::vector<TableResult> reproduce_table(const std::vector<TableRow>& rows, const ScreenOptions& options = {},
                                         unsigned threads = 1);

}  // namespace fundform
