#pragma once

#include "fundform/exact_linalg.hpp"
#include "fundform/polytope.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace fundform::testing {

/// Deterministic generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  IntVector vec(std::size_t k, long lo, long hi) {
    IntVector v(k);
    for (auto& x : v) x = uniform(lo, hi);
    return v;
  }

  IntVector primitive(std::size_t k, long r) {
    while (true) {
      IntVector v = vec(k, -r, r);
      if (content(v) == 1) return v;
    }
  }

  /// n distinct points in [lo, hi]^k.
  std::vector<LatticePoint> distinct_points(std::size_t k, std::size_t n, long lo, long hi) {
    std::set<LatticePoint> seen;
    std::vector<LatticePoint> out;
    while (out.size() < n) {
      LatticePoint p = vec(k, lo, hi);
      if (seen.insert(p).second) out.push_back(p);
    }
    return out;
  }

  /// Product of a few elementary moves, kept small.
  IntegerMatrix unimodular(std::size_t k, int moves = 4) {
    IntegerMatrix u = IntegerMatrix::identity(k);
    for (int s = 0; s < moves; ++s) {
      const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(k) - 1));
      auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(k) - 1));
      if (i == j) {
        u.negate_row(i);
        continue;
      }
      u.add_row_multiple(i, j, Integer(uniform(-2, 2)));
      if (coin()) u.swap_rows(i, j);
    }
    return u;
  }

  IntegerMatrix int_matrix(std::size_t r, std::size_t c, long lo, long hi) {
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(lo, hi);
    return m;
  }

  /// Random full-dimensional polytope with vertices in [lo, hi]^k.
  LatticePolytope full_polytope(std::size_t k, std::size_t n, long lo, long hi) {
    while (true) {
      const auto pts = distinct_points(k, n, lo, hi);
      LatticePolytope p(k, pts);
      if (p.is_full_dimensional()) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline LatticePoint pt(long x, long y) { return {Integer(x), Integer(y)}; }
inline LatticePoint pt(long x, long y, long z) { return {Integer(x), Integer(y), Integer(z)}; }

inline LatticePoint apply(const IntegerMatrix& u, const LatticePoint& x, const LatticePoint& t) {
  LatticePoint y = u * x;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += t[i];
  return y;
}

/// The eleven lattice points of conv{(0,0),(1,3),(3,1),(4,4)}.
inline std::vector<LatticePoint> eleven_point_quadrilateral() {
  return {pt(0, 0), pt(1, 1), pt(1, 2), pt(1, 3), pt(2, 1), pt(2, 2),
          pt(2, 3), pt(3, 1), pt(3, 2), pt(3, 3), pt(4, 4)};
}

struct AffineMap {
  IntegerMatrix u;
  LatticePoint t;
};

/// Every unimodular affine map carrying simplex p onto simplex q, found by
/// trying each vertex bijection.
inline std::vector<AffineMap> simplex_equivalences(const LatticePolytope& p, const LatticePolytope& q) {
  const std::size_t k = p.dim();
  const auto& pv = p.vertices();
  std::vector<AffineMap> out;
  if (pv.size() != k + 1 || q.vertices().size() != k + 1) return out;
  std::vector<LatticePoint> qv = q.vertices();
  std::sort(qv.begin(), qv.end());
  RationalMatrix a(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a(j, i) = Rational(pv[i + 1][j] - pv[0][j]);
  const RationalMatrix a_inv = inverse(a);
  do {
    RationalMatrix b(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) b(j, i) = Rational(qv[i + 1][j] - qv[0][j]);
    const RationalMatrix u = b * a_inv;
    bool integral = true;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) integral = integral && is_integral(u(i, j));
    if (!integral) continue;
    const IntegerMatrix ui = to_integer(u);
    if (abs_of(determinant(ui)) != 1) continue;
    LatticePoint t = ui * pv[0];
    for (std::size_t j = 0; j < k; ++j) t[j] = qv[0][j] - t[j];
    out.push_back({ui, t});
  } while (std::next_permutation(qv.begin(), qv.end()));
  return out;
}

inline std::optional<AffineMap> simplex_equivalence(const LatticePolytope& p, const LatticePolytope& q) {
  auto all = simplex_equivalences(p, q);
  if (all.empty()) return std::nullopt;
  return all.front();
}

inline LatticePolytope delta_prime() {
  return LatticePolytope(3, {pt(0, 0, 0), pt(572, 286, 143), pt(390, 195, -585), pt(495, -330, -165)});
}

}  // namespace fundform::testing
