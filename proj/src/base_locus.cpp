#include "fundform/base_locus.hpp"
#include "fundform/error.hpp"
#include "fundform/exact_linalg.hpp"

#include <algorithm>

namespace fundform {

Polynomial WitnessHypersurface::polynomial() const {
  return Polynomial::linear(direction, 0).pow(static_cast<unsigned>(m)) + lower_terms;
}

bool WitnessHypersurface::vanishes_on(const PointConfig& s) const {
  const Polynomial f = polynomial();
  return std::all_of(s.points.begin(), s.points.end(),
                     [&](const LatticePoint& p) { return f.evaluate(p) == 0; });
}

namespace {

void check_direction(const PointConfig& s, int m, const IntVector& v) {
  if (m < 2) throw InvalidInput("base point test needs m >= 2");
  if (v.size() != s.dim) throw InvalidInput("direction has wrong dimension");
  if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }))
    throw InvalidInput("direction must be nonzero");
}

}  // namespace

BasePointResult is_base_point(const PointConfig& s, int m, const IntVector& v) {
  check_direction(s, m, v);
  const auto unknowns = monomials_up_to_degree(s.dim, m - 1);
  RationalMatrix a(s.points.size(), unknowns.size());
  RatVector b(s.points.size());
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      Integer t = 1;
      for (std::size_t j = 0; j < s.dim; ++j)
        for (int e = 0; e < unknowns[c][j]; ++e) t *= p[j];
      a(i, c) = Rational(t);
    }
    Integer vp = dot(v, p), pw = 1;
    for (int e = 0; e < m; ++e) pw *= vp;
    b[i] = Rational(-pw);
  }
  auto sol = solve(a, b);
  if (!sol) return {false, std::nullopt};
  WitnessHypersurface w{s.dim, m, v, from_coefficients(s.dim, unknowns, *sol)};
  return {true, std::move(w)};
}

bool is_base_point_via_form(const FundamentalForm& ff, const IntVector& v) {
  return ff.vanishes_at(to_rational(v));
}

bool is_base_point_via_form(const PointConfig& s, int m, const IntVector& v) {
  check_direction(s, m, v);
  return is_base_point_via_form(fundamental_form(s, m), v);
}

BaseLocusK2 base_locus_k2(const FundamentalForm& ff) {
  if (ff.k != 2) throw InvalidInput("base_locus_k2 needs k = 2");
  if (ff.dimension() == 0) throw HypothesisFailed("form empty: every point is a base point");
  const int m = ff.m;
  UniPoly g;
  int w2_power = m;
  for (const auto& row : ff.basis) {
    // monomial w1^(m-j) w2^j sits at index j; dehomogenize with w2 = 1
    UniPoly f(static_cast<std::size_t>(m) + 1, Rational(0));
    for (std::size_t j = 0; j < ff.monomials.size(); ++j) f[static_cast<std::size_t>(ff.monomials[j][0])] = row[j];
    trim(f);
    w2_power = std::min(w2_power, m - degree(f));
    g = poly_gcd(g, f);
  }
  BaseLocusK2 out;
  if (w2_power > 0) out.rational_points.push_back({Integer(1), Integer(0)});
  if (degree(g) >= 1) {
    UniPoly sf = divide(g, poly_gcd(g, derivative(g))).first;
    const auto roots = rational_roots(sf);
    for (const auto& r : roots) {
      Integer p = numerator_of(r), q = denominator_of(r);
      if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
      }
      out.rational_points.push_back({p, q});
    }
    out.irrational_degree = degree(sf) - static_cast<int>(roots.size());
  }
  std::sort(out.rational_points.begin(), out.rational_points.end());
  return out;
}

BaseLocusK2 base_locus_k2(const PointConfig& s, int m) {
  if (s.dim != 2) throw InvalidInput("base_locus_k2 needs k = 2");
  if (m < 2) throw InvalidInput("base_locus_k2 needs m >= 2");
  return base_locus_k2(fundamental_form(s, m));
}

WidthBasePoint width_base_point(const LatticePolytope& p, int m) {
  const auto lw = lattice_width(p);
  if (lw.width >= m) throw HypothesisFailed("lattice width is not below m");
  const IntVector& v = lw.direction;
  Integer lo = dot(p.vertices().front(), v);
  for (const auto& x : p.vertices()) lo = std::min(lo, dot(x, v));
  const Polynomial lin = Polynomial::linear(v, 0);
  const std::size_t k = p.dim();
  Polynomial full = lin.pow(static_cast<unsigned>(m - 1 - static_cast<int>(lw.width)));
  for (Integer i = lo; i <= lo + lw.width; ++i) full = full * (lin - Polynomial::constant(k, Rational(i)));
  WitnessHypersurface w{k, m, v, full - lin.pow(static_cast<unsigned>(m))};
  return {v, lw.width, std::move(w)};
}

}  // namespace fundform
