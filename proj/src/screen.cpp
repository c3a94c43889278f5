#include "fundform/screen.hpp"
#include "fundform/error.hpp"
#include "fundform/exact_linalg.hpp"

#include <algorithm>

namespace fundform {

Rational ParaboloidWitness::evaluate(const LatticePoint& x) const {
  Rational value = paraboloid.evaluate(x);
  const Rational hx = h.evaluate(x);
  for (Integer i = 1; i <= hyperplane_count && value != 0; ++i) value *= hx - Rational(i);
  return value;
}

std::string ParaboloidWitness::to_string() const {
  std::string s = "(" + paraboloid.to_string("x", true) + ")";
  if (hyperplane_count > 0)
    s += " * prod_{i=1}^{" + fundform::to_string(hyperplane_count) + "} (" + h.to_string("x") + " - i)";
  return s;
}

namespace {

std::size_t affine_dimension_of(const std::vector<LatticePoint>& pts) {
  if (pts.size() <= 1) return 0;
  const std::size_t k = pts.front().size();
  RationalMatrix diffs(pts.size() - 1, k);
  for (std::size_t i = 1; i < pts.size(); ++i)
    for (std::size_t j = 0; j < k; ++j) diffs(i - 1, j) = Rational(pts[i][j] - pts[0][j]);
  return rank(diffs);
}

}  // namespace

CorollaryReport corollary_check(const LatticePolytope& p, const IntVector& v) {
  if (!p.is_full_dimensional()) throw InvalidInput("corollary_check needs a full-dimensional polytope");
  const std::size_t k = p.dim();
  if (v.size() != k) throw InvalidInput("direction has wrong dimension");
  make_direction(v);

  CorollaryReport r;
  r.direction = v;
  const auto& verts = p.vertices();
  std::vector<Integer> vals;
  for (const auto& x : verts) vals.push_back(dot(x, v));
  r.min_value = *std::min_element(vals.begin(), vals.end());
  r.max_value = *std::max_element(vals.begin(), vals.end());
  r.lw = r.max_value - r.min_value;
  const auto n_min = std::count(vals.begin(), vals.end(), r.min_value);
  const auto n_max = std::count(vals.begin(), vals.end(), r.max_value);
  r.p_min = verts[static_cast<std::size_t>(std::find(vals.begin(), vals.end(), r.min_value) - vals.begin())];
  r.p_max = verts[static_cast<std::size_t>(std::find(vals.begin(), vals.end(), r.max_value) - vals.begin())];
  r.cond1 = n_min == 1 && n_max == 1;

  r.slice = slice_points(p, v, r.min_value + 1);
  const auto& sl = r.slice.points;
  r.slice_empty = sl.empty();
  if (r.slice_empty) {
    r.cond2 = r.cond3 = true;
  } else {
    r.slice_dimension = affine_dimension_of(sl);
    r.cond2 = r.slice_dimension + 2 <= k;
    // p_min + s (p_max - p_min) = q0 + sum_j t_j (q_j - q0) has no solution
    RationalMatrix a(k, sl.size());
    RationalMatrix ab(k, sl.size() + 1);
    for (std::size_t i = 0; i < k; ++i) {
      a(i, 0) = ab(i, 0) = Rational(r.p_max[i] - r.p_min[i]);
      for (std::size_t j = 1; j < sl.size(); ++j) a(i, j) = ab(i, j) = Rational(sl[0][i] - sl[j][i]);
      ab(i, sl.size()) = Rational(sl[0][i] - r.p_min[i]);
    }
    r.cond3 = rank(a) != rank(ab);
  }
  if (!(r.cond1 && r.cond2 && r.cond3)) return r;

  // f = a . x + a0 with f = 0 on the slice and at p_min, f(p_max) = lw - 1
  std::vector<LatticePoint> zeros = sl;
  zeros.push_back(r.p_min);
  RationalMatrix sys(zeros.size() + 1, k + 1);
  RatVector rhs(zeros.size() + 1, Rational(0));
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (std::size_t j = 0; j < k; ++j) sys(i, j) = Rational(zeros[i][j]);
    sys(i, k) = 1;
  }
  for (std::size_t j = 0; j < k; ++j) sys(zeros.size(), j) = Rational(r.p_max[j]);
  sys(zeros.size(), k) = 1;
  rhs[zeros.size()] = Rational(r.lw - 1);
  const auto sol = solve(sys, rhs);
  if (!sol) throw std::logic_error("linear form for the witness does not exist");

  ParaboloidWitness w;
  w.h = Polynomial::linear(v, -(r.min_value + 1));
  w.f = Polynomial::linear(RatVector(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(k)), (*sol)[k]);
  w.g = w.h - w.f;
  const Rational f_max = w.f.evaluate(r.p_max);
  const Rational g_min = w.g.evaluate(r.p_min);
  w.paraboloid = w.h * w.h - w.f * f_max - w.g * g_min;
  w.hyperplane_count = r.lw - 2;

  // levels min + 2 .. max - 1 are covered by the hyperplane factors; the
  // remaining levels are checked point by point
  bool ok = w.evaluate(r.p_min) == 0 && w.evaluate(r.p_max) == 0;
  for (const auto& q : sl) ok = ok && w.paraboloid.evaluate(q) == 0;
  for (const Integer& level : {r.min_value, r.max_value}) {
    const auto pts = slice_points(p, v, level);
    for (const auto& q : pts.points) ok = ok && w.paraboloid.evaluate(q) == 0;
  }
  r.verified = ok;
  r.witness = std::move(w);
  return r;
}

bool verify_witness_by_enumeration(const LatticePolytope& p, const ParaboloidWitness& w,
                                   std::size_t budget) {
  const auto& pts = p.lattice_points(budget);
  return std::all_of(pts.begin(), pts.end(), [&](const LatticePoint& x) { return w.evaluate(x) == 0; });
}

Integer pseudonef_bound(const LatticePolytope& p) { return lattice_width(p).width; }

NefReport nef_check(const std::vector<Integer>& degrees, const Integer& d, const Integer& lw,
                    const IntegerMatrix& l) {
  if (lw < 1) throw InvalidInput("nef_check needs lw >= 1");
  NefReport r;
  r.degrees = degrees;
  r.bound = Rational(d, lw);
  r.degrees_ok = std::all_of(degrees.begin(), degrees.end(),
                             [&](const Integer& g) { return Rational(g) < r.bound; });
  if (l.empty()) {
    r.saturation_ok = false;
  } else {
    const auto sf = smith_normal_form(l);
    r.saturation_ok = !sf.divisors.empty() &&
                      std::all_of(sf.divisors.begin(), sf.divisors.end(), [](const Integer& x) { return x == 1; });
  }
  r.nef = r.degrees_ok && r.saturation_ok;
  return r;
}

}  // namespace fundform
