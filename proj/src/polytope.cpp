#include "fundform/polytope.hpp"
#include "fundform/error.hpp"
#include "fundform/exact_linalg.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <tuple>

namespace fundform {

struct LatticePolytope::PointCache {
  std::once_flag once;
  std::vector<LatticePoint> points;
};

namespace {

Integer coordinate_sum(const LatticePoint& p) {
  Integer s = 0;
  for (const auto& x : p) s += x;
  return s;
}

/// Lexicographic order on rational points, used for hull construction.
bool rat_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Rational cross(const RatVector& o, const RatVector& a, const RatVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Strictly convex hull of planar points, counterclockwise from the
/// lexicographically smallest point.
std::vector<RatVector> hull2d(std::vector<RatVector> pts) {
  std::sort(pts.begin(), pts.end(), rat_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<RatVector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() == 2 && h[0] == h[1]) h.resize(1);
  return h;
}

/// Drops redundant points of a slice living in Q^d.
std::vector<RatVector> prune(std::vector<RatVector> pts, std::size_t d) {
  if (pts.empty()) return pts;
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(), rat_less);
    std::vector<RatVector> out{*lo};
    if (*hi != *lo) out.push_back(*hi);
    return out;
  }
  if (d == 2) return hull2d(std::move(pts));
  std::sort(pts.begin(), pts.end(), rat_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Section of conv(pts) by x_0 = c, with the first coordinate dropped.
std::vector<RatVector> coordinate_section(const std::vector<RatVector>& pts, const Integer& c) {
  std::vector<RatVector> out;
  const Rational level(c);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Rational si = pts[i][0] - level;
    if (si == 0) out.emplace_back(pts[i].begin() + 1, pts[i].end());
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Rational sj = pts[j][0] - level;
      if (si * sj >= 0) continue;
      const Rational t = si / (si - sj);
      RatVector q(pts[i].size() - 1);
      for (std::size_t l = 1; l < pts[i].size(); ++l)
        q[l - 1] = pts[i][l] + t * (pts[j][l] - pts[i][l]);
      out.push_back(std::move(q));
    }
  }
  return out;
}

void enumerate_rec(const std::vector<RatVector>& pts, std::size_t d, IntVector& prefix,
                   std::vector<IntVector>& out, std::size_t budget) {
  Rational lo = pts.front()[0], hi = lo;
  for (const auto& p : pts) {
    lo = std::min(lo, p[0]);
    hi = std::max(hi, p[0]);
  }
  for (Integer c = ceil_of(lo), end = floor_of(hi); c <= end; ++c) {
    prefix.push_back(c);
    if (d == 1) {
      if (out.size() >= budget) throw BudgetExceeded("lattice point enumeration budget exhausted");
      out.push_back(prefix);
    } else {
      auto sec = prune(coordinate_section(pts, c), d - 1);
      if (!sec.empty()) enumerate_rec(sec, d - 1, prefix, out, budget);
    }
    prefix.pop_back();
  }
}

RatVector mat_vec(const IntegerMatrix& m, const RatVector& x) {
  RatVector y(m.rows(), Rational(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) y[i] += Rational(m(i, j)) * x[j];
  return y;
}

/// Unimodular T making conv(pts) roughly round in the coordinates T x, so
/// that coordinate slicing scans few empty levels.
IntegerMatrix rounding_transform(const std::vector<RatVector>& pts, std::size_t d) {
  RatVector mean(d, Rational(0));
  for (const auto& p : pts)
    for (std::size_t i = 0; i < d; ++i) mean[i] += p[i];
  for (auto& x : mean) x /= Rational(static_cast<long>(pts.size()));
  RationalMatrix form = RationalMatrix::identity(d);
  for (const auto& p : pts)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) form(i, j) += (p[i] - mean[i]) * (p[j] - mean[j]);
  return lll_reduce(IntegerMatrix::identity(d), form);
}

bool better_direction(const Integer& w1, const IntVector& v1, const Integer& w2,
                      const IntVector& v2) {
  if (w1 != w2) return w1 < w2;
  Integer n1 = 0, n2 = 0;
  for (const auto& x : v1) n1 += abs_of(x);
  for (const auto& x : v2) n2 += abs_of(x);
  if (n1 != n2) return n1 < n2;
  return v2 < v1;
}

IntVector positive_leading(IntVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

template <class F>
void for_each_combination(std::size_t n, std::size_t r, F&& f) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Facets of a full-dimensional point set in Z^d, d >= 3, by testing the
/// hyperplane through every affinely independent d-subset.
std::vector<Facet> brute_force_facets(const std::vector<IntVector>& pts, std::size_t d) {
  std::set<std::pair<IntVector, Integer>> seen;
  std::vector<Facet> out;
  for_each_combination(pts.size(), d, [&](const std::vector<std::size_t>& idx) {
    RationalMatrix diffs(d - 1, d);
    for (std::size_t r = 1; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        diffs(r - 1, c) = Rational(pts[idx[r]][c] - pts[idx[0]][c]);
    auto kb = kernel_basis(diffs, Side::Right);
    if (kb.dimension() != 1) return;
    IntVector n = integer_normalize(kb.vectors[0]);
    Integer off = dot(n, pts[idx[0]]);
    bool le = true, ge = true;
    for (const auto& p : pts) {
      const Integer s = dot(n, p) - off;
      if (s > 0) le = false;
      if (s < 0) ge = false;
    }
    if (!le && !ge) return;
    if (!le) {
      for (auto& x : n) x = -x;
      off = -off;
    }
    if (seen.emplace(n, off).second) out.push_back({n, off});
  });
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  });
  return out;
}

std::vector<Facet> chart_facets(const std::vector<IntVector>& ys, std::size_t d) {
  std::vector<Facet> out;
  if (d == 0) return out;
  if (d == 1) {
    auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
    out.push_back({{Integer(-1)}, -(*lo)[0]});
    out.push_back({{Integer(1)}, (*hi)[0]});
    return out;
  }
  if (d >= 3) return brute_force_facets(ys, d);
  std::vector<RatVector> rs;
  for (const auto& y : ys) rs.push_back(to_rational(y));
  const auto h = hull2d(rs);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    IntVector n = primitive_part({numerator_of(b[1] - a[1]), numerator_of(a[0] - b[0])});
    out.push_back({n, numerator_of(Rational(n[0]) * a[0] + Rational(n[1]) * a[1])});
  }
  return out;
}

}  // namespace

bool point_before(const LatticePoint& a, const LatticePoint& b) {
  const Integer sa = coordinate_sum(a), sb = coordinate_sum(b);
  if (sa != sb) return sa < sb;
  return b < a;
}

void sort_points(std::vector<LatticePoint>& pts) {
  std::sort(pts.begin(), pts.end(), point_before);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

PointConfig PointConfig::make(std::size_t dim, std::vector<LatticePoint> points) {
  if (dim == 0) throw InvalidInput("point configuration of dimension zero");
  for (const auto& p : points)
    if (p.size() != dim) throw InvalidInput("point has wrong dimension");
  std::set<LatticePoint> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw InvalidInput("duplicate points");
  PointConfig cfg{dim, std::move(points), false};
  if (cfg.points.size() >= 2) {
    IntegerMatrix diffs(cfg.points.size() - 1, dim);
    for (std::size_t i = 1; i < cfg.points.size(); ++i)
      for (std::size_t j = 0; j < dim; ++j) diffs(i - 1, j) = cfg.points[i][j] - cfg.points[0][j];
    const auto sf = smith_normal_form(diffs);
    cfg.differences_generate =
        sf.divisors.size() == dim &&
        std::all_of(sf.divisors.begin(), sf.divisors.end(), [](const Integer& d) { return d == 1; });
  }
  return cfg;
}

RatVector AffineChart::to_chart(const RatVector& x) const {
  RatVector shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - origin[i];
  RatVector full = mat_vec(coordinate_map, shifted);
  full.resize(dimension());
  return full;
}

LatticePoint AffineChart::from_chart(const IntVector& y) const {
  LatticePoint x = origin;
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += y[r] * basis(r, j);
  return x;
}

AffineChart affine_chart(std::size_t dim, const std::vector<LatticePoint>& points) {
  if (points.empty()) throw InvalidInput("affine chart of an empty point set");
  AffineChart ch;
  ch.origin = points.front();
  IntegerMatrix diffs(0, dim);
  for (std::size_t i = 1; i < points.size(); ++i) {
    IntVector d(dim);
    for (std::size_t j = 0; j < dim; ++j) d[j] = points[i][j] - ch.origin[j];
    if (std::any_of(d.begin(), d.end(), [](const Integer& x) { return x != 0; }))
      diffs.append_row(d);
  }
  if (diffs.rows() == 0) {
    ch.basis = IntegerMatrix(0, dim);
    ch.coordinate_map = IntegerMatrix::identity(dim);
    return ch;
  }
  ch.basis = integral_kernel(integral_kernel(diffs));
  ch.coordinate_map = lattice_coordinate_map(ch.basis);
  return ch;
}

LatticePolytope::LatticePolytope(std::size_t dim, const std::vector<LatticePoint>& points)
    : dim_(dim), points_cache_(std::make_shared<PointCache>()) {
  if (dim == 0) throw InvalidInput("polytope of dimension zero");
  if (points.empty()) throw InvalidInput("polytope without points");
  for (const auto& p : points)
    if (p.size() != dim) throw InvalidInput("vertex has wrong dimension");
  std::vector<LatticePoint> pts = points;
  sort_points(pts);
  chart_ = affine_chart(dim, pts);
  const std::size_t d = chart_.dimension();

  std::vector<IntVector> ys;
  for (const auto& p : pts) {
    RatVector y = chart_.to_chart(to_rational(p));
    IntVector yi;
    for (const auto& c : y) yi.push_back(numerator_of(c));
    ys.push_back(std::move(yi));
  }

  std::vector<std::size_t> keep;
  if (d == 0) {
    keep.push_back(0);
  } else if (d == 1) {
    auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
    keep = {static_cast<std::size_t>(lo - ys.begin()), static_cast<std::size_t>(hi - ys.begin())};
  } else if (d == 2) {
    std::vector<RatVector> rs;
    for (const auto& y : ys) rs.push_back(to_rational(y));
    for (const auto& h : hull2d(rs))
      for (std::size_t j = 0; j < rs.size(); ++j)
        if (rs[j] == h) keep.push_back(j);
  } else {
    const auto all_facets = chart_facets(ys, d);
    for (std::size_t j = 0; j < ys.size(); ++j) {
      RowSpace normals(d);
      for (const auto& f : all_facets)
        if (dot(f.normal, ys[j]) == f.offset) normals.add(to_rational(f.normal));
      if (normals.rank() == d) keep.push_back(j);
    }
  }
  for (auto j : keep) vertices_.push_back(pts[j]);
  sort_points(vertices_);
  // rebuild the chart from the first vertex so that it depends only on P
  chart_ = affine_chart(dim, vertices_);
  std::vector<IntVector> vy;
  for (const auto& v : vertices_) {
    IntVector yi;
    for (const auto& c : chart_.to_chart(to_rational(v))) yi.push_back(numerator_of(c));
    vy.push_back(std::move(yi));
  }
  facets_ = chart_facets(vy, d);
}

bool LatticePolytope::contains(const RatVector& x) const {
  if (x.size() != dim_) throw InvalidInput("point has wrong dimension");
  const RatVector y = chart_.to_chart(x);
  RatVector back(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    back[j] = chart_.origin[j];
    for (std::size_t r = 0; r < y.size(); ++r) back[j] += y[r] * Rational(chart_.basis(r, j));
  }
  if (back != x) return false;
  if (affine_dimension() == 0) return true;
  for (const auto& f : facets_)
    if (dot(to_rational(f.normal), y) > Rational(f.offset)) return false;
  return true;
}

const std::vector<LatticePoint>& LatticePolytope::lattice_points(std::size_t budget) const {
  std::call_once(points_cache_->once, [&] {
    std::vector<RatVector> ys;
    for (const auto& v : vertices_) ys.push_back(chart_.to_chart(to_rational(v)));
    std::vector<LatticePoint> out;
    for (const auto& y : lattice_points_of_hull(affine_dimension(), ys, budget))
      out.push_back(chart_.from_chart(y));
    sort_points(out);
    points_cache_->points = std::move(out);
  });
  return points_cache_->points;
}

IntVector make_direction(const IntVector& v) {
  if (v.empty() || content(v) != 1) throw InvalidInput("direction must be a nonzero primitive vector");
  return v;
}

std::vector<LatticePoint> lattice_points_of_hull(std::size_t dim,
                                                 const std::vector<RatVector>& vertices,
                                                 std::size_t budget) {
  if (vertices.empty()) return {};
  if (dim == 0) return {IntVector{}};
  for (const auto& v : vertices)
    if (v.size() != dim) throw InvalidInput("vertex has wrong dimension");
  const IntegerMatrix t = dim >= 2 ? rounding_transform(vertices, dim) : IntegerMatrix::identity(1);
  const IntegerMatrix tinv = unimodular_inverse(t);
  std::vector<RatVector> ys;
  for (const auto& v : vertices) ys.push_back(mat_vec(t, v));
  ys = prune(std::move(ys), dim);
  std::vector<IntVector> raw;
  IntVector prefix;
  enumerate_rec(ys, dim, prefix, raw, budget);
  std::vector<LatticePoint> out;
  out.reserve(raw.size());
  for (const auto& y : raw) out.push_back(tinv * y);
  sort_points(out);
  return out;
}

PointConfig lattice_points(const LatticePolytope& p) {
  return PointConfig::make(p.dim(), p.lattice_points());
}

Integer width_in_direction(const LatticePolytope& p, const IntVector& v) {
  if (v.size() != p.dim()) throw InvalidInput("direction has wrong dimension");
  Integer lo = dot(p.vertices().front(), v), hi = lo;
  for (const auto& x : p.vertices()) {
    const Integer s = dot(x, v);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

LatticeWidth lattice_width(const LatticePolytope& p, std::size_t budget) {
  const std::size_t k = p.dim();
  if (p.affine_dimension() == 0) return {0, IntVector(k, 0), true};

  if (!p.is_full_dimensional()) {
    const auto& ch = p.chart();
    std::vector<LatticePoint> ys;
    for (const auto& v : p.vertices()) {
      IntVector yi;
      for (const auto& c : ch.to_chart(to_rational(v))) yi.push_back(numerator_of(c));
      ys.push_back(std::move(yi));
    }
    const LatticeWidth inner = lattice_width(LatticePolytope(ch.dimension(), ys), budget);
    // <v, x - origin> = <y*, chart(x)> for v = coordinate_map^T (y*, 0)
    IntVector padded = inner.direction;
    padded.resize(k, 0);
    return {inner.width, positive_leading(ch.coordinate_map.transpose() * padded), inner.certified};
  }

  if (k == 1) return {width_in_direction(p, {Integer(1)}), {Integer(1)}, true};

  LatticeWidth best{-1, {}, false};
  auto offer = [&](IntVector v) {
    if (content(v) != 1) return;
    v = positive_leading(std::move(v));
    const Integer w = width_in_direction(p, v);
    if (best.width < 0 || better_direction(w, v, best.width, best.direction)) {
      best.width = w;
      best.direction = std::move(v);
    }
  };
  for (const auto& f : p.facets()) offer(f.normal);
  for (std::size_t i = 0; i < k; ++i) {
    IntVector e(k, 0);
    e[i] = 1;
    offer(e);
  }

  // k independent vertex differences with a large determinant
  const auto& vs = p.vertices();
  std::vector<IntVector> diffs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      IntVector d(k);
      for (std::size_t l = 0; l < k; ++l) d[l] = vs[j][l] - vs[i][l];
      diffs.push_back(std::move(d));
    }
  std::vector<IntVector> chosen;
  for (std::size_t step = 0; step < k; ++step) {
    Rational best_gram = 0;
    std::size_t best_idx = diffs.size();
    for (std::size_t c = 0; c < diffs.size(); ++c) {
      std::vector<IntVector> trial = chosen;
      trial.push_back(diffs[c]);
      RationalMatrix gram(trial.size(), trial.size());
      for (std::size_t a = 0; a < trial.size(); ++a)
        for (std::size_t b = 0; b < trial.size(); ++b) gram(a, b) = Rational(dot(trial[a], trial[b]));
      const Rational g = determinant(gram);
      if (g > best_gram) {
        best_gram = g;
        best_idx = c;
      }
    }
    chosen.push_back(diffs.at(best_idx));
  }
  const IntegerMatrix e = IntegerMatrix::from_rows(chosen);
  const Integer det_e = abs_of(determinant(e));
  const Integer w0 = best.width;

  Integer estimate = 1;
  for (std::size_t i = 0; i < k; ++i) estimate *= 2 * w0 + 1;
  estimate /= det_e;
  if (estimate > Integer(budget)) return best;

  const RationalMatrix einv = inverse(to_rational(e));
  std::vector<RatVector> box;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    RatVector rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = (mask >> i & 1u) ? Rational(w0) : Rational(-w0);
    box.push_back(einv * rhs);
  }
  std::vector<LatticePoint> candidates;
  try {
    candidates = lattice_points_of_hull(k, box, 8 * budget + 64);
  } catch (const BudgetExceeded&) {
    return best;
  }
  for (auto& v : candidates) {
    bool zero = std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
    if (zero || positive_leading(v) != v) continue;
    offer(std::move(v));
  }
  best.certified = true;
  return best;
}

LatticePolytope unimodular_image(const LatticePolytope& p, const IntegerMatrix& u,
                                 const LatticePoint& t) {
  if (u.rows() != p.dim() || u.cols() != p.dim() || t.size() != p.dim())
    throw InvalidInput("transform has wrong dimension");
  const Integer d = determinant(u);
  if (d != 1 && d != -1) throw InvalidInput("transform is not unimodular");
  std::vector<LatticePoint> img;
  for (const auto& v : p.vertices()) {
    LatticePoint x = u * v;
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += t[i];
    img.push_back(std::move(x));
  }
  return LatticePolytope(p.dim(), img);
}

LatticePolytope dilate(const LatticePolytope& p, const Integer& r) {
  if (r < 1) throw InvalidInput("dilation factor must be positive");
  std::vector<LatticePoint> img;
  for (const auto& v : p.vertices()) {
    LatticePoint x = v;
    for (auto& c : x) c *= r;
    img.push_back(std::move(x));
  }
  return LatticePolytope(p.dim(), img);
}

std::vector<RatVector> slice_vertices(const std::vector<LatticePoint>& vertices,
                                      const IntVector& v, const Integer& level) {
  std::vector<RatVector> out;
  std::vector<Integer> s;
  for (const auto& p : vertices) s.push_back(dot(p, v) - level);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (s[i] == 0) out.push_back(to_rational(vertices[i]));
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (s[i] * s[j] >= 0) continue;
      const Rational t(s[i], s[i] - s[j]);
      RatVector q(v.size());
      for (std::size_t l = 0; l < v.size(); ++l)
        q[l] = Rational(vertices[i][l]) + t * Rational(vertices[j][l] - vertices[i][l]);
      out.push_back(std::move(q));
    }
  }
  return out;
}

PointConfig slice_points(const LatticePolytope& p, const IntVector& v, const Integer& level,
                         std::size_t budget) {
  const std::size_t k = p.dim();
  if (v.size() != k) throw InvalidInput("direction has wrong dimension");
  make_direction(v);
  const auto sv = slice_vertices(p.vertices(), v, level);
  if (sv.empty()) return PointConfig::make(k, {});
  const IntegerMatrix w = complete_to_unimodular(v);
  const IntegerMatrix winv = unimodular_inverse(w);
  std::vector<RatVector> zs;
  for (const auto& x : sv) {
    RatVector y = mat_vec(w, x);
    zs.emplace_back(y.begin() + 1, y.end());
  }
  std::vector<LatticePoint> out;
  for (const auto& z : lattice_points_of_hull(k - 1, zs, budget)) {
    IntVector y{level};
    y.insert(y.end(), z.begin(), z.end());
    out.push_back(winv * y);
  }
  sort_points(out);
  return PointConfig::make(k, std::move(out));
}

}  // namespace fundform
