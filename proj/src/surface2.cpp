#include "fundform/surface2.hpp"
#include "fundform/base_locus.hpp"
#include "fundform/error.hpp"
#include "fundform/exact_linalg.hpp"
#include "fundform/jets.hpp"

#include <algorithm>
#include <stdexcept>

namespace fundform {

std::string to_string(PolygonType t) {
  switch (t) {
    case PolygonType::I: return "I";
    case PolygonType::II: return "II";
    case PolygonType::III: return "III";
    case PolygonType::IV: return "IV";
    case PolygonType::NotSpecial: return "NotSpecial";
  }
  return "?";
}

std::vector<LatticePoint> normal_form_vertices(PolygonType t, int a, int b) {
  auto pt = [](int x, int y) { return LatticePoint{Integer(x), Integer(y)}; };
  switch (t) {
    case PolygonType::I: return {pt(0, 0), pt(0, 1), pt(a, 1), pt(b, 0)};
    case PolygonType::II: return {pt(0, 0), pt(0, 1), pt(a, 0)};
    case PolygonType::III: return {pt(a, 0), pt(0, 1), pt(-b, 0), pt(0, -1)};
    case PolygonType::IV: return {pt(a, 0), pt(0, 1), pt(-b, 0), pt(-1, -1)};
    case PolygonType::NotSpecial: break;
  }
  throw InvalidInput("NotSpecial has no normal form");
}

bool in_table_range(PolygonType t, int a, int b) {
  switch (t) {
    case PolygonType::I: return b >= a && a >= 1 && a + b >= 4;
    case PolygonType::II: return a >= 5;
    case PolygonType::III: return a >= 1 && b >= 0 && a + b >= 4;
    case PolygonType::IV: return a >= 1 && b >= 0 && a + b >= 3;
    case PolygonType::NotSpecial: return false;
  }
  return false;
}

bool in_classified_range(PolygonType t, int a, int b) {
  switch (t) {
    case PolygonType::II: return a >= 4;
    case PolygonType::III: return a >= 1 && b >= 0 && a + b >= 3;
    default: return in_table_range(t, a, b);
  }
}

namespace {

Integer cross2(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

struct Affine2 {
  IntegerMatrix u = IntegerMatrix::identity(2);
  LatticePoint t{Integer(0), Integer(0)};

  LatticePoint apply(const LatticePoint& x) const {
    LatticePoint y = u * x;
    y[0] += t[0];
    y[1] += t[1];
    return y;
  }
  /// this := (m, c) o this
  void then(const IntegerMatrix& m, const LatticePoint& c) {
    u = m * u;
    t = m * t;
    t[0] += c[0];
    t[1] += c[1];
  }
};

IntegerMatrix shear(const Integer& s) { return IntegerMatrix{{1, s}, {0, 1}}; }

}  // namespace

std::optional<std::array<LatticePoint, 3>> three_collinear(const PointConfig& s) {
  if (s.dim != 2) throw InvalidInput("three_collinear needs planar points");
  const auto& p = s.points;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t l = j + 1; l < p.size(); ++l)
        if (cross2(p[i], p[j], p[l]) == 0) return std::array<LatticePoint, 3>{p[i], p[j], p[l]};
  return std::nullopt;
}

PolygonClass classify(const LatticePolytope& poly) {
  if (poly.dim() != 2) throw InvalidInput("classify needs a polygon");
  if (!poly.is_full_dimensional()) throw InvalidInput("polygon is not full-dimensional");
  const auto& pts = poly.lattice_points();
  if (pts.size() < 6) throw HypothesisFailed("classification needs at least six lattice points");
  const PointConfig s = PointConfig::make(2, pts);
  PolygonClass out;
  if (min_vanishing_degree(s) > 2) return out;

  // the line with the most lattice points goes to the x-axis
  std::size_t best_i = 0, best_j = 1, best_count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      std::size_t count = 0;
      for (const auto& q : pts)
        if (cross2(pts[i], pts[j], q) == 0) ++count;
      if (count > best_count) {
        best_count = count;
        best_i = i;
        best_j = j;
      }
    }
  const IntVector d = primitive_part({pts[best_j][0] - pts[best_i][0], pts[best_j][1] - pts[best_i][1]});
  const auto eg = extended_gcd(d[0], d[1]);
  Affine2 tr;
  tr.then(IntegerMatrix{{eg.x, eg.y}, {-d[1], d[0]}}, {Integer(0), Integer(0)});
  const LatticePoint base = tr.apply(pts[best_i]);
  tr.then(IntegerMatrix::identity(2), {Integer(-base[0]), Integer(-base[1])});

  auto image = [&] {
    std::vector<LatticePoint> img;
    for (const auto& p : pts) img.push_back(tr.apply(p));
    return img;
  };
  std::vector<LatticePoint> axis, off;
  for (auto& q : image()) (q[1] == 0 ? axis : off).push_back(q);
  if (off.empty()) throw InvalidInput("polygon is not full-dimensional");

  bool single_height = std::all_of(off.begin(), off.end(), [&](const LatticePoint& q) { return q[1] == off[0][1]; });
  if (single_height) {
    if (off[0][1] < 0) tr.then(IntegerMatrix{{1, 0}, {0, -1}}, {Integer(0), Integer(0)});
    axis.clear();
    off.clear();
    for (auto& q : image()) (q[1] == 0 ? axis : off).push_back(q);
    std::sort(axis.begin(), axis.end());
    std::sort(off.begin(), off.end());
    const Integer xmin = axis.front()[0];
    tr.then(shear(xmin - off.front()[0]), {Integer(-xmin), Integer(0)});
    const int bottom = static_cast<int>(axis.back()[0] - axis.front()[0]);
    const int top = static_cast<int>(off.back()[0] - off.front()[0]);
    if (off.size() == 1) {
      out.type = PolygonType::II;
      out.a = bottom;
    } else {
      out.type = PolygonType::I;
      out.a = std::min(top, bottom);
      out.b = std::max(top, bottom);
    }
  } else {
    if (off.size() != 2) throw std::logic_error("conic polygon with unexpected off-axis points");
    if (off[0][1] < 0) std::swap(off[0], off[1]);
    const Integer c1 = off[0][0], c2 = off[1][0];
    const bool even = ((c1 + c2) % 2) == 0;
    const Integer s = even ? Integer((c2 - c1) / 2) : Integer((c2 - c1 + 1) / 2);
    tr.then(shear(s), {Integer(-(c1 + s)), Integer(0)});
    axis.clear();
    for (auto& q : image())
      if (q[1] == 0) axis.push_back(q);
    std::sort(axis.begin(), axis.end());
    int a = static_cast<int>(axis.back()[0]);
    int b = static_cast<int>(-axis.front()[0]);
    if (even) {
      out.type = PolygonType::III;
      if (a < b) {
        tr.then(IntegerMatrix{{-1, 0}, {0, 1}}, {Integer(0), Integer(0)});
        std::swap(a, b);
      }
    } else {
      out.type = PolygonType::IV;
      if (b - 1 > a) {
        // (x, y) -> (-1 - x, -y) swaps the two off-axis points
        tr.then(IntegerMatrix{{-1, 0}, {0, -1}}, {Integer(-1), Integer(0)});
        const int na = b - 1, nb = a + 1;
        a = na;
        b = nb;
      }
    }
    out.a = a;
    out.b = b;
  }
  out.transform_u = tr.u;
  out.transform_t = tr.t;

  // the transform must land exactly on the normal form
  std::vector<LatticePoint> img = image();
  sort_points(img);
  const LatticePolytope nf(2, normal_form_vertices(out.type, out.a, out.b));
  if (img != nf.lattice_points() || !in_classified_range(out.type, out.a, out.b))
    throw std::logic_error("normalisation did not reach the normal form");
  return out;
}

TeoDim2Report teo_dim2_suite(const LatticePolytope& p) {
  if (p.dim() != 2) throw InvalidInput("teo_dim2_suite needs a polygon");
  if (p.lattice_points().size() < 6) throw HypothesisFailed("needs at least six lattice points");
  TeoDim2Report r;
  r.lattice_width = lattice_width(p).width;
  r.width_one = r.lattice_width == 1;
  r.base_point = !base_locus_k2(lattice_points(p), 2).empty();
  r.base_curve_implied = r.width_one;
  r.consistent = r.width_one == r.base_point;
  return r;
}

}  // namespace fundform
