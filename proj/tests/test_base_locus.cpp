#include "fundform/base_locus.hpp"
#include "fundform/error.hpp"
#include "fundform/exact_linalg.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace fundform;
using fundform::testing::Gen;
using fundform::testing::pt;

namespace {

PointConfig points_of(const std::vector<LatticePoint>& vertices) {
  return lattice_points(LatticePolytope(vertices.front().size(), vertices));
}

PointConfig triangle_ii() { return points_of({pt(0, 0), pt(0, 1), pt(5, 0)}); }
PointConfig type_i() { return points_of({pt(0, 0), pt(0, 1), pt(2, 1), pt(3, 0)}); }
PointConfig type_iii() { return points_of({pt(2, 0), pt(0, 1), pt(-2, 0), pt(0, -1)}); }
PointConfig quad() { return PointConfig::make(2, fundform::testing::eleven_point_quadrilateral()); }

std::vector<IntVector> primitive_directions(std::size_t k, long r) {
  std::vector<IntVector> out;
  IntVector v(k, Integer(-r));
  while (true) {
    if (content(v) == 1) out.push_back(v);
    std::size_t i = 0;
    while (i < k && v[i] == r) v[i++] = -r;
    if (i == k) break;
    ++v[i];
  }
  return out;
}

}  // namespace

TEST(BasePoint, ParabolaThroughTriangle) {
  const auto r = is_base_point(triangle_ii(), 2, {0, 1});
  ASSERT_TRUE(r.base_point);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->polynomial().to_string("x", true), "x2^2 - x2");
  EXPECT_TRUE(r.witness->vanishes_on(triangle_ii()));
  EXPECT_TRUE(is_base_point_via_form(triangle_ii(), 2, {0, 1}));
  EXPECT_FALSE(is_base_point(triangle_ii(), 2, {1, 0}).base_point);
  EXPECT_FALSE(is_base_point_via_form(triangle_ii(), 2, {1, 0}));
}

TEST(BasePoint, QuadrilateralHasNone) {
  for (const auto& v : primitive_directions(2, 5)) {
    EXPECT_FALSE(is_base_point(quad(), 4, v).base_point) << v[0] << "," << v[1];
    EXPECT_FALSE(is_base_point_via_form(quad(), 4, v));
  }
}

TEST(BasePoint, TypeThreeHasNone) {
  for (const auto& v : primitive_directions(2, 5)) EXPECT_FALSE(is_base_point(type_iii(), 2, v).base_point);
}

TEST(BasePoint, Preconditions) {
  EXPECT_THROW(is_base_point(quad(), 1, {1, 0}), InvalidInput);
  EXPECT_THROW(is_base_point(quad(), 2, {0, 0}), InvalidInput);
}

TEST(BasePoint, BothRoutesAgreeOnRandomInputs) {
  Gen g(51);
  int positives = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t k = g.coin() ? 2 : 3;
    const PointConfig s =
        PointConfig::make(k, g.distinct_points(k, static_cast<std::size_t>(g.uniform(5, 12)), -4, 4));
    const int m = static_cast<int>(g.uniform(2, 4));
    const IntVector v = g.primitive(k, 3);
    const auto r = is_base_point(s, m, v);
    EXPECT_EQ(r.base_point, is_base_point_via_form(s, m, v));
    EXPECT_EQ(r.base_point, r.witness.has_value());
    if (r.witness) {
      ++positives;
      EXPECT_TRUE(r.witness->vanishes_on(s));
      EXPECT_EQ(r.witness->polynomial().homogeneous_part(m), Polynomial::linear(v, 0).pow(static_cast<unsigned>(m)));
    }
  }
  EXPECT_GT(positives, 0);
}

TEST(BasePoint, Equivariance) {
  Gen g(52);
  for (int t = 0; t < 60; ++t) {
    const std::size_t k = g.coin() ? 2 : 3;
    const PointConfig s = PointConfig::make(k, g.distinct_points(k, 7, -3, 3));
    const IntegerMatrix u = g.unimodular(k);
    const LatticePoint shift = g.vec(k, -2, 2);
    std::vector<LatticePoint> moved;
    for (const auto& p : s.points) moved.push_back(fundform::testing::apply(u, p, shift));
    const IntVector v = g.primitive(k, 3);
    const IntVector v2 = unimodular_inverse(u).transpose() * v;
    const int m = static_cast<int>(g.uniform(2, 3));
    EXPECT_EQ(is_base_point(s, m, v).base_point, is_base_point(PointConfig::make(k, moved), m, v2).base_point);
  }
}

TEST(BasePoint, NarrowDirectionsAreBasePoints) {
  Gen g(53);
  for (int t = 0; t < 60; ++t) {
    const std::size_t k = g.coin() ? 2 : 3;
    const PointConfig s = PointConfig::make(k, g.distinct_points(k, 6, -2, 2));
    const IntVector v = g.primitive(k, 2);
    Integer lo = dot(v, s.points[0]), hi = lo;
    for (const auto& p : s.points) {
      lo = std::min(lo, dot(v, p));
      hi = std::max(hi, dot(v, p));
    }
    const int m = static_cast<int>(hi - lo) + 1;
    if (m < 2 || m > 5) continue;
    EXPECT_TRUE(is_base_point(s, m, v).base_point);
  }
}

TEST(BaseLocus, Examples) {
  EXPECT_TRUE(base_locus_k2(quad(), 4).empty());
  const auto bl = base_locus_k2(type_i(), 2);
  EXPECT_EQ(bl.rational_points, (std::vector<IntVector>{{0, 1}}));
  EXPECT_EQ(bl.irrational_degree, 0);
  const auto tri = base_locus_k2(triangle_ii(), 2);
  EXPECT_EQ(tri.rational_points.size(), 1u);
  EXPECT_THROW(base_locus_k2(PointConfig::make(2, {pt(0, 0), pt(1, 0), pt(0, 1)}), 2), HypothesisFailed);
}

TEST(BaseLocus, ReportedPointsAreCommonZeros) {
  Gen g(54);
  for (int t = 0; t < 80; ++t) {
    const PointConfig s = PointConfig::make(2, g.distinct_points(2, static_cast<std::size_t>(g.uniform(5, 10)), -3, 3));
    const int m = static_cast<int>(g.uniform(2, 4));
    const FundamentalForm ff = fundamental_form(s, m);
    if (ff.dimension() == 0) continue;
    const auto bl = base_locus_k2(ff);
    for (const auto& p : bl.rational_points) {
      EXPECT_TRUE(ff.vanishes_at(to_rational(p)));
      EXPECT_TRUE(is_base_point(s, m, p).base_point);
    }
    // every small rational direction that is a base point is reported
    for (const auto& v : primitive_directions(2, 4)) {
      const bool first_positive = v[0] > 0 || (v[0] == 0 && v[1] > 0);
      if (!first_positive) continue;
      const bool listed = std::find(bl.rational_points.begin(), bl.rational_points.end(), v) != bl.rational_points.end();
      EXPECT_EQ(listed, ff.vanishes_at(to_rational(v)));
    }
  }
}

TEST(WidthBasePoint, Examples) {
  const auto a = width_base_point(LatticePolytope(2, {pt(0, 0), pt(0, 1), pt(2, 1), pt(3, 0)}), 2);
  EXPECT_EQ(a.direction, (IntVector{0, 1}));
  EXPECT_EQ(a.witness.polynomial().to_string("x", true), "x2^2 - x2");
  const auto b = width_base_point(LatticePolytope(2, {pt(0, 0), pt(0, 1), pt(5, 0)}), 3);
  EXPECT_EQ(b.witness.polynomial().to_string("x", true), "x2^3 - x2^2");
  std::vector<LatticePoint> cube;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) cube.push_back(pt(x, y, z));
  const auto c = width_base_point(LatticePolytope(3, cube), 2);
  EXPECT_EQ(content(c.direction), 1);
  EXPECT_EQ(c.witness.polynomial().terms().size(), 2u);
  EXPECT_TRUE(c.witness.vanishes_on(PointConfig::make(3, cube)));
  EXPECT_THROW(width_base_point(LatticePolytope(2, {pt(0, 0), pt(2, 0), pt(0, 2)}), 2), HypothesisFailed);
}

TEST(WidthBasePoint, WitnessVanishes) {
  Gen g(55);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = g.coin() ? 2 : 3;
    const auto p = g.full_polytope(k, k + 2, -3, 3);
    const auto lw = lattice_width(p);
    const int m = static_cast<int>(lw.width) + 1 + static_cast<int>(g.uniform(0, 1));
    const auto wb = width_base_point(p, m);
    EXPECT_TRUE(wb.witness.vanishes_on(lattice_points(p)));
    EXPECT_TRUE(is_base_point(lattice_points(p), m, wb.direction).base_point);
  }
}
