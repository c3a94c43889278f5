#include "fundform/error.hpp"
#include "fundform/exact_linalg.hpp"
#include "fundform/jets.hpp"
#include "fundform/surface2.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace fundform;
using fundform::testing::Gen;
using fundform::testing::pt;

namespace {

struct Params {
  PolygonType type;
  int a;
  int b;
};

std::vector<Params> sweep(int max_sum) {
  std::vector<Params> out;
  for (int a = 0; a <= max_sum; ++a)
    for (int b = 0; a + b <= max_sum; ++b)
      for (PolygonType t : {PolygonType::I, PolygonType::II, PolygonType::III, PolygonType::IV}) {
        if (t == PolygonType::II && b != 0) continue;
        if (in_table_range(t, a, b)) out.push_back({t, a, b});
      }
  return out;
}

// III (a, b) ~ (b, a) and IV (a, b) ~ (b - 1, a + 1); the classifier reports a >= b
// for III and a >= b - 1 for IV
Params canonical(Params p) {
  if (p.type == PolygonType::III && p.a < p.b) std::swap(p.a, p.b);
  if (p.type == PolygonType::IV && p.b - 1 > p.a) p = {p.type, p.b - 1, p.a + 1};
  return p;
}

void expect_class(const LatticePolytope& p, Params want) {
  want = canonical(want);
  const PolygonClass c = classify(p);
  EXPECT_EQ(c.type, want.type) << to_string(want.type) << " " << want.a << "," << want.b;
  EXPECT_EQ(c.a, want.a);
  EXPECT_EQ(c.b, want.b);
  // the reported transform lands on the normal form
  std::vector<LatticePoint> img;
  for (const auto& x : p.lattice_points()) img.push_back(fundform::testing::apply(c.transform_u, x, c.transform_t));
  std::sort(img.begin(), img.end());
  const LatticePolytope nf(2, normal_form_vertices(want.type, want.a, want.b));
  auto expected = nf.lattice_points();
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(img, expected);
  EXPECT_EQ(abs_of(determinant(c.transform_u)), 1);
}

}  // namespace

TEST(ThreeCollinear, Examples) {
  EXPECT_FALSE(three_collinear(PointConfig::make(2, {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)})));
  const auto t = three_collinear(PointConfig::make(2, {pt(0, 0), pt(1, 0), pt(2, 0)}));
  ASSERT_TRUE(t);
  EXPECT_EQ((*t)[2], pt(2, 0));
}

TEST(ThreeCollinear, PolygonsWithFivePoints) {
  Gen g(61);
  int tested = 0;
  while (tested < 100) {
    const auto p = g.full_polytope(2, static_cast<std::size_t>(g.uniform(3, 6)), -3, 3);
    if (p.lattice_points().size() < 5) continue;
    ++tested;
    EXPECT_TRUE(three_collinear(lattice_points(p)));
  }
}

TEST(Classify, Examples) {
  expect_class(LatticePolytope(2, {pt(0, 0), pt(0, 1), pt(2, 1), pt(3, 0)}), {PolygonType::I, 2, 3});
  expect_class(LatticePolytope(2, {pt(0, 0), pt(0, 1), pt(5, 0)}), {PolygonType::II, 5, 0});
  expect_class(LatticePolytope(2, {pt(2, 0), pt(0, 1), pt(-2, 0), pt(0, -1)}), {PolygonType::III, 2, 2});
  EXPECT_EQ(classify(LatticePolytope(2, {pt(0, 0), pt(2, 0), pt(0, 2)})).type, PolygonType::NotSpecial);
  EXPECT_THROW(classify(LatticePolytope(2, {pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)})), HypothesisFailed);
  EXPECT_THROW(classify(LatticePolytope(2, {pt(0, 0), pt(9, 0)})), InvalidInput);
}

TEST(Classify, ShearedTriangleStaysTypeTwo) {
  const LatticePolytope tri(2, {pt(0, 0), pt(0, 1), pt(5, 0)});
  expect_class(unimodular_image(tri, IntegerMatrix{{1, 1}, {0, 1}}, pt(0, 0)), {PolygonType::II, 5, 0});
}

TEST(Classify, NormalFormsUnderRandomMaps) {
  Gen g(62);
  for (const auto& p : sweep(8)) {
    const LatticePolytope nf(2, normal_form_vertices(p.type, p.a, p.b));
    expect_class(nf, p);
    for (int t = 0; t < 5; ++t) expect_class(unimodular_image(nf, g.unimodular(2, 6), g.vec(2, -9, 9)), p);
  }
}

TEST(Classify, ExtendedRangeBoundary) {
  // six-point polygons just outside the table ranges
  expect_class(LatticePolytope(2, normal_form_vertices(PolygonType::II, 4, 0)), {PolygonType::II, 4, 0});
  expect_class(LatticePolytope(2, normal_form_vertices(PolygonType::III, 2, 1)), {PolygonType::III, 2, 1});
  EXPECT_FALSE(in_table_range(PolygonType::II, 4, 0));
  EXPECT_TRUE(in_classified_range(PolygonType::II, 4, 0));
}

TEST(NormalForms, WidthAndSpeciality) {
  for (const auto& p : sweep(10)) {
    const LatticePolytope nf(2, normal_form_vertices(p.type, p.a, p.b));
    const PointConfig s = lattice_points(nf);
    EXPECT_GE(s.size(), 6u);
    EXPECT_TRUE(is_special(s, 3));
    EXPECT_EQ(min_vanishing_degree(s), 2);
    const bool flat = p.type == PolygonType::I || p.type == PolygonType::II;
    EXPECT_EQ(lattice_width(nf).width == 1, flat);
  }
}

TEST(TeoDim2, Examples) {
  const auto i = teo_dim2_suite(LatticePolytope(2, normal_form_vertices(PolygonType::I, 2, 3)));
  EXPECT_TRUE(i.width_one && i.base_point && i.base_curve_implied && i.consistent);
  const auto iii = teo_dim2_suite(LatticePolytope(2, normal_form_vertices(PolygonType::III, 2, 2)));
  EXPECT_FALSE(iii.width_one || iii.base_point || iii.base_curve_implied);
  EXPECT_TRUE(iii.consistent);
  const auto ns = teo_dim2_suite(LatticePolytope(2, {pt(0, 0), pt(2, 0), pt(0, 2)}));
  EXPECT_EQ(ns.lattice_width, 2);
  EXPECT_FALSE(ns.width_one || ns.base_point || ns.base_curve_implied);
}

TEST(TeoDim2, ConsistentOnSweep) {
  for (const auto& p : sweep(9)) {
    const auto r = teo_dim2_suite(LatticePolytope(2, normal_form_vertices(p.type, p.a, p.b)));
    EXPECT_TRUE(r.consistent) << to_string(p.type) << " " << p.a << "," << p.b;
  }
}
