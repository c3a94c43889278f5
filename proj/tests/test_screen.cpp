#include "fundform/base_locus.hpp"
#include "fundform/error.hpp"
#include "fundform/screen.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace fundform;
using fundform::testing::Gen;
using fundform::testing::pt;

namespace {

std::vector<LatticePoint> sorted(std::vector<LatticePoint> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Polynomial cylinder(const Integer& m) {
  Polynomial c(3);
  c.add_term({2, 0, 0}, 1);
  c.add_term({1, 0, 0}, -1);
  c.add_term({0, 1, 0}, Rational(-2 * (m - 1)));
  return c;
}

struct Passing {
  LatticePolytope polytope;
  CorollaryReport report;
};

// Random small polytopes on which the criterion holds for a width direction.
std::vector<Passing> passing_samples(Gen& g, std::size_t count, long max_width) {
  std::vector<Passing> out;
  while (out.size() < count) {
    const auto p = g.full_polytope(3, static_cast<std::size_t>(g.uniform(4, 5)), -3, 3);
    const auto lw = lattice_width(p);
    if (lw.width < 2 || lw.width > max_width) continue;
    for (int s : {1, -1}) {
      IntVector v = lw.direction;
      for (auto& x : v) x *= s;
      auto c = corollary_check(p, v);
      if (c.passed()) {
        out.push_back({p, std::move(c)});
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST(Corollary, DeltaPrime) {
  const auto d = fundform::testing::delta_prime();
  const auto r = corollary_check(d, {1, 0, 0});
  EXPECT_TRUE(r.cond1);
  EXPECT_TRUE(r.cond2);
  EXPECT_TRUE(r.cond3);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.lw, 572);
  EXPECT_EQ(sorted(r.slice.points), sorted({pt(1, 0, -1), pt(1, 0, 0)}));
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->paraboloid.integer_normalized(), cylinder(572));
  EXPECT_EQ(r.witness->hyperplane_count, 570);
  EXPECT_EQ(r.witness->h + Polynomial::constant(3, 1), Polynomial::linear(IntVector{1, 0, 0}, 0));
  EXPECT_EQ(r.witness->f + r.witness->g, r.witness->h);
}

TEST(Corollary, DilatedDeltaPrime) {
  const auto r = corollary_check(dilate(fundform::testing::delta_prime(), 2), {1, 0, 0});
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.lw, 1144);
}

TEST(Corollary, SimplexFailsUniqueness) {
  const LatticePolytope simplex(3, {pt(0, 0, 0), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)});
  const auto r = corollary_check(simplex, {1, 0, 0});
  EXPECT_FALSE(r.cond1);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.witness);
}

TEST(Corollary, Preconditions) {
  EXPECT_THROW(corollary_check(LatticePolytope(3, {pt(0, 0, 0), pt(1, 1, 1)}), {1, 0, 0}), InvalidInput);
  EXPECT_THROW(corollary_check(fundform::testing::delta_prime(), {2, 0, 0}), InvalidInput);
}

TEST(Corollary, WitnessVanishesOnAllLatticePoints) {
  Gen g(71);
  for (const auto& s : passing_samples(g, 60, 9)) {
    ASSERT_TRUE(s.report.witness);
    EXPECT_TRUE(verify_witness_by_enumeration(s.polytope, *s.report.witness));
    EXPECT_EQ(s.report.witness->f.evaluate(s.report.p_min), 0);
    EXPECT_EQ(s.report.witness->g.evaluate(s.report.p_max), 0);
    for (const auto& q : s.report.slice.points) {
      EXPECT_EQ(s.report.witness->f.evaluate(q), 0);
      EXPECT_EQ(s.report.witness->g.evaluate(q), 0);
    }
  }
}

TEST(Corollary, PassingImpliesBasePointOfOrderWidth) {
  Gen g(72);
  for (const auto& s : passing_samples(g, 25, 5)) {
    const int m = static_cast<int>(s.report.lw);
    EXPECT_TRUE(is_base_point(lattice_points(s.polytope), m, s.report.direction).base_point);
  }
}

TEST(Corollary, StableUnderDilationAndUnimodularMaps) {
  Gen g(73);
  for (const auto& s : passing_samples(g, 20, 8)) {
    EXPECT_TRUE(corollary_check(dilate(s.polytope, 2), s.report.direction).passed());
    const IntegerMatrix u = g.unimodular(3);
    const auto moved = unimodular_image(s.polytope, u, g.vec(3, -4, 4));
    const IntVector v2 = unimodular_inverse(u).transpose() * s.report.direction;
    EXPECT_TRUE(corollary_check(moved, v2).passed());
  }
}

TEST(PseudonefBound, Examples) {
  EXPECT_EQ(pseudonef_bound(LatticePolytope(2, {pt(0, 0), pt(0, 1), pt(2, 1), pt(3, 0)})), 1);
  std::vector<LatticePoint> cube;
  for (long x = 0; x <= 1; ++x)
    for (long y = 0; y <= 1; ++y)
      for (long z = 0; z <= 1; ++z) cube.push_back(pt(x, y, z));
  EXPECT_EQ(pseudonef_bound(LatticePolytope(3, cube)), 1);
  EXPECT_EQ(pseudonef_bound(fundform::testing::delta_prime()), 572);
}

TEST(Nef, Examples) {
  const auto r = nef_check({22, 26}, 15015, 572, IntegerMatrix{{1, -2, 0, 1}, {0, 1, -2, 1}});
  EXPECT_EQ(r.bound, Rational(105, 4));
  EXPECT_TRUE(r.degrees_ok);
  EXPECT_TRUE(r.saturation_ok);
  EXPECT_TRUE(r.nef);
  const auto bad = nef_check({30}, 100, 4, IntegerMatrix{{1, -1, 0, 0}});
  EXPECT_EQ(bad.bound, 25);
  EXPECT_FALSE(bad.degrees_ok);
  EXPECT_FALSE(bad.nef);
  EXPECT_FALSE(nef_check({1}, 100, 4, IntegerMatrix{{2, -2, 0, 0}}).saturation_ok);
  EXPECT_THROW(nef_check({1}, 100, 0, IntegerMatrix{{1, -1}}), InvalidInput);
}

TEST(Nef, DependentRowsUseTheirSpan) {
  const IntegerMatrix l{{1, -2, 0, 1}, {0, 1, -2, 1}, {1, -1, -2, 2}};
  EXPECT_TRUE(nef_check({22, 26, 48}, 15015, 572, l).saturation_ok);
}
