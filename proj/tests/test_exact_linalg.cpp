#include "fundform/exact_linalg.hpp"
#include "fundform/jets.hpp"
#include "fundform/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace fundform;
using fundform::testing::Gen;

namespace {

IntegerMatrix u1u2() { return IntegerMatrix{{1, -2, 0, 1}, {0, 1, -2, 1}}; }

}  // namespace

TEST(Rank, SmallExamples) {
  EXPECT_EQ(rank(RationalMatrix::identity(3)), 3u);
  EXPECT_EQ(rank(RationalMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_THROW(rank(RationalMatrix(0, 3)), InvalidInput);
}

TEST(Rank, CubicJetsOfQuadrilateral) {
  const auto s = PointConfig::make(2, fundform::testing::eleven_point_quadrilateral());
  const JetSystem js = build_jets(s, 3);
  const auto j3 = js.j_block(3);
  ASSERT_EQ(j3.rows(), 10u);
  EXPECT_EQ(rank(j3), 9u);
  EXPECT_EQ(oracle::bareiss_rank(j3), 9u);
}

TEST(Rank, AgreesWithBareiss) {
  Gen g(11);
  for (int t = 0; t < 200; ++t) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 5)), c = static_cast<std::size_t>(g.uniform(1, 5));
    IntegerMatrix m = g.int_matrix(r, c, -3, 3);
    if (g.coin() && r > 1) {
      // force a dependency
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j) - m(r > 2 ? 1 : 0, j);
    }
    EXPECT_EQ(rank(to_rational(m)), oracle::bareiss_rank(m));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(RationalMatrix::identity(2), Side::Right).dimension(), 0u);
  const auto k = integral_kernel(IntegerMatrix{{1, 1}});
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(abs_of(k(0, 0)), 1);
  EXPECT_EQ(k(0, 0) + k(0, 1), 0);
  EXPECT_EQ(integral_kernel(IntegerMatrix::identity(3)).rows(), 0u);
}

TEST(Kernel, LeftKernelOfConicJets) {
  // points of conv{(0,0),(5,0),(0,1)}: the conics through them are y (y - 1 + c x)
  std::vector<LatticePoint> pts;
  for (long x = 0; x <= 5; ++x) pts.push_back(fundform::testing::pt(x, 0));
  pts.push_back(fundform::testing::pt(0, 1));
  const JetSystem js = build_jets(PointConfig::make(2, pts), 2);
  const auto kb = kernel_basis(js.lt_block(2), Side::Left);
  ASSERT_EQ(kb.dimension(), 2u);
  // rows of Lt(J_2): 1, x, y, x^2, xy, y^2 in enumeration order
  RatVector expected(js.row_exponents.size(), Rational(0));
  for (std::size_t i = 0; i < js.row_exponents.size(); ++i) {
    if (js.row_exponents[i] == Exponent{0, 2}) expected[i] = 1;
    if (js.row_exponents[i] == Exponent{0, 1}) expected[i] = -1;
  }
  RowSpace span(expected.size());
  for (const auto& v : kb.vectors) span.add(v);
  EXPECT_TRUE(span.contains(expected));
}

TEST(Kernel, LeftKernelOfCubicJets) {
  const auto s = PointConfig::make(2, fundform::testing::eleven_point_quadrilateral());
  const JetSystem js = build_jets(s, 3);
  EXPECT_EQ(kernel_basis(js.lt_block(3), Side::Left).dimension(), 1u);
}

TEST(Kernel, BinomialLatticeContainsWeightsAndDirection) {
  const auto k = integral_kernel(u1u2());
  ASSERT_EQ(k.rows(), 2u);
  EXPECT_TRUE(oracle::is_integral_kernel_of(u1u2(), k));
  EXPECT_TRUE(oracle::is_integral_kernel_of(u1u2(), IntegerMatrix{{7, 11, 13, 15}, {3, 5, 6, 7}}));
}

TEST(Kernel, RandomKernelsAreSaturatedAndExact) {
  Gen g(12);
  for (int t = 0; t < 150; ++t) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 3));
    const auto c = static_cast<std::size_t>(g.uniform(2, 5));
    const IntegerMatrix m = g.int_matrix(r, c, -4, 4);
    const auto k = integral_kernel(m);
    EXPECT_TRUE(oracle::is_integral_kernel_of(m, k)) << m;
    const auto rk = kernel_basis(to_rational(m), Side::Right);
    EXPECT_EQ(rk.dimension(), k.rows());
    for (const auto& v : rk.vectors) EXPECT_EQ(to_rational(m) * v, RatVector(r, Rational(0)));
    const auto lk = kernel_basis(to_rational(m), Side::Left);
    for (const auto& v : lk.vectors) EXPECT_EQ(to_rational(m).transpose() * v, RatVector(c, Rational(0)));
  }
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(IntegerMatrix{{2, 0}, {0, 3}}).divisors, (std::vector<Integer>{1, 6}));
  EXPECT_EQ(smith_normal_form(u1u2()).divisors, (std::vector<Integer>{1, 1}));
  IntegerMatrix with_zero = u1u2();
  with_zero.append_row({0, 0, 0, 0});
  EXPECT_EQ(smith_normal_form(with_zero).divisors, smith_normal_form(u1u2()).divisors);
}

TEST(Smith, FactorisationAndMinors) {
  Gen g(13);
  for (int t = 0; t < 150; ++t) {
    const auto r = static_cast<std::size_t>(g.uniform(1, 4));
    const auto c = static_cast<std::size_t>(g.uniform(1, 4));
    const IntegerMatrix m = g.int_matrix(r, c, -6, 6);
    const auto sf = smith_normal_form(m);
    EXPECT_EQ(sf.u * m * sf.v, sf.d);
    EXPECT_EQ(abs_of(determinant(sf.u)), 1);
    EXPECT_EQ(abs_of(determinant(sf.v)), 1);
    for (std::size_t i = 1; i < sf.divisors.size(); ++i) EXPECT_EQ(sf.divisors[i] % sf.divisors[i - 1], 0);
    Integer prod = 1;
    for (const auto& d : sf.divisors) prod *= d;
    EXPECT_EQ(sf.divisors.empty() ? Integer(0) : prod, oracle::minor_gcd(m));
    EXPECT_EQ(sf.divisors.size(), oracle::bareiss_rank(m));
  }
}

TEST(Hermite, Factorisation) {
  Gen g(14);
  for (int t = 0; t < 100; ++t) {
    const IntegerMatrix m = g.int_matrix(static_cast<std::size_t>(g.uniform(1, 4)), 3, -5, 5);
    const auto hf = hermite_normal_form(m);
    EXPECT_EQ(hf.u * m, hf.h);
    EXPECT_EQ(abs_of(determinant(hf.u)), 1);
    EXPECT_EQ(hf.rank, oracle::bareiss_rank(m));
  }
}

TEST(Saturation, Examples) {
  EXPECT_TRUE(is_saturated(IntegerMatrix::identity(2)));
  EXPECT_FALSE(is_saturated(IntegerMatrix{{2, 0}, {0, 1}}));
  EXPECT_TRUE(is_saturated(u1u2()));
  EXPECT_THROW(is_saturated(IntegerMatrix{{1, 2}, {2, 4}}), InvalidInput);
}

TEST(Saturation, AgreesWithMinorGcd) {
  Gen g(15);
  for (int t = 0; t < 200; ++t) {
    const IntegerMatrix m = g.int_matrix(2, 4, -3, 3);
    if (oracle::bareiss_rank(m) < 2) {
      EXPECT_THROW(is_saturated(m), InvalidInput);
      continue;
    }
    EXPECT_EQ(is_saturated(m), oracle::saturated_by_minors(m));
    EXPECT_EQ(lattice_index(m), oracle::minor_gcd(m));
  }
}

TEST(Solve, ParticularSolutionHasZeroFreeVariables) {
  const RationalMatrix a{{1, 2, 3}, {0, 0, 1}};
  const auto x = solve(a, {Rational(5), Rational(1)});
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (RatVector{Rational(2), Rational(0), Rational(1)}));
  EXPECT_FALSE(solve(RationalMatrix{{1, 1}, {1, 1}}, {Rational(0), Rational(1)}));
}

TEST(Inverse, RoundTrip) {
  Gen g(16);
  for (int t = 0; t < 60; ++t) {
    const IntegerMatrix u = g.unimodular(3, 6);
    EXPECT_EQ(u * unimodular_inverse(u), IntegerMatrix::identity(3));
    const RationalMatrix q = to_rational(g.int_matrix(3, 3, -4, 4));
    if (determinant(q) == 0) {
      EXPECT_THROW(inverse(q), InvalidInput);
    } else {
      EXPECT_EQ(q * inverse(q), RationalMatrix::identity(3));
      EXPECT_EQ(determinant(to_integer(q)), oracle::bareiss_determinant(to_integer(q)));
    }
  }
}

TEST(Unimodular, CompletionAndCoordinates) {
  Gen g(17);
  for (int t = 0; t < 100; ++t) {
    const IntVector v = g.primitive(3, 7);
    const auto u = complete_to_unimodular(v);
    EXPECT_EQ(u.row(0), v);
    EXPECT_EQ(abs_of(determinant(u)), 1);
  }
  const IntegerMatrix b = integral_kernel(IntegerMatrix{{7, 11, 13, 15}});
  const IntegerMatrix cmap = lattice_coordinate_map(b);
  const IntegerMatrix image = cmap * b.transpose();
  for (std::size_t i = 0; i < image.rows(); ++i)
    for (std::size_t j = 0; j < image.cols(); ++j) EXPECT_EQ(image(i, j), i == j ? 1 : 0);
}

TEST(Lll, PreservesLatticeAndShortens) {
  Gen g(18);
  for (int t = 0; t < 50; ++t) {
    const IntegerMatrix b = g.unimodular(3, 10) * IntegerMatrix::identity(3);
    const auto red = lll_reduce(b, RationalMatrix::identity(3));
    EXPECT_EQ(abs_of(determinant(red)), 1);
    Integer first = 0;
    for (std::size_t j = 0; j < 3; ++j) first += red(0, j) * red(0, j);
    EXPECT_LE(first, 4);  // |b1|^2 <= 2^(n-1) lambda1^2 with lambda1 = 1
  }
}
