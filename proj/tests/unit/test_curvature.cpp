#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace pagecurv;

namespace {

Vec4 random_vec(std::mt19937_64& gen) {
  std::normal_distribution<double> n;
  return {n(gen), n(gen), n(gen), n(gen)};
}

double random_x(std::mt19937_64& gen, const DiagonalMetric& m) {
  const auto [lo, hi] = m.scan_range();
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

}  // namespace

TEST(Curvature, PairSlots) {
  EXPECT_EQ(pair_slot(0, 1).index, 0);
  EXPECT_EQ(pair_slot(1, 0).sign, -1.0);
  EXPECT_EQ(pair_slot(3, 1).index, 4);
  EXPECT_EQ(pair_slot(1, 3).sign, -1.0);
  EXPECT_EQ(pair_slot(2, 2).index, -1);
}

TEST(Curvature, OperatorIsSymmetric) {
  for (const DiagonalMetric& m : test::bundled()) {
    const RiemannTensor Rm = riemann_at(m.frame_at(0.37));
    const CurvatureOperator R = curvature_operator(Rm);
    EXPECT_LT(R.pair_asymmetry, 1e-10 * std::max(1.0, Rm.max_abs())) << m.name;
    for (int P = 0; P < 6; ++P)
      for (int Q = 0; Q < 6; ++Q) EXPECT_EQ(R(P, Q), R(Q, P));
  }
}

TEST(Curvature, BasisPlaneIsDiagonalEntry) {
  const CurvatureOperator R = curvature_at(test::bundled()[0], 0.42);
  EXPECT_DOUBLE_EQ(sectional(R, TwoPlane::basis(0, 1)), R(0, 0));
  EXPECT_DOUBLE_EQ(sectional(R, TwoPlane::basis(2, 3)), R(3, 3));
}

TEST(Curvature, SectionalInvariantUnderBasisChange) {
  auto gen = test::rng(10);
  const CurvatureOperator R = curvature_at(test::bundled()[0], -0.6);
  for (int k = 0; k < 50; ++k) {
    const TwoPlane p = TwoPlane::from_span(random_vec(gen), random_vec(gen));
    const double K = sectional(R, p);
    EXPECT_NEAR(sectional(R, TwoPlane(p.v(), p.u())), K, 1e-12);
    const double t = 0.7 * k;
    Vec4 u2{}, v2{};
    for (int i = 0; i < 4; ++i) {
      u2[i] = std::cos(t) * p.u()[i] + std::sin(t) * p.v()[i];
      v2[i] = -std::sin(t) * p.u()[i] + std::cos(t) * p.v()[i];
    }
    EXPECT_NEAR(sectional(R, TwoPlane::from_span(u2, v2)), K, 1e-12);
  }
}

TEST(Curvature, TwoPlaneRejectsNonOrthonormal) {
  EXPECT_THROW(TwoPlane({1, 0, 0, 0}, {1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(TwoPlane({2, 0, 0, 0}, {0, 1, 0, 0}), std::invalid_argument);
  EXPECT_THROW((void)TwoPlane::from_span({1, 2, 0, 0}, {2, 4, 0, 0}), std::invalid_argument);
}

TEST(Curvature, RoundS4RandomPlanes) {
  auto gen = test::rng(11);
  const DiagonalMetric m = round_s4_metric();
  for (int k = 0; k < 100; ++k) {
    const CurvatureOperator R = curvature_at(m, random_x(gen, m));
    const TwoPlane p = TwoPlane::from_span(random_vec(gen), random_vec(gen));
    ASSERT_NEAR(sectional(R, p), 1.0, 1e-10);
    for (double r : ricci(R)) ASSERT_NEAR(r, 3.0, 1e-10);
  }
}

TEST(Curvature, ScalarIsRicciTrace) {
  for (const DiagonalMetric& m : test::bundled()) {
    const CurvatureOperator R = curvature_at(m, 0.11);
    const Vec4 ric = ricci(R);
    EXPECT_NEAR(scalar(R), ric[0] + ric[1] + ric[2] + ric[3], 1e-12 * std::abs(scalar(R)));
    EXPECT_LT(max_off_diagonal_ricci(R), 1e-12);
  }
}

TEST(Curvature, PageIsEinsteinAtSamples) {
  const DiagonalMetric& m = test::bundled()[0];
  const double lambda = ricci(curvature_at(m, 0.0))[0];
  EXPECT_NEAR(lambda, 3.23806730318469, 1e-11);
  for (double x : {-0.99, -0.5, 0.0, 0.3, 0.7, 0.999}) {
    for (double r : ricci(curvature_at(m, x))) EXPECT_NEAR(r, lambda, 1e-8 * lambda) << x;
  }
}

TEST(Curvature, PageBiaxialSymmetry) {
  const DiagonalMetric& m = test::bundled()[0];
  for (double x : {-0.8, 0.05, 0.5, 0.97}) {
    const CurvatureOperator R = curvature_at(m, x);
    EXPECT_NEAR(R(0, 0), R(1, 1), 1e-12 * std::max(1.0, std::abs(R(0, 0))));
    EXPECT_NEAR(R(4, 4), R(3, 3), 1e-12 * std::max(1.0, std::abs(R(3, 3))));
  }
}

// The engine's K01 is half of the closed form -2F'/(gW) at every point.
TEST(Curvature, PageK01RatioIsConstant) {
  const PageParams& p = test::page_params();
  const DiagonalMetric& m = test::bundled()[0];
  for (int k = 0; k < 200; ++k) {
    const double x = -0.999 + 1.998 * (k + 0.5) / 200.0;
    const double engine = curvature_at(m, x)(0, 0);
    const double closed = closed_form_k01(p, x);
    ASSERT_EQ(std::signbit(engine), std::signbit(closed)) << x;
    ASSERT_NEAR(engine / closed, 0.5, 1e-9) << x;
  }
}

TEST(Curvature, PfaffianAndWeylDensitiesAgree) {
  for (const DiagonalMetric& m : test::bundled()) {
    for (double x : {-0.5, 0.2, 0.9}) {
      const RiemannTensor Rm = riemann_at(m.frame_at(x));
      const double a = gauss_bonnet_density(curvature_operator(Rm));
      const double b = gauss_bonnet_density_pfaffian(Rm);
      EXPECT_NEAR(a, b, 1e-10 * std::max(1.0, std::abs(a))) << m.name << " " << x;
    }
  }
}

TEST(CurvatureProperty, FirstBianchiIdentity) {
  auto gen = test::rng(12);
  for (int trial = 0; trial < test::kTrials; ++trial) {
    const DiagonalMetric& m = test::bundled()[trial % 3];
    const double x = random_x(gen, m);
    const RiemannTensor Rm = riemann_at(m.frame_at(x));
    const CurvatureOperator R = curvature_operator(Rm);
    ASSERT_LT(R.bianchi_residual(), 1e-10) << m.name << " x=" << x;
    ASSERT_LT(Rm.first_bianchi_residual(), 1e-10 * std::max(1.0, Rm.max_abs()))
        << m.name << " x=" << x;
  }
}
