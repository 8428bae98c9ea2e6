#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace pagecurv;

TEST(GaussBonnet, RoundS4) {
  const GaussBonnetResult r = gauss_bonnet_chi(round_s4_metric());
  EXPECT_NEAR(r.chi, 2.0, 1e-6);
  EXPECT_TRUE(r.converged);
  EXPECT_GT(r.samples, 0);
}

TEST(GaussBonnet, FubiniStudy) {
  EXPECT_NEAR(gauss_bonnet_chi(fubini_study_metric()).chi, 3.0, 1e-4);
}

TEST(GaussBonnet, Page) {
  const GaussBonnetResult r = gauss_bonnet_chi(test::bundled()[0], 1e-9);
  EXPECT_NEAR(r.chi, 4.0, 4.0 * 5e-3);
  EXPECT_TRUE(r.converged);
}

TEST(GaussBonnet, HalvingToleranceStaysWithinEstimate) {
  for (const DiagonalMetric& m : test::bundled()) {
    for (double tol : {1e-5, 1e-7, 1e-9}) {
      const GaussBonnetResult a = gauss_bonnet_chi(m, tol);
      const GaussBonnetResult b = gauss_bonnet_chi(m, tol / 2);
      // 4 ulp of slack for estimates that underflow to rounding level
      const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(a.chi);
      EXPECT_LE(std::abs(a.chi - b.chi), a.quad_error_estimate + slack) << m.name << " " << tol;
    }
  }
}

TEST(GaussBonnet, DensityIsEvenForSymmetricMetrics) {
  const DiagonalMetric& m = test::bundled()[0];
  for (double x : {0.1, 0.6, 0.95})
    EXPECT_NEAR(euler_density(m, x), euler_density(m, -x), 1e-10 * std::abs(euler_density(m, x)));
}

TEST(GaussBonnet, RejectsBadTolerance) {
  EXPECT_THROW((void)gauss_bonnet_chi(round_s4_metric(), 0.0), std::invalid_argument);
}
