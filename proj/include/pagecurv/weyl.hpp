#pragma once

#include <algorithm>
#include <array>
#include <cmath>

#include "pagecurv/curvature.hpp"
#include "pagecurv/sym3_eigen.hpp"

namespace pagecurv {

// Blocks of the curvature operator in the basis
//   w(+/-)_i = (e0 ^ ei +/- ej ^ ek) / sqrt(2),  (i, j, k) cyclic.
struct SelfDualSplit {
  Mat3 plus{};   // on Lambda^+
  Mat3 minus{};  // on Lambda^-
  Mat3 cross{};  // Lambda^- -> Lambda^+ (traceless Ricci part)
};

[[nodiscard]] inline SelfDualSplit self_dual_split(const CurvatureOperator& R) {
  SelfDualSplit s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double a = R.m[i][j];
      const double b = R.m[i][j + 3];
      const double bt = R.m[i + 3][j];
      const double c = R.m[i + 3][j + 3];
      s.plus[i][j] = 0.5 * (a + b + bt + c);
      s.minus[i][j] = 0.5 * (a - b - bt + c);
      s.cross[i][j] = 0.5 * (a - b + bt - c);
    }
  return s;
}

// Sorted eigenvalues of a traceless Weyl half.
struct WeylPlusSpectrum {
  Vec3 mu{};

  [[nodiscard]] double trace() const { return mu[0] + mu[1] + mu[2]; }
  [[nodiscard]] double diameter() const { return mu[2] - mu[0]; }

  // Smallest gap between neighbouring eigenvalues, relative to the spectral
  // diameter (0 when all three coincide).
  [[nodiscard]] double relative_pair_gap() const {
    const double d = diameter();
    if (d == 0.0) return 0.0;
    return std::min(mu[1] - mu[0], mu[2] - mu[1]) / d;
  }

  // Number of distinct eigenvalues, treating a relative gap at or below
  // rel_tol (against the diameter) as equality.
  [[nodiscard]] int distinct_count(double rel_tol = 1e-8) const {
    const double d = diameter();
    const double scale = std::max(std::abs(mu[0]), std::abs(mu[2]));
    if (d <= rel_tol * scale || d == 0.0) return 1;
    int n = 1;
    if (mu[1] - mu[0] > rel_tol * d) ++n;
    if (mu[2] - mu[1] > rel_tol * d) ++n;
    return n;
  }
};

namespace detail {

inline Mat3 subtract_scalar_part(Mat3 M, double scalar_curvature) {
  for (int i = 0; i < 3; ++i) M[i][i] -= scalar_curvature / 12.0;
  return M;
}

inline double frobenius2(const Mat3& M) {
  double s = 0.0;
  for (const auto& row : M)
    for (double v : row) s += v * v;
  return s;
}

}  // namespace detail

[[nodiscard]] inline Mat3 weyl_plus_block(const CurvatureOperator& R,
                                          double scalar_curvature) {
  return detail::subtract_scalar_part(self_dual_split(R).plus, scalar_curvature);
}

[[nodiscard]] inline Mat3 weyl_minus_block(const CurvatureOperator& R,
                                           double scalar_curvature) {
  return detail::subtract_scalar_part(self_dual_split(R).minus, scalar_curvature);
}

[[nodiscard]] inline WeylPlusSpectrum weyl_plus(const CurvatureOperator& R,
                                                double scalar_curvature) {
  return {eigenvalues_sym3(weyl_plus_block(R, scalar_curvature))};
}

[[nodiscard]] inline WeylPlusSpectrum weyl_minus(const CurvatureOperator& R,
                                                 double scalar_curvature) {
  return {eigenvalues_sym3(weyl_minus_block(R, scalar_curvature))};
}

// Chern-Gauss-Bonnet density |W+|^2 + |W-|^2 + s^2/24 - |Ric0|^2/2, with the
// Weyl halves normed as operators on 2-forms. 8 pi^2 chi is its integral.
[[nodiscard]] inline double gauss_bonnet_density(const CurvatureOperator& R) {
  const double s = scalar(R);
  const Mat4 ric = ricci_matrix(R);
  double ric0 = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      const double t = ric[a][c] - (a == c ? s / 4.0 : 0.0);
      ric0 += t * t;
    }
  return detail::frobenius2(weyl_plus_block(R, s)) +
         detail::frobenius2(weyl_minus_block(R, s)) + s * s / 24.0 - 0.5 * ric0;
}

// The same density from the Pfaffian, (|Rm|^2 - 4|Ric|^2 + s^2) / 4, where
// |Rm|^2 sums all R_abcd^2.
[[nodiscard]] inline double gauss_bonnet_density_pfaffian(const RiemannTensor& Rm) {
  double rm2 = 0.0;
  for (double v : Rm.r) rm2 += v * v;
  double ric2 = 0.0;
  double s = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      double r = 0.0;
      for (int b = 0; b < 4; ++b) r += Rm(b, a, c, b);
      ric2 += r * r;
      if (a == c) s += r;
    }
  return 0.25 * (rm2 - 4.0 * ric2 + s * s);
}

}  // namespace pagecurv
