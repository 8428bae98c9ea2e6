#pragma once

#include "pagecurv/conventions.hpp"
#include "pagecurv/metric.hpp"
#include "pagecurv/profile_expr.hpp"

namespace pagecurv {

// Unit round S^4, ds^2 = dt^2 + sin^2 t (sigma_1^2 + sigma_2^2 + sigma_3^2),
// written in the coordinate x = cos t in (-1, 1) so that the profiles stay
// inside the algebraic expression language:
//   f0 = 1 / sqrt(1 - x^2),  f1 = f2 = f3 = sqrt(1 - x^2).
// All sectional curvatures equal 1.
[[nodiscard]] inline DiagonalMetric round_s4_metric() {
  const ProfileExpr x = ProfileExpr::variable();
  const ProfileExpr s = sqrt((1.0 - x) * (1.0 + x));
  DiagonalMetric m;
  m.name = "s4";
  m.f = {1.0 / s, s, s, s};
  m.domain = {-1.0, 1.0};
  m.orbit_volume = kOrbitVolume;
  return m;
}

// Fubini-Study metric on CP^2 with sectional curvature in [1, 4]:
//   ds^2 = dt^2 + sin^2 t (sigma_1^2 + sigma_2^2) + sin^2 t cos^2 t sigma_3^2,
// t in (0, pi/2), written in x = cos 2t in (-1, 1):
//   f0 = 1 / (2 sqrt(1 - x^2)),  f1 = f2 = sqrt((1 - x)/2),
//   f3 = sqrt(1 - x^2) / 2.
[[nodiscard]] inline DiagonalMetric fubini_study_metric() {
  const ProfileExpr x = ProfileExpr::variable();
  const ProfileExpr s = sqrt((1.0 - x) * (1.0 + x));
  const ProfileExpr sin_t = sqrt((1.0 - x) / 2.0);
  DiagonalMetric m;
  m.name = "cp2-fs";
  m.f = {1.0 / (2.0 * s), sin_t, sin_t, s / 2.0};
  m.domain = {-1.0, 1.0};
  m.orbit_volume = kOrbitVolume;
  return m;
}

}  // namespace pagecurv
