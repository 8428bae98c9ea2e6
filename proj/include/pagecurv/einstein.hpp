#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pagecurv/curvature.hpp"
#include "pagecurv/metric.hpp"

namespace pagecurv {

struct EinsteinScan {
  double lambda = 0.0;        // mean Ricci eigenvalue at the domain midpoint
  double max_residual = 0.0;  // max |Ric_aa - lambda| / max(1, |lambda|)
  double worst_x = 0.0;
  int grid = 0;

  friend bool operator==(const EinsteinScan&, const EinsteinScan&) = default;
};

// Measures how far the frame-diagonal Ricci tensor is from lambda * g on a
// uniform grid over the metric's scan range.
[[nodiscard]] inline EinsteinScan einstein_scan(const DiagonalMetric& m, int grid) {
  if (grid < 2) throw std::invalid_argument("einstein_scan: grid >= 2");
  EinsteinScan out;
  out.grid = grid;
  const Vec4 centre = ricci(curvature_at(m, m.domain.mid()));
  out.lambda = 0.25 * (centre[0] + centre[1] + centre[2] + centre[3]);
  const double scale = std::max(1.0, std::abs(out.lambda));
  const auto [lo, hi] = m.scan_range();
  for (int k = 0; k < grid; ++k) {
    const double x = lo + (hi - lo) * k / (grid - 1);
    const Vec4 r = ricci(curvature_at(m, x));
    for (double v : r) {
      const double res = std::abs(v - out.lambda) / scale;
      if (res > out.max_residual) out.max_residual = res, out.worst_x = x;
    }
  }
  return out;
}

}  // namespace pagecurv
