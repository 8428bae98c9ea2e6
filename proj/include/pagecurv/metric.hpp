#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "pagecurv/conventions.hpp"
#include "pagecurv/jet.hpp"
#include "pagecurv/profile_expr.hpp"

namespace pagecurv {

struct OpenInterval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] bool contains(double x) const { return lo < x && x < hi; }
  [[nodiscard]] double mid() const { return lo + 0.5 * (hi - lo); }
  [[nodiscard]] double length() const { return hi - lo; }
};

// Values and derivatives of the four coframe scales at one radial point.
struct FramePoint {
  double x = 0.0;
  std::array<Jet2<double>, 4> f{};
};

// Cohomogeneity-one metric
//   ds^2 = f0^2 dx^2 + f1^2 sigma_1^2 + f2^2 sigma_2^2 + f3^2 sigma_3^2
// with orthonormal coframe e0 = f0 dx, ei = fi sigma_i.
struct DiagonalMetric {
  std::string name;
  std::array<ProfileExpr, 4> f;
  OpenInterval domain;
  double orbit_volume = kOrbitVolume;

  // Closed sampling range [lo + margin, hi - margin] used by scans.
  [[nodiscard]] std::pair<double, double> scan_range(
      double margin = kDomainMargin) const {
    return {domain.lo + margin, domain.hi - margin};
  }

  // Throws DomainError outside the open domain or where a scale is not
  // strictly positive.
  [[nodiscard]] FramePoint frame_at(double x) const {
    if (!domain.contains(x)) {
      throw DomainError("point outside the metric's open domain");
    }
    FramePoint p{x, {}};
    for (std::size_t i = 0; i < 4; ++i) {
      p.f[i] = f[i].jet(x);
      if (!(p.f[i].v > 0.0)) {
        throw DomainError("coframe scale is not positive");
      }
    }
    return p;
  }

  // Checks fi > 0 at n interior points (uniform, excluding the ends).
  [[nodiscard]] bool positive_on_sample(int n = 1000) const {
    for (int k = 1; k <= n; ++k) {
      const double x = domain.lo + domain.length() * k / (n + 1);
      for (const auto& fi : f) {
        double v = 0.0;
        try {
          v = fi(x);
        } catch (const DomainError&) {
          return false;
        }
        if (!(v > 0.0)) return false;
      }
    }
    return true;
  }
};

}  // namespace pagecurv
