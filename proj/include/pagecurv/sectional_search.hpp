#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "pagecurv/curvature.hpp"
#include "pagecurv/sym3_eigen.hpp"
#include "pagecurv/weyl.hpp"

namespace pagecurv {

// ============================================================================
// Plane parameterization by Givens angles
// ============================================================================

// Plane spanned by (Q e0, Q e1) where Q is the product of Givens rotations in
// the coordinate planes (0,1), (0,2), (0,3), (1,2), (1,3), (2,3).
using GivensAngles = std::array<double, 6>;

namespace detail {

inline constexpr int kGivensAxes[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                          {1, 2}, {1, 3}, {2, 3}};

inline void apply_givens(Vec4& v, int i, int j, double c, double s) {
  const double vi = v[i], vj = v[j];
  v[i] = c * vi - s * vj;
  v[j] = s * vi + c * vj;
}

inline std::pair<Vec4, Vec4> givens_frame(const GivensAngles& theta) {
  Vec4 u{1.0, 0.0, 0.0, 0.0};
  Vec4 v{0.0, 1.0, 0.0, 0.0};
  for (int r = 5; r >= 0; --r) {
    const double c = std::cos(theta[r]);
    const double s = std::sin(theta[r]);
    apply_givens(u, kGivensAxes[r][0], kGivensAxes[r][1], c, s);
    apply_givens(v, kGivensAxes[r][0], kGivensAxes[r][1], c, s);
  }
  return {u, v};
}

inline double sectional_at_angles(const CurvatureOperator& R,
                                  const GivensAngles& theta) {
  const auto [u, v] = givens_frame(theta);
  return sectional_of_bivector(R, wedge(u, v));
}

// Golden-section minimum of f on [a, b]; returns (argmin, min).
template <class F>
std::pair<double, double> golden_section(F&& f, double a, double b,
                                         double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

inline CurvatureOperator negated(const CurvatureOperator& R) {
  CurvatureOperator n = R;
  for (auto& row : n.m)
    for (double& v : row) v = -v;
  return n;
}

}  // namespace detail

[[nodiscard]] inline TwoPlane plane_from_angles(const GivensAngles& theta) {
  const auto [u, v] = detail::givens_frame(theta);
  return TwoPlane::from_span(u, v);
}

struct SectionalExtremum {
  double k = 0.0;
  TwoPlane plane = TwoPlane::basis(0, 1);
};

struct SectionalSearchOptions {
  int starts = 32;
  std::uint64_t seed = 0x5eed'2c0f'fee5'0001ULL;
  int max_sweeps = 200;
  int bracket_samples = 16;
  double angle_tol = 1e-10;
};

// Minimum sectional curvature over the Grassmannian of 2-planes.
//
// Multi-start coordinate descent on the six Givens angles: each coordinate
// is bracketed by a uniform sample of its full period and refined by golden
// section. The first start is the basis plane (e0, e1); the rest come from a
// fixed-seed generator, so the result is deterministic.
[[nodiscard]] inline SectionalExtremum min_sectional_at(
    const CurvatureOperator& R, const SectionalSearchOptions& opt = {}) {
  if (opt.starts < 1) throw std::invalid_argument("min_sectional_at: starts >= 1");
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  const double step = 2.0 * std::numbers::pi / opt.bracket_samples;

  GivensAngles best_theta{};
  double best = std::numeric_limits<double>::infinity();
  for (int start = 0; start < opt.starts; ++start) {
    GivensAngles theta{};
    if (start > 0) {
      for (double& t : theta) t = angle(rng);
    }
    double current = detail::sectional_at_angles(R, theta);
    for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
      const double before = current;
      for (int i = 0; i < 6; ++i) {
        auto along = [&](double t) {
          GivensAngles trial = theta;
          trial[i] = t;
          return detail::sectional_at_angles(R, trial);
        };
        double centre = theta[i];
        double centre_value = current;
        for (int k = 1; k < opt.bracket_samples; ++k) {
          const double t = theta[i] + k * step;
          const double v = along(t);
          if (v < centre_value) centre = t, centre_value = v;
        }
        const auto [t_star, v_star] =
            detail::golden_section(along, centre - step, centre + step, opt.angle_tol);
        if (v_star < centre_value) centre = t_star, centre_value = v_star;
        if (centre_value < current) {
          theta[i] = std::remainder(centre, 2.0 * std::numbers::pi);
          current = centre_value;
        }
      }
      if (before - current <= 1e-15 * std::max(1.0, std::abs(current))) break;
    }
    if (current < best) best = current, best_theta = theta;
  }
  return {best, plane_from_angles(best_theta)};
}

[[nodiscard]] inline SectionalExtremum max_sectional_at(
    const CurvatureOperator& R, const SectionalSearchOptions& opt = {}) {
  SectionalExtremum e = min_sectional_at(detail::negated(R), opt);
  e.k = -e.k;
  return e;
}

// ============================================================================
// Brute-force grid oracle
// ============================================================================

namespace detail {

// min over unit beta of beta^T C beta + 2 b^T beta, given the eigensystem of C.
// Uses the concave dual  max_{mu <= lambda_min}  mu - sum c_i^2 / (lambda_i - mu)
// with c = V^T b; its maximizer is the root of the decreasing derivative,
// bracketed in [lambda_min - |b|, lambda_min].
inline double sphere_quadratic_min(const SymEigen3& eig, const Vec3& b) {
  Vec3 c{};
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) c[j] += eig.vectors[k][j] * b[k];
  const double nb = std::sqrt(dot3(b, b));
  const double lmin = eig.values[0];
  if (nb == 0.0) return lmin;
  auto slope = [&](double mu) {
    double s = 1.0;
    for (int j = 0; j < 3; ++j) {
      if (c[j] == 0.0) continue;
      const double t = c[j] / (eig.values[j] - mu);
      s -= t * t;
    }
    return s;
  };
  // Keep lo strictly below lmin even when |b| is under half an ulp of it.
  double lo = std::min(lmin - nb, std::nextafter(lmin, -std::numeric_limits<double>::infinity()));
  double hi = lmin;
  for (int it = 0; it < 200; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (slope(mid) > 0.0) lo = mid; else hi = mid;
  }
  double value = lo;
  for (int j = 0; j < 3; ++j) {
    if (c[j] == 0.0) continue;
    value -= c[j] * c[j] / (eig.values[j] - lo);
  }
  return value;
}

}  // namespace detail

// Minimum sectional curvature by exhaustive search.
//
// A unit decomposable 2-form is (alpha + beta)/sqrt(2) with alpha, beta unit
// vectors of Lambda^+ and Lambda^-, so the Grassmannian is S^2 x S^2 (mod
// sign) and
//   K = (a^T R+ a + 2 a^T X b + b^T R- b) / 2.
// alpha runs over the latitude-longitude grid theta = pi i / n,
// phi = 2 pi j / n; for each alpha the minimum over beta is solved exactly.
// Grids for n and 2n are nested, so doubling the resolution never increases
// the result.
[[nodiscard]] inline double min_sectional_grid(const CurvatureOperator& R,
                                               int resolution) {
  if (resolution < 8) throw std::invalid_argument("min_sectional_grid: resolution >= 8");
  const SelfDualSplit split = self_dual_split(R);
  const SymEigen3 eig_minus = eigen_sym3_jacobi(split.minus);
  double best = std::numeric_limits<double>::infinity();
  const int n = resolution;
  for (int i = 0; i <= n; ++i) {
    const double theta = std::numbers::pi * i / n;
    const int nphi = (i == 0 || i == n) ? 1 : n;
    for (int j = 0; j < nphi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n;
      const Vec3 alpha = {std::sin(theta) * std::cos(phi),
                          std::sin(theta) * std::sin(phi), std::cos(theta)};
      Vec3 b{};
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) b[k] += split.cross[l][k] * alpha[l];
      const double plus = detail::dot3(alpha, detail::mul3(split.plus, alpha));
      const double k_alpha =
          0.5 * (plus + detail::sphere_quadratic_min(eig_minus, b));
      best = std::min(best, k_alpha);
    }
  }
  return best;
}

[[nodiscard]] inline double max_sectional_grid(const CurvatureOperator& R,
                                               int resolution) {
  return -min_sectional_grid(detail::negated(R), resolution);
}

}  // namespace pagecurv
