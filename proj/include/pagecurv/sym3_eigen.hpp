#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <utility>

namespace pagecurv {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

namespace detail {

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}
inline double dot3(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 mul3(const Mat3& A, const Vec3& v) {
  return {dot3(A[0], v), dot3(A[1], v), dot3(A[2], v)};
}

// Unit eigenvector for an eigenvalue lambda that is well separated from the
// other two: the largest cross product of two rows of (A - lambda I).
inline Vec3 isolated_eigenvector(const Mat3& A, double lambda) {
  Mat3 M = A;
  for (int i = 0; i < 3; ++i) M[i][i] -= lambda;
  const Vec3 c01 = cross(M[0], M[1]);
  const Vec3 c02 = cross(M[0], M[2]);
  const Vec3 c12 = cross(M[1], M[2]);
  const double n01 = dot3(c01, c01), n02 = dot3(c02, c02), n12 = dot3(c12, c12);
  Vec3 v = c01;
  double n = n01;
  if (n02 > n) v = c02, n = n02;
  if (n12 > n) v = c12, n = n12;
  if (n == 0.0) return {1.0, 0.0, 0.0};
  const double s = 1.0 / std::sqrt(n);
  return {v[0] * s, v[1] * s, v[2] * s};
}

// Two unit vectors completing v to an orthonormal basis.
inline std::pair<Vec3, Vec3> complement(const Vec3& v) {
  const Vec3 axis = std::abs(v[0]) < 0.6 ? Vec3{1.0, 0.0, 0.0}
                                           : Vec3{0.0, 1.0, 0.0};
  Vec3 u = cross(v, axis);
  const double nu = std::sqrt(dot3(u, u));
  for (double& c : u) c /= nu;
  return {u, cross(v, u)};
}

}  // namespace detail

// Eigenvalues of a symmetric 3x3 matrix, ascending.
//
// Trigonometric closed form of the depressed characteristic cubic. When two
// eigenvalues are close the arccos branch loses half the digits of their gap,
// so the guarded branch keeps only the well-separated eigenvalue from the
// cubic, deflates it with its eigenvector, and takes the remaining pair from
// the 2x2 restriction, whose gap formula is well conditioned. Pairs whose
// relative gap is below kDegenerateGap are reported as exactly equal.
inline constexpr double kDegenerateGap = 1e-12;

[[nodiscard]] inline Vec3 eigenvalues_sym3(const Mat3& A) {
  const double p1 = A[0][1] * A[0][1] + A[0][2] * A[0][2] + A[1][2] * A[1][2];
  Vec3 ev{};
  const double q = (A[0][0] + A[1][1] + A[2][2]) / 3.0;
  if (p1 == 0.0) {
    ev = {A[0][0], A[1][1], A[2][2]};
    std::sort(ev.begin(), ev.end());
  } else {
    const double d0 = A[0][0] - q, d1 = A[1][1] - q, d2 = A[2][2] - q;
    const double p2 = d0 * d0 + d1 * d1 + d2 * d2 + 2.0 * p1;
    const double p = std::sqrt(p2 / 6.0);
    const Mat3 B = {{{d0 / p, A[0][1] / p, A[0][2] / p},
                     {A[1][0] / p, d1 / p, A[1][2] / p},
                     {A[2][0] / p, A[2][1] / p, d2 / p}}};
    const double det = B[0][0] * (B[1][1] * B[2][2] - B[1][2] * B[2][1]) -
                       B[0][1] * (B[1][0] * B[2][2] - B[1][2] * B[2][0]) +
                       B[0][2] * (B[1][0] * B[2][1] - B[1][1] * B[2][0]);
    const double r = std::clamp(det / 2.0, -1.0, 1.0);
    const double phi = std::acos(r) / 3.0;
    const double hi = q + 2.0 * p * std::cos(phi);
    const double lo = q + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
    ev = {lo, 3.0 * q - hi - lo, hi};

    // |r| near 1 means a near-double eigenvalue.
    if (1.0 - std::abs(r) < 1e-6) {
      const double isolated = r > 0.0 ? hi : lo;
      const Vec3 v = detail::isolated_eigenvector(A, isolated);
      const auto [u1, u2] = detail::complement(v);
      const double m11 = detail::dot3(u1, detail::mul3(A, u1));
      const double m22 = detail::dot3(u2, detail::mul3(A, u2));
      const double m12 = detail::dot3(u1, detail::mul3(A, u2));
      const double centre = 0.5 * (m11 + m22);
      const double radius = std::hypot(0.5 * (m11 - m22), m12);
      ev = {centre - radius, centre + radius, isolated};
      std::sort(ev.begin(), ev.end());
    }
  }
  const double scale = std::max({std::abs(ev[0]), std::abs(ev[2]),
                                 ev[2] - ev[0]});
  for (int i = 0; i < 2; ++i) {
    if (ev[i + 1] - ev[i] <= kDegenerateGap * scale) {
      const double m = 0.5 * (ev[i] + ev[i + 1]);
      ev[i] = ev[i + 1] = m;
    }
  }
  return ev;
}

// Cyclic Jacobi rotations: eigenvalues (ascending) and matching orthonormal
// eigenvectors as columns of V. Slower than the closed form but returns
// vectors; also serves as an independent cross-check of it.
struct SymEigen3 {
  Vec3 values{};
  Mat3 vectors{};  // column j belongs to values[j]
};

[[nodiscard]] inline SymEigen3 eigen_sym3_jacobi(Mat3 A) {
  Mat3 V = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int sweep = 0; sweep < 64; ++sweep) {
    const double off = A[0][1] * A[0][1] + A[0][2] * A[0][2] + A[1][2] * A[1][2];
    if (off == 0.0) break;
    for (int p = 0; p < 2; ++p)
      for (int q = p + 1; q < 3; ++q) {
        if (A[p][q] == 0.0) continue;
        const double theta = (A[q][q] - A[p][p]) / (2.0 * A[p][q]);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 3; ++k) {
          const double akp = A[k][p], akq = A[k][q];
          A[k][p] = c * akp - s * akq;
          A[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 3; ++k) {
          const double apk = A[p][k], aqk = A[q][k];
          A[p][k] = c * apk - s * aqk;
          A[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < 3; ++k) {
          const double vkp = V[k][p], vkq = V[k][q];
          V[k][p] = c * vkp - s * vkq;
          V[k][q] = s * vkp + c * vkq;
        }
      }
  }
  std::array<int, 3> order = {0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return A[i][i] < A[j][j]; });
  SymEigen3 out;
  for (int j = 0; j < 3; ++j) {
    out.values[j] = A[order[j]][order[j]];
    for (int k = 0; k < 3; ++k) out.vectors[k][j] = V[k][order[j]];
  }
  return out;
}

}  // namespace pagecurv
