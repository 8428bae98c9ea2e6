#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>

#include "pagecurv/conventions.hpp"
#include "pagecurv/jet.hpp"
#include "pagecurv/metric.hpp"

namespace pagecurv {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Mat6 = std::array<std::array<double, 6>, 6>;

// ============================================================================
// 2-form basis {e0^e1, e0^e2, e0^e3, e2^e3, e3^e1, e1^e2}
// ============================================================================

struct PairSlot {
  int index = -1;  // -1 when a == b
  double sign = 0.0;
};

[[nodiscard]] constexpr PairSlot pair_slot(int a, int b) {
  constexpr int table[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 5, 4}, {1, 5, -1, 3}, {2, 4, 3, -1}};
  constexpr double sign[4][4] = {{0, 1, 1, 1},
                                 {-1, 0, 1, -1},
                                 {-1, -1, 0, 1},
                                 {-1, 1, -1, 0}};
  return {table[a][b], sign[a][b]};
}

// Components of u ^ v in the pair basis.
[[nodiscard]] inline std::array<double, 6> wedge(const Vec4& u, const Vec4& v) {
  auto w = [&](int a, int b) { return u[a] * v[b] - u[b] * v[a]; };
  return {w(0, 1), w(0, 2), w(0, 3), w(2, 3), w(3, 1), w(1, 2)};
}

// ============================================================================
// Riemann tensor R_abcd = <R(E_a, E_b) E_c, E_d> in the orthonormal frame
// ============================================================================

struct RiemannTensor {
  std::array<double, 256> r{};

  [[nodiscard]] double operator()(int a, int b, int c, int d) const {
    return r[((a * 4 + b) * 4 + c) * 4 + d];
  }
  double& at(int a, int b, int c, int d) { return r[((a * 4 + b) * 4 + c) * 4 + d]; }

  // max |R_abcd + R_bcad + R_cabd| over all index combinations.
  [[nodiscard]] double first_bianchi_residual() const {
    double worst = 0.0;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            const double s = (*this)(a, b, c, d) + (*this)(b, c, a, d) +
                             (*this)(c, a, b, d);
            worst = std::max(worst, std::abs(s));
          }
    return worst;
  }

  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (double v : r) m = std::max(m, std::abs(v));
    return m;
  }
};

// Full curvature tensor of a diagonal cohomogeneity-one metric at a frame
// point.
//
// Frame fields E0 = (1/f0) d/dx, Ei = (1/fi) X_i with [X_i, X_j] = c X_k
// (cyclic) have brackets
//   [E0, Ei] = -(fi' / (f0 fi)) Ei,   [Ei, Ej] = c (fk / (fi fj)) Ek.
// The Levi-Civita coefficients G_abc = <nabla_Ea Eb, Ec> follow from the
// Koszul formula, G_abc = (C_abc - C_bca + C_cab) / 2, and
//   R(Ea,Eb)Ec = Ea(G_bc.) - Eb(G_ac.) + G_bcd G_ad. - G_acd G_bd.
//                - C_abd G_dc.
// All coefficients depend on x only, so Ea acts as (1/f0) d/dx for a = 0
// and annihilates them otherwise. The x-derivatives are exact: they come
// from the second-order jets of the profiles.
[[nodiscard]] inline RiemannTensor riemann_at(
    const FramePoint& p, double structure_constant = kStructureConstant) {
  using J = Jet2<double>;
  const J f0 = p.f[0];
  // Bracket structure functions as jets in x. Only value and first derivative
  // are used; the second derivative slot would need f'''.
  std::array<std::array<std::array<J, 4>, 4>, 4> C{};
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (int i = 1; i < 4; ++i) {
    const J fi = p.f[i];
    const J dfi{fi.d1, fi.d2, nan};
    const J rate = dfi / (f0 * fi);
    C[0][i][i] = -rate;
    C[i][0][i] = rate;
  }
  const J c = J::constant(structure_constant);
  constexpr int cyc[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  for (const auto& t : cyc) {
    const int i = t[0], j = t[1], k = t[2];
    const J q = c * p.f[k] / (p.f[i] * p.f[j]);
    C[i][j][k] = q;
    C[j][i][k] = -q;
  }

  std::array<std::array<std::array<J, 4>, 4>, 4> G{};
  const J half = J::constant(0.5);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int e = 0; e < 4; ++e)
        G[a][b][e] = half * (C[a][b][e] - C[b][e][a] + C[e][a][b]);

  const double inv_f0 = 1.0 / f0.v;
  auto frame_derivative = [&](int a, const J& q) {
    return a == 0 ? q.d1 * inv_f0 : 0.0;
  };

  RiemannTensor R;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int cc = 0; cc < 4; ++cc)
        for (int e = 0; e < 4; ++e) {
          double v = frame_derivative(a, G[b][cc][e]) -
                     frame_derivative(b, G[a][cc][e]);
          for (int d = 0; d < 4; ++d) {
            v += G[b][cc][d].v * G[a][d][e].v - G[a][cc][d].v * G[b][d][e].v -
                 C[a][b][d].v * G[d][cc][e].v;
          }
          R.at(a, b, cc, e) = v;
        }
  return R;
}

// ============================================================================
// Curvature operator on 2-forms
// ============================================================================

// Symmetric 6x6 matrix with entry (P, Q) = <R(E_a, E_b) E_d, E_c> for pairs
// P = (a, b), Q = (c, d); the diagonal holds the sectional curvatures of the
// coordinate planes.
struct CurvatureOperator {
  Mat6 m{};
  // Largest |M - M^T| entry before symmetrization (pair-symmetry check).
  double pair_asymmetry = 0.0;

  [[nodiscard]] double operator()(int p, int q) const { return m[p][q]; }

  // R_abcd = <R(E_a, E_b) E_c, E_d> read back from the matrix.
  [[nodiscard]] double tensor(int a, int b, int c, int d) const {
    const PairSlot p = pair_slot(a, b);
    const PairSlot q = pair_slot(d, c);
    if (p.index < 0 || q.index < 0) return 0.0;
    return p.sign * q.sign * m[p.index][q.index];
  }

  // R_0123 + R_0231 + R_0312, from the off-diagonal block.
  [[nodiscard]] double bianchi_residual() const {
    return tensor(0, 1, 2, 3) + tensor(0, 2, 3, 1) + tensor(0, 3, 1, 2);
  }
};

[[nodiscard]] inline CurvatureOperator curvature_operator(const RiemannTensor& R) {
  constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}};
  Mat6 raw{};
  for (int P = 0; P < 6; ++P)
    for (int Q = 0; Q < 6; ++Q)
      raw[P][Q] = R(pairs[P][0], pairs[P][1], pairs[Q][1], pairs[Q][0]);
  CurvatureOperator op;
  for (int P = 0; P < 6; ++P)
    for (int Q = 0; Q < 6; ++Q) {
      op.pair_asymmetry = std::max(op.pair_asymmetry, std::abs(raw[P][Q] - raw[Q][P]));
      op.m[P][Q] = 0.5 * (raw[P][Q] + raw[Q][P]);
    }
  return op;
}

[[nodiscard]] inline CurvatureOperator curvature_at(
    const DiagonalMetric& metric, double x,
    double structure_constant = kStructureConstant) {
  return curvature_operator(riemann_at(metric.frame_at(x), structure_constant));
}

// ============================================================================
// Sectional, Ricci, scalar
// ============================================================================

// An orthonormal pair spanning a 2-plane.
class TwoPlane {
 public:
  static constexpr double kTolerance = 1e-12;

  // Requires |u| = |v| = 1 and <u, v> = 0 within kTolerance.
  TwoPlane(const Vec4& u, const Vec4& v) : u_(u), v_(v) {
    if (std::abs(norm2(u) - 1.0) > kTolerance ||
        std::abs(norm2(v) - 1.0) > kTolerance ||
        std::abs(dot(u, v)) > kTolerance) {
      throw std::invalid_argument("TwoPlane: vectors are not orthonormal");
    }
  }

  // Gram-Schmidt on an arbitrary spanning pair.
  static TwoPlane from_span(const Vec4& u, const Vec4& v) {
    const double nu = std::sqrt(norm2(u));
    if (nu < 1e-9) throw std::invalid_argument("TwoPlane: degenerate span");
    Vec4 e1{}, e2{};
    for (int i = 0; i < 4; ++i) e1[i] = u[i] / nu;
    const double proj = dot(e1, v);
    for (int i = 0; i < 4; ++i) e2[i] = v[i] - proj * e1[i];
    const double n2 = std::sqrt(norm2(e2));
    if (n2 < 1e-9) throw std::invalid_argument("TwoPlane: degenerate span");
    for (int i = 0; i < 4; ++i) e2[i] /= n2;
    return TwoPlane(e1, e2);
  }

  static TwoPlane basis(int a, int b) {
    Vec4 u{}, v{};
    u[a] = 1.0;
    v[b] = 1.0;
    return TwoPlane(u, v);
  }

  [[nodiscard]] const Vec4& u() const { return u_; }
  [[nodiscard]] const Vec4& v() const { return v_; }

  static double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
  }
  static double norm2(const Vec4& a) { return dot(a, a); }

 private:
  Vec4 u_;
  Vec4 v_;
};

// <R w, w> / |w|^2 for a 2-form w.
[[nodiscard]] inline double sectional_of_bivector(const CurvatureOperator& R,
                                                  const std::array<double, 6>& w) {
  double n2 = 0.0;
  for (double c : w) n2 += c * c;
  if (n2 < 1e-18) throw std::invalid_argument("sectional: degenerate plane");
  double q = 0.0;
  for (int P = 0; P < 6; ++P) {
    double row = 0.0;
    for (int Q = 0; Q < 6; ++Q) row += R.m[P][Q] * w[Q];
    q += w[P] * row;
  }
  return q / n2;
}

[[nodiscard]] inline double sectional(const CurvatureOperator& R, const TwoPlane& p) {
  return sectional_of_bivector(R, wedge(p.u(), p.v()));
}

// Ric_ac = sum_b R_{b a c b}.
[[nodiscard]] inline Mat4 ricci_matrix(const CurvatureOperator& R) {
  Mat4 ric{};
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c) {
      double s = 0.0;
      for (int b = 0; b < 4; ++b) s += R.tensor(b, a, c, b);
      ric[a][c] = s;
    }
  return ric;
}

// Frame-diagonal Ricci: Ric_aa = sum_b K(e_a, e_b).
[[nodiscard]] inline Vec4 ricci(const CurvatureOperator& R) {
  const Mat4 ric = ricci_matrix(R);
  return {ric[0][0], ric[1][1], ric[2][2], ric[3][3]};
}

[[nodiscard]] inline double scalar(const CurvatureOperator& R) {
  const Vec4 r = ricci(R);
  return r[0] + r[1] + r[2] + r[3];
}

[[nodiscard]] inline double max_off_diagonal_ricci(const CurvatureOperator& R) {
  const Mat4 ric = ricci_matrix(R);
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c)
      if (a != c) worst = std::max(worst, std::abs(ric[a][c]));
  return worst;
}

}  // namespace pagecurv
