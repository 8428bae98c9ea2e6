#pragma once

#include <cmath>
#include <stdexcept>

#include "pagecurv/interval.hpp"
#include "pagecurv/jet.hpp"
#include "pagecurv/metric.hpp"
#include "pagecurv/profile_expr.hpp"

namespace pagecurv {

// x^4 + 4x^3 - 6x^2 + 12x - 3 in Horner form. Works for double, Interval and
// jets.
template <class T>
T quartic_f(const T& x) {
  return (((x + T(4.0)) * x - T(6.0)) * x + T(12.0)) * x - T(3.0);
}

class RootCertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Certified enclosure of the positive root of quartic_f.
//
// Illinois (bracketing secant) iteration on [0, 1] where each probe is
// accepted only when the interval evaluation of the quartic at the probe has
// a certified sign. The returned endpoints therefore carry a proven sign
// change: f(lo) < 0 < f(hi). A step that fails to halve the bracket is
// followed by a bisection step, and an inconclusive probe (within rounding
// distance of the root) falls back to the midpoint and then the quarter
// points.
[[nodiscard]] inline Interval find_root_a(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_root_a: tol must be > 0");
  double lo = 0.0, hi = 1.0;
  if (int_sign(quartic_f(Interval(lo))) != Sign::Negative ||
      int_sign(quartic_f(Interval(hi))) != Sign::Positive) {
    throw RootCertificationError("quartic has no certified sign change on [0,1]");
  }
  double f_lo = quartic_f(lo), f_hi = quartic_f(hi);
  int last_side = 0;
  // Returns false when the sign at x is not certified.
  auto probe = [&](double x) {
    const Sign s = int_sign(quartic_f(Interval(x)));
    if (s == Sign::Inconclusive) return false;
    const double fx = quartic_f(x);
    if (s == Sign::Negative) {
      lo = x, f_lo = fx;
      if (last_side == -1) f_hi *= 0.5;
      last_side = -1;
    } else {
      hi = x, f_hi = fx;
      if (last_side == 1) f_lo *= 0.5;
      last_side = 1;
    }
    return true;
  };
  constexpr int kMaxSteps = 256;
  bool bisect_next = false;
  for (int step = 0; step < kMaxSteps && hi - lo > tol; ++step) {
    const double w = hi - lo;
    double x = lo + 0.5 * w;
    if (!bisect_next) {
      const double secant = lo - f_lo * w / (f_hi - f_lo);
      if (secant > lo && secant < hi) x = secant;
    }
    if (probe(x)) {
      bisect_next = !bisect_next && hi - lo > 0.5 * w;
      continue;
    }
    bisect_next = false;
    if (x != lo + 0.5 * w && probe(lo + 0.5 * w)) continue;
    const bool left = probe(lo + 0.25 * w);
    const bool right = probe(hi - 0.25 * w);
    if (!left && !right) break;
  }
  if (hi - lo > tol) {
    throw RootCertificationError("root enclosure cannot reach requested width");
  }
  return Interval(lo, hi);
}

// The Page parameter a (positive root of the quartic) and the derived
// constants A = 2a / sqrt(3 + 6a^2 - a^4) and D = 2 / (3 + a^2).
struct PageParams {
  double a = 0.0;
  Interval a_enclosure;
  double A = 0.0;
  double D = 0.0;

  // Throws std::invalid_argument when 0 < a < 1 fails or the enclosure does
  // not carry a certified sign change.
  void validate() const {
    if (!(a > 0.0 && a < 1.0)) {
      throw std::invalid_argument("PageParams: need 0 < a < 1");
    }
    if (!a_enclosure.contains(a)) {
      throw std::invalid_argument("PageParams: a outside its enclosure");
    }
    if (int_sign(quartic_f(Interval(a_enclosure.lo()))) != Sign::Negative ||
        int_sign(quartic_f(Interval(a_enclosure.hi()))) != Sign::Positive) {
      throw std::invalid_argument("PageParams: enclosure has no sign change");
    }
  }
};

[[nodiscard]] inline PageParams make_page_params(double tol = 1e-14) {
  PageParams p;
  p.a_enclosure = find_root_a(tol);
  p.a = p.a_enclosure.mid();
  const double a2 = p.a * p.a;
  p.A = 2.0 * p.a / std::sqrt(3.0 + 6.0 * a2 - a2 * a2);
  p.D = 2.0 / (3.0 + a2);
  p.validate();
  return p;
}

// Closed-form Page profiles as expression trees. The parameter a enters as a
// constant carrying its certified enclosure, so interval evaluation of any
// of these trees accounts for the uncertainty in a.
struct PageProfiles {
  ProfileExpr a;
  ProfileExpr A;
  ProfileExpr D;
  ProfileExpr W;
  ProfileExpr g;
  ProfileExpr F;
};

[[nodiscard]] inline PageProfiles page_profiles(const PageParams& p) {
  const ProfileExpr x = ProfileExpr::variable();
  PageProfiles r;
  r.a = ProfileExpr::constant(p.a, p.a_enclosure);
  const ProfileExpr a2 = r.a * r.a;
  const ProfileExpr one_minus_x2 = (1.0 - x) * (1.0 + x);
  const ProfileExpr one_minus_a2x2 = 1.0 - a2 * x * x;
  const ProfileExpr cubic_factor = 3.0 - a2 - a2 * (1.0 + a2) * x * x;
  r.A = 2.0 * r.a / sqrt(3.0 + 6.0 * a2 - a2 * a2);
  r.D = 2.0 / (3.0 + a2);
  r.W = sqrt(one_minus_a2x2 / (cubic_factor * one_minus_x2));
  r.g = 2.0 / sqrt(3.0 + 6.0 * a2 - a2 * a2) * sqrt(one_minus_a2x2);
  // F = g'/W in closed form. Differentiating g gives the prefactor A*a.
  r.F = -(r.A * r.a) * x * sqrt(cubic_factor * one_minus_x2) / one_minus_a2x2;
  return r;
}

// f0 = W, f1 = f2 = g, f3 = D / (2W) on x in (-1, 1).
[[nodiscard]] inline DiagonalMetric page_metric(const PageParams& p) {
  const PageProfiles pr = page_profiles(p);
  DiagonalMetric m;
  m.name = "page";
  m.f = {pr.W, pr.g, pr.g, pr.D / (2.0 * pr.W)};
  m.domain = {-1.0, 1.0};
  m.orbit_volume = kOrbitVolume;
  return m;
}

[[nodiscard]] inline ProfileExpr closed_form_F(const PageParams& p) {
  return page_profiles(p).F;
}

namespace detail {

inline void require_page_domain(double x) {
  if (!(x > -1.0 && x < 1.0)) {
    throw DomainError("Page profiles are defined on (-1, 1) only");
  }
}

}  // namespace detail

// K01 = -2 F' / (g W), with F' taken from the jet of the closed-form F.
[[nodiscard]] inline double closed_form_k01(const PageParams& p, double x) {
  detail::require_page_domain(x);
  const PageProfiles pr = page_profiles(p);
  const Jet2<double> F = pr.F.jet(x);
  return -2.0 * F.d1 / (pr.g(x) * pr.W(x));
}

// K01 = 2 (g'W' - g''W) / (g W^3), the same quantity written through g and W.
[[nodiscard]] inline double closed_form_k01_from_profiles(const PageParams& p,
                                                    double x) {
  detail::require_page_domain(x);
  const PageProfiles pr = page_profiles(p);
  const Jet2<double> g = pr.g.jet(x);
  const Jet2<double> W = pr.W.jet(x);
  return 2.0 * (g.d1 * W.d1 - g.d2 * W.v) / (g.v * W.v * W.v * W.v);
}

// Enclosures over a window, for sign certificates.
[[nodiscard]] inline Interval enclose_fprime(const PageProfiles& pr,
                                             const Interval& window) {
  return pr.F.jet_enclose(window).d1;
}

[[nodiscard]] inline Interval enclose_k01(const PageProfiles& pr,
                                          const Interval& window) {
  const Jet2<Interval> F = pr.F.jet_enclose(window);
  const Interval g = pr.g.enclose(window);
  const Interval W = pr.W.enclose(window);
  return Interval(-2.0) * F.d1 / (g * W);
}

}  // namespace pagecurv
