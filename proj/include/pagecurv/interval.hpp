#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string_view>

namespace pagecurv {

// Closed interval [lo, hi] used as a rigorous enclosure of a real number.
//
// Every primitive operation computes its endpoints in round-to-nearest and
// then moves each endpoint one representable step outward. Round-to-nearest
// is off by at most half an ulp, so the widened result always contains the
// exact image. Containment is the contract; tightness is not.
//
// Operations that leave the real domain (sqrt of a negative number, division
// by an interval containing zero, inf - inf) return the entire real line
// instead of throwing. A sign test on such a result is Inconclusive, which is
// exactly what a certification loop wants to see before subdividing.
class Interval {
 public:
  constexpr Interval() = default;
  constexpr Interval(double x) : lo_(x), hi_(x) {}  // NOLINT: point promotion
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
      throw std::invalid_argument("Interval: require lo <= hi");
    }
  }

  static constexpr Interval entire() {
    Interval r;
    r.lo_ = -std::numeric_limits<double>::infinity();
    r.hi_ = std::numeric_limits<double>::infinity();
    return r;
  }

  [[nodiscard]] constexpr double lo() const { return lo_; }
  [[nodiscard]] constexpr double hi() const { return hi_; }
  [[nodiscard]] double mid() const {
    if (is_entire()) return 0.0;
    return lo_ + 0.5 * (hi_ - lo_);
  }
  [[nodiscard]] double width() const { return hi_ - lo_; }
  [[nodiscard]] bool is_bounded() const {
    return std::isfinite(lo_) && std::isfinite(hi_);
  }
  [[nodiscard]] bool is_entire() const {
    return lo_ == -std::numeric_limits<double>::infinity() &&
           hi_ == std::numeric_limits<double>::infinity();
  }
  [[nodiscard]] bool contains(double x) const { return lo_ <= x && x <= hi_; }
  [[nodiscard]] bool contains(const Interval& o) const {
    return lo_ <= o.lo_ && o.hi_ <= hi_;
  }
  [[nodiscard]] bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

  // Builds [lo, hi] from approximate endpoints, widened outward by one ulp.
  // Any NaN endpoint collapses the result to the entire line.
  static Interval widened(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi)) return entire();
    Interval r;
    r.lo_ = std::nextafter(lo, -std::numeric_limits<double>::infinity());
    r.hi_ = std::nextafter(hi, std::numeric_limits<double>::infinity());
    return r;
  }

 private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

namespace detail {

// Product with the interval-arithmetic convention 0 * inf = 0.
inline double ext_mul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

}  // namespace detail

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval::widened(a.lo() + b.lo(), a.hi() + b.hi());
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return Interval::widened(a.lo() - b.hi(), a.hi() - b.lo());
}

inline Interval operator-(const Interval& a) {
  // Negation is exact.
  return Interval(-a.hi(), -a.lo());
}

inline Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = detail::ext_mul(a.lo(), b.lo());
  const double p2 = detail::ext_mul(a.lo(), b.hi());
  const double p3 = detail::ext_mul(a.hi(), b.lo());
  const double p4 = detail::ext_mul(a.hi(), b.hi());
  return Interval::widened(std::min({p1, p2, p3, p4}),
                           std::max({p1, p2, p3, p4}));
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) return Interval::entire();
  const double q1 = a.lo() / b.lo();
  const double q2 = a.lo() / b.hi();
  const double q3 = a.hi() / b.lo();
  const double q4 = a.hi() / b.hi();
  return Interval::widened(std::min({q1, q2, q3, q4}),
                           std::max({q1, q2, q3, q4}));
}

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }
inline Interval& operator/=(Interval& a, const Interval& b) { return a = a / b; }

inline Interval sqrt(const Interval& a) {
  if (a.lo() < 0.0 || std::isnan(a.lo())) return Interval::entire();
  const double lo = std::nextafter(std::sqrt(a.lo()), 0.0);
  const double hi = std::nextafter(std::sqrt(a.hi()),
                                   std::numeric_limits<double>::infinity());
  return Interval(std::max(0.0, lo), hi);
}

// Integer power. Even powers use the magnitude range so that a sign-mixed
// base gives a non-negative result.
inline Interval powi(const Interval& a, int n) {
  if (n == 0) return Interval(1.0);
  if (n < 0) return Interval(1.0) / powi(a, -n);
  auto repeat = [n](Interval base) {
    Interval r = base;
    for (int i = 1; i < n; ++i) r = r * base;
    return r;
  };
  if (n % 2 == 0) {
    const double mag = std::max(std::abs(a.lo()), std::abs(a.hi()));
    const double mig = a.contains_zero()
                           ? 0.0
                           : std::min(std::abs(a.lo()), std::abs(a.hi()));
    const Interval lo = repeat(Interval(mig));
    const Interval hi = repeat(Interval(mag));
    return Interval(std::max(0.0, lo.lo()), hi.hi());
  }
  const Interval lo = repeat(Interval(a.lo()));
  const Interval hi = repeat(Interval(a.hi()));
  return Interval(lo.lo(), hi.hi());
}

inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
  return os << '[' << a.lo() << ", " << a.hi() << ']';
}

enum class Sign { Positive, Negative, Inconclusive };

[[nodiscard]] inline Sign int_sign(const Interval& a) {
  if (a.lo() > 0.0) return Sign::Positive;
  if (a.hi() < 0.0) return Sign::Negative;
  return Sign::Inconclusive;
}

[[nodiscard]] constexpr std::string_view to_string(Sign s) {
  switch (s) {
    case Sign::Positive:
      return "Positive";
    case Sign::Negative:
      return "Negative";
    case Sign::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

[[nodiscard]] inline Sign sign_from_string(std::string_view s) {
  if (s == "Positive") return Sign::Positive;
  if (s == "Negative") return Sign::Negative;
  if (s == "Inconclusive") return Sign::Inconclusive;
  throw std::invalid_argument("unknown sign label");
}

inline std::ostream& operator<<(std::ostream& os, Sign s) {
  return os << to_string(s);
}

}  // namespace pagecurv
