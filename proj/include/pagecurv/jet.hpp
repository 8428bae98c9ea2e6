#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

#include "pagecurv/interval.hpp"

namespace pagecurv {

// Raised when a plain-real evaluation leaves the open domain of a profile.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Second-order jet: value, first and second derivative of a scalar function
// of one variable at a point. T is double for pointwise evaluation or
// Interval for enclosures of derivatives over a window.
template <class T>
struct Jet2 {
  T v{};
  T d1{};
  T d2{};

  static Jet2 constant(const T& c) { return {c, T(0.0), T(0.0)}; }
  static Jet2 variable(const T& x) { return {x, T(1.0), T(0.0)}; }
};

namespace detail {

inline void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw DomainError(what);
}
inline void require_nonzero(double v, const char* what) {
  if (v == 0.0 || std::isnan(v)) throw DomainError(what);
}
// Interval arithmetic reports domain violations by returning the entire line.
inline void require_positive(const Interval&, const char*) {}
inline void require_nonzero(const Interval&, const char*) {}

}  // namespace detail

template <class T>
Jet2<T> operator+(const Jet2<T>& a, const Jet2<T>& b) {
  return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2};
}

template <class T>
Jet2<T> operator-(const Jet2<T>& a, const Jet2<T>& b) {
  return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2};
}

template <class T>
Jet2<T> operator-(const Jet2<T>& a) {
  return {-a.v, -a.d1, -a.d2};
}

template <class T>
Jet2<T> jet_mul(const Jet2<T>& a, const Jet2<T>& b) {
  return {a.v * b.v, a.d1 * b.v + a.v * b.d1,
          a.d2 * b.v + T(2.0) * a.d1 * b.d1 + a.v * b.d2};
}

template <class T>
Jet2<T> jet_div(const Jet2<T>& a, const Jet2<T>& b) {
  detail::require_nonzero(b.v, "jet division by zero");
  const T q = a.v / b.v;
  const T q1 = (a.d1 - q * b.d1) / b.v;
  const T q2 = (a.d2 - T(2.0) * q1 * b.d1 - q * b.d2) / b.v;
  return {q, q1, q2};
}

template <class T>
Jet2<T> jet_sqrt(const Jet2<T>& a) {
  using std::sqrt;
  detail::require_positive(a.v, "jet sqrt of non-positive value");
  const T r = sqrt(a.v);
  const T r1 = a.d1 / (T(2.0) * r);
  const T r2 = (a.d2 - T(2.0) * r1 * r1) / (T(2.0) * r);
  return {r, r1, r2};
}

template <class T>
Jet2<T> operator*(const Jet2<T>& a, const Jet2<T>& b) {
  return jet_mul(a, b);
}

template <class T>
Jet2<T> operator/(const Jet2<T>& a, const Jet2<T>& b) {
  return jet_div(a, b);
}

template <class T>
Jet2<T> sqrt(const Jet2<T>& a) {
  return jet_sqrt(a);
}

template <class T>
std::ostream& operator<<(std::ostream& os, const Jet2<T>& j) {
  return os << '(' << j.v << ", " << j.d1 << ", " << j.d2 << ')';
}

}  // namespace pagecurv
