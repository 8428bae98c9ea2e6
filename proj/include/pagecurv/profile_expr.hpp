#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

#include "pagecurv/interval.hpp"
#include "pagecurv/jet.hpp"

namespace pagecurv {

namespace detail {

// Integer power by repeated multiplication. Shared by the real and jet
// backends so that the jet value component reproduces the real evaluation
// bit for bit.
template <class T>
T powi_repeated(const T& base, int n) {
  if (n == 0) return T(1.0);
  if (n < 0) return T(1.0) / powi_repeated(base, -n);
  T r = base;
  for (int i = 1; i < n; ++i) r = r * base;
  return r;
}

// sqrt(0) is fine for plain values; only its derivative needs a > 0.
inline double backend_sqrt(double a) {
  if (!(a >= 0.0)) throw DomainError("sqrt of negative value");
  return std::sqrt(a);
}
inline Interval backend_sqrt(const Interval& a) { return sqrt(a); }
template <class T>
Jet2<T> backend_sqrt(const Jet2<T>& a) {
  return jet_sqrt(a);
}

inline double backend_div(double a, double b) {
  require_nonzero(b, "division by zero");
  return a / b;
}
inline Interval backend_div(const Interval& a, const Interval& b) {
  return a / b;
}
template <class T>
Jet2<T> backend_div(const Jet2<T>& a, const Jet2<T>& b) {
  return jet_div(a, b);
}

inline double backend_powi(double a, int n) {
  if (n < 0) require_nonzero(a, "negative power of zero");
  return powi_repeated(a, n);
}
inline Interval backend_powi(const Interval& a, int n) { return powi(a, n); }
template <class T>
Jet2<T> backend_powi(const Jet2<T>& a, int n) {
  if (n < 0) require_nonzero(a.v, "negative power of zero");
  return powi_repeated(a, n);
}

// Lifts a stored constant (best real value plus enclosure) into a backend.
template <class T>
struct ConstantLift;

template <>
struct ConstantLift<double> {
  static double make(double best, const Interval&) { return best; }
};
template <>
struct ConstantLift<Interval> {
  static Interval make(double, const Interval& enclosure) { return enclosure; }
};
template <class T>
struct ConstantLift<Jet2<T>> {
  static Jet2<T> make(double best, const Interval& enclosure) {
    return Jet2<T>::constant(ConstantLift<T>::make(best, enclosure));
  }
};

}  // namespace detail

// Expression tree for a profile function of one variable x.
//
// One definition evaluates under every backend: double, Interval,
// Jet2<double> and Jet2<Interval>. Constants carry both a best real value
// and an enclosure; the real and jet backends use the former, interval
// backends the latter. Trees are immutable and share subexpressions.
class ProfileExpr {
 public:
  enum class Op { Constant, Variable, Add, Sub, Mul, Div, Sqrt, PowI, Neg };

  ProfileExpr() : ProfileExpr(constant(0.0)) {}

  static ProfileExpr variable() {
    auto n = std::make_shared<Node>();
    n->op = Op::Variable;
    return ProfileExpr(std::move(n));
  }

  static ProfileExpr constant(double c) { return constant(c, Interval(c)); }

  static ProfileExpr constant(double best, const Interval& enclosure) {
    if (!enclosure.contains(best)) {
      throw std::invalid_argument("constant: best value outside enclosure");
    }
    auto n = std::make_shared<Node>();
    n->op = Op::Constant;
    n->value = best;
    n->enclosure = enclosure;
    return ProfileExpr(std::move(n));
  }

  [[nodiscard]] Op op() const { return node_->op; }

  template <class T>
  [[nodiscard]] T eval(const T& x) const {
    return eval_node<T>(*node_, x);
  }

  [[nodiscard]] double operator()(double x) const { return eval<double>(x); }

  [[nodiscard]] Jet2<double> jet(double x) const {
    return eval<Jet2<double>>(Jet2<double>::variable(x));
  }

  [[nodiscard]] Interval enclose(const Interval& x) const {
    return eval<Interval>(x);
  }

  // Enclosure of value and derivatives over the window x.
  [[nodiscard]] Jet2<Interval> jet_enclose(const Interval& x) const {
    return eval<Jet2<Interval>>(Jet2<Interval>::variable(x));
  }

  friend ProfileExpr operator+(const ProfileExpr& a, const ProfileExpr& b) {
    return binary(Op::Add, a, b);
  }
  friend ProfileExpr operator-(const ProfileExpr& a, const ProfileExpr& b) {
    return binary(Op::Sub, a, b);
  }
  friend ProfileExpr operator*(const ProfileExpr& a, const ProfileExpr& b) {
    return binary(Op::Mul, a, b);
  }
  friend ProfileExpr operator/(const ProfileExpr& a, const ProfileExpr& b) {
    return binary(Op::Div, a, b);
  }
  friend ProfileExpr operator-(const ProfileExpr& a) {
    return unary(Op::Neg, a);
  }
  friend ProfileExpr operator+(const ProfileExpr& a, double b) {
    return a + constant(b);
  }
  friend ProfileExpr operator+(double a, const ProfileExpr& b) {
    return constant(a) + b;
  }
  friend ProfileExpr operator-(const ProfileExpr& a, double b) {
    return a - constant(b);
  }
  friend ProfileExpr operator-(double a, const ProfileExpr& b) {
    return constant(a) - b;
  }
  friend ProfileExpr operator*(const ProfileExpr& a, double b) {
    return a * constant(b);
  }
  friend ProfileExpr operator*(double a, const ProfileExpr& b) {
    return constant(a) * b;
  }
  friend ProfileExpr operator/(const ProfileExpr& a, double b) {
    return a / constant(b);
  }
  friend ProfileExpr operator/(double a, const ProfileExpr& b) {
    return constant(a) / b;
  }
  friend ProfileExpr sqrt(const ProfileExpr& a) { return unary(Op::Sqrt, a); }
  friend ProfileExpr powi(const ProfileExpr& a, int n) {
    return unary(Op::PowI, a, n);
  }

 private:
  struct Node {
    Op op = Op::Constant;
    int exponent = 0;
    double value = 0.0;
    Interval enclosure;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };

  explicit ProfileExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static ProfileExpr binary(Op op, const ProfileExpr& a, const ProfileExpr& b) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = a.node_;
    n->rhs = b.node_;
    return ProfileExpr(std::move(n));
  }

  static ProfileExpr unary(Op op, const ProfileExpr& a, int exponent = 0) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->exponent = exponent;
    n->lhs = a.node_;
    return ProfileExpr(std::move(n));
  }

  template <class T>
  static T eval_node(const Node& n, const T& x) {
    switch (n.op) {
      case Op::Constant:
        return detail::ConstantLift<T>::make(n.value, n.enclosure);
      case Op::Variable:
        return x;
      case Op::Add:
        return eval_node<T>(*n.lhs, x) + eval_node<T>(*n.rhs, x);
      case Op::Sub:
        return eval_node<T>(*n.lhs, x) - eval_node<T>(*n.rhs, x);
      case Op::Mul:
        return eval_node<T>(*n.lhs, x) * eval_node<T>(*n.rhs, x);
      case Op::Div:
        return detail::backend_div(eval_node<T>(*n.lhs, x),
                                   eval_node<T>(*n.rhs, x));
      case Op::Sqrt:
        return detail::backend_sqrt(eval_node<T>(*n.lhs, x));
      case Op::PowI:
        return detail::backend_powi(eval_node<T>(*n.lhs, x), n.exponent);
      case Op::Neg:
        return -eval_node<T>(*n.lhs, x);
    }
    throw std::logic_error("ProfileExpr: corrupt node");
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace pagecurv
