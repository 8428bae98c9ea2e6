#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

#include "pagecurv/conventions.hpp"
#include "pagecurv/interval.hpp"
#include "pagecurv/page.hpp"
#include "pagecurv/profile_expr.hpp"

namespace pagecurv {

// Interval proof that a quantity has a fixed sign on a window of x.
struct SignCertificate {
  std::string quantity;
  Interval window;
  Interval bound;
  Sign verdict = Sign::Inconclusive;
  int depth = 0;                 // bisection depth of the window
  std::int64_t evaluations = 0;  // enclosures computed during the search

  // verdict Negative => bound.hi < 0, verdict Positive => bound.lo > 0.
  [[nodiscard]] bool consistent() const {
    if (verdict == Sign::Negative) return bound.hi() < 0.0;
    if (verdict == Sign::Positive) return bound.lo() > 0.0;
    return true;
  }

  friend bool operator==(const SignCertificate&, const SignCertificate&) = default;
};

// Maps a window in x to an enclosure of the quantity over that window.
using EnclosureFn = std::function<Interval(const Interval&)>;

// Breadth-first bisection of domain, left to right within each level.
// Returns the first window whose enclosure certifies the target sign, or an
// Inconclusive certificate over the whole domain once every window down to
// max_depth has been tried. Windows are never replaced by point samples.
[[nodiscard]] inline SignCertificate certify_sign(std::string quantity,
                                                  const EnclosureFn& enclose,
                                                  const Interval& domain,
                                                  Sign target, int max_depth) {
  if (target == Sign::Inconclusive) {
    throw std::invalid_argument("certify_sign: target must be a definite sign");
  }
  if (max_depth < 0) throw std::invalid_argument("certify_sign: max_depth >= 0");
  if (!domain.is_bounded()) throw std::invalid_argument("certify_sign: unbounded domain");

  SignCertificate cert;
  cert.quantity = std::move(quantity);
  std::deque<std::pair<Interval, int>> queue;
  queue.emplace_back(domain, 0);
  while (!queue.empty()) {
    const auto [window, depth] = queue.front();
    queue.pop_front();
    const Interval bound = enclose(window);
    ++cert.evaluations;
    if (int_sign(bound) == target) {
      cert.window = window;
      cert.bound = bound;
      cert.verdict = target;
      cert.depth = depth;
      return cert;
    }
    if (depth < max_depth) {
      const double mid = window.mid();
      if (mid > window.lo() && mid < window.hi()) {
        queue.emplace_back(Interval(window.lo(), mid), depth + 1);
        queue.emplace_back(Interval(mid, window.hi()), depth + 1);
      }
    }
  }
  cert.window = domain;
  cert.bound = enclose(domain);
  cert.verdict = Sign::Inconclusive;
  cert.depth = max_depth;
  return cert;
}

enum class Derivative { Value, First, Second };

[[nodiscard]] inline SignCertificate certify_sign(const ProfileExpr& expr,
                                                  const Interval& domain,
                                                  Sign target, int max_depth,
                                                  Derivative which = Derivative::Value,
                                                  std::string quantity = "expr") {
  EnclosureFn fn = [&expr, which](const Interval& w) {
    if (which == Derivative::Value) return expr.enclose(w);
    const Jet2<Interval> j = expr.jet_enclose(w);
    return which == Derivative::First ? j.d1 : j.d2;
  };
  return certify_sign(std::move(quantity), fn, domain, target, max_depth);
}

// ============================================================================
// Page metric claims
// ============================================================================

enum class PageClaim { FPrimePositive, K01Negative };

inline constexpr int kDefaultCertifyDepth = 20;

// Search window [0, 1 - margin] for both claims.
[[nodiscard]] inline Interval page_claim_domain() {
  return Interval(0.0, 1.0 - kDomainMargin);
}

[[nodiscard]] inline SignCertificate certify_page_claim(
    const PageParams& p, PageClaim claim, int max_depth = kDefaultCertifyDepth,
    const Interval& domain = page_claim_domain()) {
  const PageProfiles pr = page_profiles(p);
  if (claim == PageClaim::FPrimePositive) {
    return certify_sign("F'", [&pr](const Interval& w) { return enclose_fprime(pr, w); },
                        domain, Sign::Positive, max_depth);
  }
  return certify_sign("K01", [&pr](const Interval& w) { return enclose_k01(pr, w); },
                      domain, Sign::Negative, max_depth);
}

}  // namespace pagecurv
