#pragma once

#include <functional>
#include <random>

#include "pagecurv/pagecurv.hpp"

namespace pagecurv::test {

inline constexpr int kTrials = 1000;

// Central differences with step h.
inline double fd1(const std::function<double(double)>& f, double x, double h = 1e-5) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}
inline double fd2(const std::function<double(double)>& f, double x, double h = 1e-5) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline const PageParams& page_params() {
  static const PageParams p = make_page_params();
  return p;
}

inline const std::vector<DiagonalMetric>& bundled() {
  static const std::vector<DiagonalMetric> m = {page_metric(page_params()), round_s4_metric(),
                                                fubini_study_metric()};
  return m;
}

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(20261015ULL + salt); }

}  // namespace pagecurv::test
