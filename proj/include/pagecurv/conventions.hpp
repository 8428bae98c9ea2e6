#pragma once

#include <numbers>
#include <string_view>

namespace pagecurv {

// Frame convention shared by every metric in the library.
//
// Left-invariant coframe on SU(2) = S^3 with d(sigma_1) = c sigma_2 ^ sigma_3
// (cyclic), equivalently [X_i, X_j] = c eps_ijk X_k for the dual fields.
// With c = 2 the unit round 3-sphere is sigma_1^2 + sigma_2^2 + sigma_3^2.
inline constexpr double kStructureConstant = 2.0;

// Integral of sigma_1 ^ sigma_2 ^ sigma_3 over a principal orbit: the volume
// of the unit 3-sphere under the convention above.
inline constexpr double kOrbitVolume = 2.0 * std::numbers::pi * std::numbers::pi;

// Scans stay this far away from the ends of the radial interval, where the
// Page profile W diverges.
inline constexpr double kDomainMargin = 1e-3;

inline constexpr std::string_view kSignConvention =
    "K(u,v) = <R(u,v)v,u>, round sphere K = +1";

inline constexpr std::string_view kVersion = "pagecurv 0.1.0";

}  // namespace pagecurv
