#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "pagecurv/calibration_metrics.hpp"
#include "pagecurv/metric.hpp"
#include "pagecurv/page.hpp"

namespace pagecurv {

inline constexpr std::array<std::string_view, 3> kMetricNames = {"page", "s4", "cp2-fs"};

// Looks up one of the bundled metrics by its command-line name.
[[nodiscard]] inline std::optional<DiagonalMetric> metric_by_name(
    std::string_view name, const PageParams& page = make_page_params()) {
  if (name == "page") return page_metric(page);
  if (name == "s4") return round_s4_metric();
  if (name == "cp2-fs") return fubini_study_metric();
  return std::nullopt;
}

}  // namespace pagecurv
