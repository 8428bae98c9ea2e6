#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "pagecurv/curvature.hpp"
#include "pagecurv/metric.hpp"
#include "pagecurv/sectional_search.hpp"
#include "pagecurv/weyl.hpp"

namespace pagecurv {

struct ScanRow {
  double x = 0.0;
  double k01 = 0.0;   // K(e0, e1)
  double kmin = 0.0;  // minimum over all 2-planes
  Vec4 ric{};
  double scalar = 0.0;
  Vec3 wplus{};
};

struct ScanTable {
  std::string metric;
  std::vector<ScanRow> rows;  // strictly increasing x
};

[[nodiscard]] inline ScanRow scan_row(const DiagonalMetric& m, double x,
                                      const SectionalSearchOptions& opt = {}) {
  const CurvatureOperator R = curvature_at(m, x);
  ScanRow row;
  row.x = x;
  row.k01 = R(0, 0);
  row.kmin = min_sectional_at(R, opt).k;
  row.ric = ricci(R);
  row.scalar = row.ric[0] + row.ric[1] + row.ric[2] + row.ric[3];
  row.wplus = weyl_plus(R, row.scalar).mu;
  return row;
}

// Uniform grid over the metric's scan range, endpoints included.
[[nodiscard]] inline ScanTable scan(const DiagonalMetric& m, int grid,
                                    const SectionalSearchOptions& opt = {}) {
  if (grid < 2) throw std::invalid_argument("scan: grid >= 2");
  ScanTable t;
  t.metric = m.name;
  t.rows.reserve(grid);
  const auto [lo, hi] = m.scan_range();
  for (int k = 0; k < grid; ++k) {
    const double x = lo + (hi - lo) * k / (grid - 1);
    t.rows.push_back(scan_row(m, x, opt));
  }
  return t;
}

inline constexpr const char* kScanCsvHeader =
    "x,k01,kmin,ric0,ric1,ric2,ric3,scalar,wplus1,wplus2,wplus3";

// Fixed (never exponent) notation carrying 17 significant digits, enough for
// an exact round trip through strtod.
[[nodiscard]] inline std::string format_decimal17(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  if (v == 0.0) return "0";
  char sci[40];
  std::snprintf(sci, sizeof sci, "%.16e", v);
  const int exponent = std::atoi(std::strchr(sci, 'e') + 1);
  const int decimals = std::max(0, 16 - exponent);
  std::string out(static_cast<std::size_t>(decimals + 330), '\0');
  const int n = std::snprintf(out.data(), out.size(), "%.*f", decimals, v);
  out.resize(static_cast<std::size_t>(n));
  return out;
}

[[nodiscard]] inline std::string to_csv(const ScanTable& t) {
  std::string out = kScanCsvHeader;
  out += '\n';
  auto put = [&](double v, char sep) {
    out += format_decimal17(v);
    out += sep;
  };
  for (const ScanRow& r : t.rows) {
    put(r.x, ',');
    put(r.k01, ',');
    put(r.kmin, ',');
    for (double v : r.ric) put(v, ',');
    put(r.scalar, ',');
    put(r.wplus[0], ',');
    put(r.wplus[1], ',');
    put(r.wplus[2], '\n');
  }
  return out;
}

}  // namespace pagecurv
