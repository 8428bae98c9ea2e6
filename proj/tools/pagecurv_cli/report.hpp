#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pagecurv/pagecurv.hpp"

namespace pagecurv::cli {

using nlohmann::json;

// ============================================================================
// Report
// ============================================================================

struct ReportParameters {
  std::optional<Interval> a_enclosure;
  std::optional<double> a;
  std::optional<double> A;
  std::optional<double> D;
  double lambda = 0.0;

  friend bool operator==(const ReportParameters&, const ReportParameters&) = default;
};

struct WeylSummary {
  int rows = 0;
  double max_relative_pair_gap = 0.0;
  double max_abs_trace = 0.0;
  bool all_rows_degenerate = false;

  friend bool operator==(const WeylSummary&, const WeylSummary&) = default;
};

struct ConventionLedger {
  double structure_constant = kStructureConstant;
  double orbit_volume = kOrbitVolume;
  std::string sign_convention{kSignConvention};

  friend bool operator==(const ConventionLedger&, const ConventionLedger&) = default;
};

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string metric;
  ReportParameters parameters;
  std::vector<SignCertificate> certificates;
  EinsteinScan einstein;
  GaussBonnetResult chi;
  WeylSummary weyl;
  std::string version{kVersion};
  ConventionLedger conventions;
  std::vector<Check> checks;
  bool passed = false;

  friend bool operator==(const Report&, const Report&) = default;
};

// Thresholds applied by the report's embedded checks.
inline constexpr double kEinsteinResidualMax = 1e-8;
inline constexpr double kWeylPairRelTol = 1e-8;
inline constexpr double kWeylTraceAbsTol = 1e-10;

struct ChiTarget {
  double expected = 0.0;
  double tolerance = 0.0;  // absolute
};

// Page: 4 within 0.5%; S^4 and CP^2 are quadrature calibration anchors.
[[nodiscard]] inline ChiTarget chi_target(std::string_view metric) {
  if (metric == "page") return {4.0, 4.0 * 5e-3};
  if (metric == "s4") return {2.0, 1e-6};
  if (metric == "cp2-fs") return {3.0, 1e-4};
  throw std::invalid_argument("no chi target for metric");
}

// ============================================================================
// JSON (non-finite doubles become the strings "inf" / "-inf" / "nan")
// ============================================================================

namespace detail {

inline json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

inline double number_from(const json& j) {
  if (j.is_number()) return j.get<double>();
  const std::string s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw std::invalid_argument("bad numeric field: " + s);
}

}  // namespace detail

inline json interval_json(const Interval& i) {
  return {{"lo", detail::number(i.lo())}, {"hi", detail::number(i.hi())}};
}

inline Interval interval_from_json(const json& j) {
  const double lo = detail::number_from(j.at("lo"));
  const double hi = detail::number_from(j.at("hi"));
  if (lo == -std::numeric_limits<double>::infinity() &&
      hi == std::numeric_limits<double>::infinity()) {
    return Interval::entire();
  }
  return Interval(lo, hi);
}

inline json certificate_json(const SignCertificate& c) {
  return {{"quantity", c.quantity},
          {"window", interval_json(c.window)},
          {"bound", interval_json(c.bound)},
          {"verdict", std::string(to_string(c.verdict))},
          {"depth", c.depth},
          {"evaluations", c.evaluations}};
}

inline SignCertificate certificate_from_json(const json& j) {
  SignCertificate c;
  c.quantity = j.at("quantity").get<std::string>();
  c.window = interval_from_json(j.at("window"));
  c.bound = interval_from_json(j.at("bound"));
  c.verdict = sign_from_string(j.at("verdict").get<std::string>());
  c.depth = j.at("depth").get<int>();
  c.evaluations = j.at("evaluations").get<std::int64_t>();
  return c;
}

inline json chi_json(const GaussBonnetResult& r) {
  return {{"chi", detail::number(r.chi)},
          {"quad_error_estimate", detail::number(r.quad_error_estimate)},
          {"samples", r.samples},
          {"converged", r.converged}};
}

inline GaussBonnetResult chi_from_json(const json& j) {
  GaussBonnetResult r;
  r.chi = detail::number_from(j.at("chi"));
  r.quad_error_estimate = detail::number_from(j.at("quad_error_estimate"));
  r.samples = j.at("samples").get<std::int64_t>();
  r.converged = j.at("converged").get<bool>();
  return r;
}

namespace detail {

template <class T>
json optional_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Interval>) {
    return interval_json(*v);
  } else {
    return number(*v);
  }
}

}  // namespace detail

inline json to_json(const Report& r) {
  json certs = json::array();
  for (const auto& c : r.certificates) certs.push_back(certificate_json(c));
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"value", detail::number(c.value)},
                      {"threshold", detail::number(c.threshold)},
                      {"passed", c.passed}});
  }
  return {
      {"metric", r.metric},
      {"parameters",
       {{"a_enclosure", detail::optional_json(r.parameters.a_enclosure)},
        {"a", detail::optional_json(r.parameters.a)},
        {"A", detail::optional_json(r.parameters.A)},
        {"D", detail::optional_json(r.parameters.D)},
        {"lambda", detail::number(r.parameters.lambda)}}},
      {"certificates", certs},
      {"einstein",
       {{"lambda", detail::number(r.einstein.lambda)},
        {"max_residual", detail::number(r.einstein.max_residual)},
        {"worst_x", detail::number(r.einstein.worst_x)},
        {"grid", r.einstein.grid}}},
      {"chi", chi_json(r.chi)},
      {"weyl_plus",
       {{"rows", r.weyl.rows},
        {"max_relative_pair_gap", detail::number(r.weyl.max_relative_pair_gap)},
        {"max_abs_trace", detail::number(r.weyl.max_abs_trace)},
        {"all_rows_degenerate", r.weyl.all_rows_degenerate}}},
      {"version", r.version},
      {"conventions",
       {{"structure_constant", r.conventions.structure_constant},
        {"orbit_volume", r.conventions.orbit_volume},
        {"sign_convention", r.conventions.sign_convention}}},
      {"checks", checks},
      {"passed", r.passed}};
}

inline Report report_from_json(const json& j) {
  Report r;
  r.metric = j.at("metric").get<std::string>();
  const json& p = j.at("parameters");
  if (!p.at("a_enclosure").is_null()) r.parameters.a_enclosure = interval_from_json(p.at("a_enclosure"));
  if (!p.at("a").is_null()) r.parameters.a = detail::number_from(p.at("a"));
  if (!p.at("A").is_null()) r.parameters.A = detail::number_from(p.at("A"));
  if (!p.at("D").is_null()) r.parameters.D = detail::number_from(p.at("D"));
  r.parameters.lambda = detail::number_from(p.at("lambda"));
  for (const auto& c : j.at("certificates")) r.certificates.push_back(certificate_from_json(c));
  const json& e = j.at("einstein");
  r.einstein.lambda = detail::number_from(e.at("lambda"));
  r.einstein.max_residual = detail::number_from(e.at("max_residual"));
  r.einstein.worst_x = detail::number_from(e.at("worst_x"));
  r.einstein.grid = e.at("grid").get<int>();
  r.chi = chi_from_json(j.at("chi"));
  const json& w = j.at("weyl_plus");
  r.weyl.rows = w.at("rows").get<int>();
  r.weyl.max_relative_pair_gap = detail::number_from(w.at("max_relative_pair_gap"));
  r.weyl.max_abs_trace = detail::number_from(w.at("max_abs_trace"));
  r.weyl.all_rows_degenerate = w.at("all_rows_degenerate").get<bool>();
  r.version = j.at("version").get<std::string>();
  const json& cv = j.at("conventions");
  r.conventions.structure_constant = cv.at("structure_constant").get<double>();
  r.conventions.orbit_volume = cv.at("orbit_volume").get<double>();
  r.conventions.sign_convention = cv.at("sign_convention").get<std::string>();
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), detail::number_from(c.at("value")),
                        detail::number_from(c.at("threshold")), c.at("passed").get<bool>()});
  }
  r.passed = j.at("passed").get<bool>();
  return r;
}

// ============================================================================
// Building a report
// ============================================================================

// Warped-plane curvature K(e0, e1) = (f1' f0' - f1'' f0) / (f1 f0^3), enclosed
// over a window from the interval jets of the first two profiles.
[[nodiscard]] inline Interval enclose_metric_k01(const DiagonalMetric& m,
                                                 const Interval& window) {
  const Jet2<Interval> f0 = m.f[0].jet_enclose(window);
  const Jet2<Interval> f1 = m.f[1].jet_enclose(window);
  return (f1.d1 * f0.d1 - f1.d2 * f0.v) / (f1.v * f0.v * f0.v * f0.v);
}

[[nodiscard]] inline WeylSummary weyl_summary(const DiagonalMetric& m, int rows) {
  WeylSummary s;
  s.rows = rows;
  s.all_rows_degenerate = true;
  const auto [lo, hi] = m.scan_range();
  for (int k = 0; k < rows; ++k) {
    const double x = rows == 1 ? lo : lo + (hi - lo) * k / (rows - 1);
    const CurvatureOperator R = curvature_at(m, x);
    const WeylPlusSpectrum w = weyl_plus(R, scalar(R));
    const double gap = w.relative_pair_gap();
    s.max_relative_pair_gap = std::max(s.max_relative_pair_gap, gap);
    s.max_abs_trace = std::max(s.max_abs_trace, std::abs(w.trace()));
    if (gap > kWeylPairRelTol) s.all_rows_degenerate = false;
  }
  return s;
}

// Runs every check for one bundled metric. Throws std::invalid_argument for
// an unknown metric name.
[[nodiscard]] inline Report build_report(std::string_view metric_name, int samples,
                                         double quad_tol = 1e-9,
                                         int certify_depth = kDefaultCertifyDepth) {
  if (samples < 2) throw std::invalid_argument("samples must be >= 2");
  const PageParams page = make_page_params();
  const auto metric = metric_by_name(metric_name, page);
  if (!metric) throw std::invalid_argument("unknown metric");

  Report r;
  r.metric = metric->name;
  if (metric->name == "page") {
    r.parameters.a_enclosure = page.a_enclosure;
    r.parameters.a = page.a;
    r.parameters.A = page.A;
    r.parameters.D = page.D;
    r.certificates.push_back(certify_page_claim(page, PageClaim::FPrimePositive, certify_depth));
    r.certificates.push_back(certify_page_claim(page, PageClaim::K01Negative, certify_depth));
  } else {
    const auto [lo, hi] = metric->scan_range();
    const DiagonalMetric& m = *metric;
    r.certificates.push_back(certify_sign(
        "K01", [&m](const Interval& w) { return enclose_metric_k01(m, w); },
        Interval(lo, hi), Sign::Positive, certify_depth));
  }

  r.einstein = einstein_scan(*metric, samples);
  r.parameters.lambda = r.einstein.lambda;
  r.chi = gauss_bonnet_chi(*metric, quad_tol);
  r.weyl = weyl_summary(*metric, samples);

  auto add = [&r](std::string name, double value, double threshold, bool ok) {
    r.checks.push_back({std::move(name), value, threshold, ok});
  };
  add("einstein_residual", r.einstein.max_residual, kEinsteinResidualMax,
      r.einstein.max_residual < kEinsteinResidualMax);
  const ChiTarget target = chi_target(r.metric);
  const double chi_dev = std::abs(r.chi.chi - target.expected);
  add("euler_characteristic", chi_dev, target.tolerance, chi_dev <= target.tolerance);
  add("weyl_plus_pair", r.weyl.max_relative_pair_gap, kWeylPairRelTol,
      r.weyl.all_rows_degenerate);
  add("weyl_plus_trace", r.weyl.max_abs_trace, kWeylTraceAbsTol,
      r.weyl.max_abs_trace < kWeylTraceAbsTol);
  for (const auto& c : r.certificates) {
    const Sign expected = (r.metric == "page" && c.quantity == "K01") ? Sign::Negative
                                                                       : Sign::Positive;
    add("certificate_" + c.quantity, c.verdict == expected ? 1.0 : 0.0, 1.0,
        c.verdict == expected && c.consistent());
  }
  r.passed = true;
  for (const auto& c : r.checks) r.passed = r.passed && c.passed;
  return r;
}

}  // namespace pagecurv::cli
