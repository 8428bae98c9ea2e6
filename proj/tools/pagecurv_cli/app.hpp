#pragma once

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pagecurv/pagecurv.hpp"
#include "pagecurv_cli/report.hpp"

namespace pagecurv::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadArguments = 2;

struct Options {
  std::string metric = "page";
  int samples = 201;
  int grid = 401;
  double tol = 1e-14;
  double quad_tol = 1e-9;
  std::string claim = "k01-negative";
  std::string out;
  int max_depth = kDefaultCertifyDepth;
  bool json_output = false;
};

namespace detail {

inline bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) return false;
  f << text;
  f.flush();
  return static_cast<bool>(f);
}

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline void print_summary(const Report& r, std::ostream& out) {
  out << r.version << " report for metric '" << r.metric << "'\n";
  if (r.parameters.a_enclosure) {
    out << "  a in [" << std::setprecision(17) << r.parameters.a_enclosure->lo() << ", "
        << r.parameters.a_enclosure->hi() << "]\n";
    out << "  A = " << fmt(*r.parameters.A) << ", D = " << fmt(*r.parameters.D) << "\n";
  }
  out << "  Einstein constant = " << fmt(r.einstein.lambda)
      << ", max residual = " << fmt(r.einstein.max_residual) << "\n";
  out << "  chi = " << fmt(r.chi.chi) << " (error estimate " << fmt(r.chi.quad_error_estimate)
      << ")\n";
  for (const auto& c : r.certificates) {
    out << "  certificate " << c.quantity << ": " << to_string(c.verdict) << " on ["
        << fmt(c.window.lo()) << ", " << fmt(c.window.hi()) << "], bound ["
        << fmt(c.bound.lo()) << ", " << fmt(c.bound.hi()) << "]\n";
  }
  for (const auto& c : r.checks) {
    out << "  [" << (c.passed ? "PASS" : "FAIL") << "] " << c.name << " = " << fmt(c.value)
        << " (threshold " << fmt(c.threshold) << ")\n";
  }
  out << (r.passed ? "all checks passed\n" : "some checks FAILED\n");
}

}  // namespace detail

// ============================================================================
// Subcommands
// ============================================================================

inline int cmd_report(const Options& o, std::ostream& out, std::ostream& err) {
  const Report r = build_report(o.metric, o.samples, o.quad_tol, o.max_depth);
  const std::string text = to_json(r).dump(2) + "\n";
  if (!o.out.empty() && !detail::write_file(o.out, text)) {
    err << "cannot write " << o.out << "\n";
    return kExitBadArguments;
  }
  if (o.json_output) {
    out << text;
  } else {
    detail::print_summary(r, out);
  }
  return r.passed ? kExitOk : kExitCheckFailed;
}

inline int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const auto metric = metric_by_name(o.metric);
  const std::string csv = to_csv(scan(*metric, o.grid));
  if (o.out.empty()) {
    out << csv;
    return kExitOk;
  }
  if (!detail::write_file(o.out, csv)) {
    err << "cannot write " << o.out << "\n";
    return kExitBadArguments;
  }
  return kExitOk;
}

inline int cmd_root(const Options& o, std::ostream& out, std::ostream& err) {
  Interval a;
  try {
    a = find_root_a(o.tol);
  } catch (const RootCertificationError& e) {
    err << e.what() << "\n";
    return kExitCheckFailed;
  }
  const Interval f_lo = quartic_f(Interval(a.lo()));
  const Interval f_hi = quartic_f(Interval(a.hi()));
  const json j = {{"enclosure", interval_json(a)},
                  {"width", a.width()},
                  {"f_lo", interval_json(f_lo)},
                  {"f_hi", interval_json(f_hi)},
                  {"sign_lo", std::string(to_string(int_sign(f_lo)))},
                  {"sign_hi", std::string(to_string(int_sign(f_hi)))}};
  out << j.dump() << "\n";
  return kExitOk;
}

inline int cmd_certify(const Options& o, std::ostream& out, std::ostream& err) {
  PageParams p;
  try {
    p = make_page_params(o.tol);
  } catch (const RootCertificationError& e) {
    err << e.what() << "\n";
    return kExitCheckFailed;
  }
  const PageClaim claim =
      o.claim == "fprime-positive" ? PageClaim::FPrimePositive : PageClaim::K01Negative;
  const Sign target = claim == PageClaim::FPrimePositive ? Sign::Positive : Sign::Negative;
  const SignCertificate c = certify_page_claim(p, claim, o.max_depth);
  json j = certificate_json(c);
  j["claim"] = o.claim;
  j["domain"] = interval_json(page_claim_domain());
  j["a_enclosure"] = interval_json(p.a_enclosure);
  out << j.dump() << "\n";
  return c.verdict == target && c.consistent() ? kExitOk : kExitCheckFailed;
}

inline int cmd_chi(const Options& o, std::ostream& out, std::ostream&) {
  const auto metric = metric_by_name(o.metric);
  const GaussBonnetResult r = gauss_bonnet_chi(*metric, o.quad_tol);
  const ChiTarget target = chi_target(metric->name);
  const bool ok = std::abs(r.chi - target.expected) <= target.tolerance;
  json j = chi_json(r);
  j["metric"] = metric->name;
  j["expected"] = target.expected;
  j["tolerance"] = target.tolerance;
  j["passed"] = ok;
  out << j.dump() << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

// ============================================================================
// Entry point
// ============================================================================

// Parses argv and runs one subcommand. Returns 0 on success, 1 when a check
// fails or a certificate is inconclusive, 2 on bad arguments.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certified curvature checks for the Page metric and calibration metrics",
               "pagecurv"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> metrics = {"page", "s4", "cp2-fs"};

  auto positive = CLI::PositiveNumber;
  auto* report = app.add_subcommand("report", "Run all checks and write a JSON report");
  report->add_option("--metric", o.metric)->check(CLI::IsMember(metrics));
  report->add_option("--samples", o.samples)->check(CLI::Range(2, 1000000));
  report->add_option("--quad-tol", o.quad_tol)->check(positive);
  report->add_option("--max-depth", o.max_depth)->check(CLI::Range(0, 30));
  report->add_option("--out", o.out);
  report->add_flag("--json", o.json_output);

  auto* scan_cmd = app.add_subcommand("scan", "Write per-point curvature data as CSV");
  scan_cmd->add_option("--metric", o.metric)->check(CLI::IsMember(metrics));
  scan_cmd->add_option("--grid", o.grid)->check(CLI::Range(2, 1000000));
  scan_cmd->add_option("--out", o.out);
  scan_cmd->add_flag("--json", o.json_output);

  auto* root = app.add_subcommand("root", "Certified enclosure of the Page parameter a");
  root->add_option("--tol", o.tol)->check(positive);
  root->add_flag("--json", o.json_output);

  auto* certify = app.add_subcommand("certify", "Interval sign certificate for a Page claim");
  certify->add_option("--claim", o.claim)
      ->check(CLI::IsMember(std::vector<std::string>{"k01-negative", "fprime-positive"}));
  certify->add_option("--tol", o.tol)->check(positive);
  certify->add_option("--max-depth", o.max_depth)->check(CLI::Range(0, 30));
  certify->add_flag("--json", o.json_output);

  auto* chi = app.add_subcommand("chi", "Euler characteristic by Gauss-Bonnet quadrature");
  chi->add_option("--metric", o.metric)->check(CLI::IsMember(metrics));
  chi->add_option("--quad-tol", o.quad_tol)->check(positive);
  chi->add_flag("--json", o.json_output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitBadArguments;
  }

  try {
    if (report->parsed()) return cmd_report(o, out, err);
    if (scan_cmd->parsed()) return cmd_scan(o, out, err);
    if (root->parsed()) return cmd_root(o, out, err);
    if (certify->parsed()) return cmd_certify(o, out, err);
    if (chi->parsed()) return cmd_chi(o, out, err);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitBadArguments;
}

}  // namespace pagecurv::cli
