#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pagecurv_cli/app.hpp"
#include "support.hpp"

using namespace pagecurv;
using namespace pagecurv::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "pagecurv");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pagecurv_test_" + name);
}

}  // namespace

TEST(Cli, Root) {
  const CliRun r = run({"root", "--tol", "1e-14"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  const Interval a = interval_from_json(j["enclosure"]);
  EXPECT_LE(a.width(), 1e-14);
  EXPECT_GT(a.lo(), 0.2815);
  EXPECT_LT(a.hi(), 0.2820);
  EXPECT_EQ(j["sign_lo"], "Negative");
  EXPECT_EQ(j["sign_hi"], "Positive");
}

TEST(Cli, CertifyClaims) {
  const CliRun k = run({"certify", "--claim", "k01-negative"});
  ASSERT_EQ(k.code, 0) << k.err;
  const SignCertificate c = certificate_from_json(json::parse(k.out));
  EXPECT_EQ(c.verdict, Sign::Negative);
  EXPECT_GT(c.window.lo(), 0.0);
  EXPECT_LT(c.window.hi(), 1.0);

  const CliRun f = run({"certify", "--claim", "fprime-positive", "--json"});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(certificate_from_json(json::parse(f.out)).verdict, Sign::Positive);
}

TEST(Cli, CertifyInconclusiveExitsOne) {
  const CliRun r = run({"certify", "--claim", "k01-negative", "--max-depth", "0"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(certificate_from_json(json::parse(r.out)).verdict, Sign::Inconclusive);
}

TEST(Cli, Chi) {
  const CliRun r = run({"chi", "--metric", "page"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(json::parse(r.out)["chi"].get<double>(), 4.0, 0.02);
  const CliRun loose = run({"chi", "--metric", "s4", "--quad-tol", "1e-3"});
  EXPECT_EQ(loose.code, 0);
}

TEST(Cli, ReportWritesJson) {
  const auto path = temp_file("report.json");
  const CliRun r = run({"report", "--metric", "s4", "--samples", "21", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  const Report rep = report_from_json(json::parse(in));
  EXPECT_TRUE(rep.passed);
  EXPECT_NEAR(rep.chi.chi, 2.0, 1e-6);
  EXPECT_NEAR(rep.parameters.lambda, 3.0, 1e-12);
  std::filesystem::remove(path);
}

TEST(Cli, ReportPageContainsNegativeK01) {
  const CliRun r = run({"report", "--metric", "page", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Report rep = report_from_json(json::parse(r.out));
  EXPECT_EQ(rep.certificates.at(1).quantity, "K01");
  EXPECT_EQ(rep.certificates.at(1).verdict, Sign::Negative);
}

TEST(Cli, ScanToFileAndStdout) {
  const auto path = temp_file("scan.csv");
  const CliRun r = run({"scan", "--metric", "cp2-fs", "--grid", "9", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 10);
  const CliRun s = run({"scan", "--metric", "cp2-fs", "--grid", "9"});
  std::ifstream again(path);
  EXPECT_EQ(s.out, std::string(std::istreambuf_iterator<char>(again), {}));
  std::filesystem::remove(path);
}

TEST(Cli, UnwritablePathExitsTwo) {
  EXPECT_EQ(run({"scan", "--grid", "3", "--out", "/nonexistent-dir/x.csv"}).code, 2);
  EXPECT_EQ(run({"report", "--metric", "s4", "--samples", "3", "--out", "/nonexistent-dir/r.json"})
                .code,
            2);
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"report", "--help"}).code, 0);
}

TEST(Cli, Determinism) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"report", "--metric", "page", "--json"},
        {"root"},
        {"certify", "--claim", "fprime-positive"},
        {"chi", "--metric", "cp2-fs"}}) {
    const CliRun a = run(args);
    const CliRun b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << args[0];
  }
}

// Malformed inputs: every one must exit 2 without output on stdout.
TEST(CliProperty, MalformedInputsExitTwo) {
  const std::vector<std::vector<std::string>> fixed = {
      {},
      {"bogus"},
      {"report", "--metric", "bogus"},
      {"report", "--samples", "1"},
      {"report", "--samples", "abc"},
      {"scan", "--grid", "0"},
      {"scan", "--grid", "-5"},
      {"root", "--tol", "0"},
      {"root", "--tol", "-1e-3"},
      {"root", "--tol", "x"},
      {"certify", "--claim", "everything"},
      {"certify", "--max-depth", "99"},
      {"chi", "--metric", "page", "--quad-tol", "0"},
      {"chi", "--unknown-flag"},
      {"report", "extra-positional"},
      {"root", "--tol"},
  };
  for (const auto& args : fixed) {
    const CliRun r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "<none>" : args[0]);
    EXPECT_TRUE(r.out.empty());
  }
  // Random garbage for each numeric flag.
  auto gen = test::rng(50);
  const std::vector<std::pair<std::string, std::string>> numeric = {
      {"scan", "--grid"}, {"root", "--tol"}, {"chi", "--quad-tol"}, {"report", "--samples"}};
  const std::string alphabet = "abcxyz!@#-+.e ";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    std::string junk(1 + trial % 5, 'q');
    for (char& ch : junk) ch = alphabet[pick(gen)];
    if (junk.find_first_of("abcxyz!@#") == std::string::npos) junk += "z";
    const auto& [cmd, flag] = numeric[trial % numeric.size()];
    EXPECT_EQ(run({cmd, flag, junk}).code, 2) << cmd << " " << flag << " '" << junk << "'";
  }
}
