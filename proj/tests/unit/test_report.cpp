#include <gtest/gtest.h>

#include <cmath>

#include "pagecurv_cli/report.hpp"
#include "support.hpp"

using namespace pagecurv;
using namespace pagecurv::cli;

namespace {

const Report& page_report() {
  static const Report r = build_report("page", 201);
  return r;
}

}  // namespace

TEST(Report, PagePasses) {
  const Report& r = page_report();
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.metric, "page");
  ASSERT_TRUE(r.parameters.a_enclosure.has_value());
  EXPECT_TRUE(r.parameters.a_enclosure->contains(*r.parameters.a));
  bool has_negative_k01 = false;
  for (const auto& c : r.certificates)
    has_negative_k01 |= c.quantity == "K01" && c.verdict == Sign::Negative;
  EXPECT_TRUE(has_negative_k01);
  EXPECT_EQ(r.version, kVersion);
  EXPECT_EQ(r.conventions.structure_constant, kStructureConstant);
}

TEST(Report, S4Anchors) {
  const Report r = build_report("s4", 51);
  EXPECT_TRUE(r.passed);
  EXPECT_NEAR(r.chi.chi, 2.0, 1e-6);
  EXPECT_NEAR(r.parameters.lambda, 3.0, 1e-12);
  EXPECT_FALSE(r.parameters.a_enclosure.has_value());
}

TEST(Report, JsonRoundTrip) {
  const Report& r = page_report();
  const json j = to_json(r);
  EXPECT_EQ(report_from_json(j), r);
  EXPECT_EQ(report_from_json(json::parse(j.dump())), r);
  EXPECT_EQ(to_json(report_from_json(json::parse(j.dump()))).dump(), j.dump());
}

TEST(Report, NonFiniteNumbersSurviveRoundTrip) {
  Report r = page_report();
  r.certificates[0].bound = Interval::entire();
  r.certificates[0].verdict = Sign::Inconclusive;
  const json j = json::parse(to_json(r).dump());
  EXPECT_EQ(report_from_json(j), r);
}

TEST(Report, CertificatesMatchReverification) {
  const Report& r = page_report();
  const json j = json::parse(to_json(r).dump());
  const Report back = report_from_json(j);
  const PageParams p = make_page_params();
  EXPECT_EQ(back.parameters.a_enclosure, p.a_enclosure);
  ASSERT_EQ(back.certificates.size(), 2u);
  EXPECT_EQ(back.certificates[0], certify_page_claim(p, PageClaim::FPrimePositive));
  EXPECT_EQ(back.certificates[1], certify_page_claim(p, PageClaim::K01Negative));
  // Re-evaluating the enclosure on the stored window reproduces the stored bound.
  const PageProfiles pr = page_profiles(p);
  EXPECT_EQ(enclose_k01(pr, back.certificates[1].window), back.certificates[1].bound);
  EXPECT_EQ(int_sign(enclose_k01(pr, back.certificates[1].window)), Sign::Negative);
}

TEST(Report, MalformedJsonIsRejected) {
  json j = to_json(page_report());
  j["certificates"][0]["verdict"] = "Maybe";
  EXPECT_ANY_THROW((void)report_from_json(j));
  json k = to_json(page_report());
  k.erase("chi");
  EXPECT_ANY_THROW((void)report_from_json(k));
}

TEST(Report, UnknownMetric) {
  EXPECT_THROW((void)build_report("bogus", 11), std::invalid_argument);
  EXPECT_THROW((void)build_report("page", 1), std::invalid_argument);
}
