// Prints the certified Page parameter and the two sign certificates that
// show the Page metric has a 2-plane of negative sectional curvature.
#include <cstdio>

#include "pagecurv/pagecurv.hpp"

int main() {
  using namespace pagecurv;
  const PageParams p = make_page_params();
  std::printf("a in [%.17g, %.17g]\n", p.a_enclosure.lo(), p.a_enclosure.hi());

  for (PageClaim claim : {PageClaim::FPrimePositive, PageClaim::K01Negative}) {
    const SignCertificate c = certify_page_claim(p, claim);
    std::printf("%-4s %-12s on [%.6f, %.6f]  bound [%.6g, %.6g]\n", c.quantity.c_str(),
                to_string(c.verdict).data(), c.window.lo(), c.window.hi(), c.bound.lo(),
                c.bound.hi());
  }

  const DiagonalMetric page = page_metric(p);
  const CurvatureOperator R = curvature_at(page, 0.99);
  const SectionalExtremum lowest = min_sectional_at(R);
  std::printf("min sectional curvature at x = 0.99: %.12f\n", lowest.k);
  return 0;
}
