#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "support.hpp"

using namespace pagecurv;

namespace {

const ScanTable& page_scan() {
  static const ScanTable t = scan(test::bundled()[0], 401);
  return t;
}

std::vector<std::vector<double>> parse_csv(const std::string& csv, std::string& header) {
  std::istringstream in(csv);
  std::getline(in, header);
  std::vector<std::vector<double>> rows;
  for (std::string line; std::getline(in, line);) {
    std::vector<double> row;
    std::istringstream cells(line);
    for (std::string cell; std::getline(cells, cell, ',');) {
      std::size_t used = 0;
      row.push_back(std::stod(cell, &used));
      EXPECT_EQ(used, cell.size());
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Scan, RowCountAndRange) {
  const ScanTable& t = page_scan();
  ASSERT_EQ(t.rows.size(), 401u);
  EXPECT_EQ(t.metric, "page");
  EXPECT_DOUBLE_EQ(t.rows.front().x, -0.999);
  EXPECT_DOUBLE_EQ(t.rows.back().x, 0.999);
  for (std::size_t k = 1; k < t.rows.size(); ++k) EXPECT_LT(t.rows[k - 1].x, t.rows[k].x);
}

TEST(Scan, K01SignPattern) {
  const ScanTable& t = page_scan();
  const ScanRow& mid = t.rows[200];
  EXPECT_NEAR(mid.x, 0.0, 1e-15);
  EXPECT_GT(mid.k01, 0.0);
  EXPECT_LT(scan_row(test::bundled()[0], 0.99).k01, 0.0);
  int changes = 0;
  for (std::size_t k = 1; k < t.rows.size(); ++k)
    if (std::signbit(t.rows[k - 1].k01) != std::signbit(t.rows[k].k01)) ++changes;
  EXPECT_EQ(changes, 2);
}

TEST(Scan, WeylPlusDegenerateEveryRow) {
  for (const ScanRow& r : page_scan().rows) {
    const WeylPlusSpectrum w{r.wplus};
    ASSERT_EQ(w.distinct_count(1e-8), 2) << r.x;
    ASSERT_NEAR(w.trace(), 0.0, 1e-10) << r.x;
  }
}

TEST(Scan, KminNeverAboveK01) {
  for (const ScanRow& r : page_scan().rows) ASSERT_LE(r.kmin, r.k01 + 1e-12) << r.x;
}

TEST(Scan, CsvFormat) {
  const std::string csv = to_csv(page_scan());
  std::string header;
  const auto rows = parse_csv(csv, header);
  EXPECT_EQ(header, "x,k01,kmin,ric0,ric1,ric2,ric3,scalar,wplus1,wplus2,wplus3");
  ASSERT_EQ(rows.size(), 401u);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    ASSERT_EQ(rows[k].size(), 11u);
    for (double v : rows[k]) ASSERT_TRUE(std::isfinite(v));
    // 17 significant digits round-trip exactly
    ASSERT_EQ(rows[k][0], page_scan().rows[k].x);
    ASSERT_EQ(rows[k][2], page_scan().rows[k].kmin);
  }
  EXPECT_EQ(csv.find('e'), std::string::npos);
}

TEST(Scan, RejectsTinyGrid) {
  EXPECT_THROW((void)scan(round_s4_metric(), 1), std::invalid_argument);
}

TEST(Scan, DecimalFormatting) {
  EXPECT_EQ(format_decimal17(0.0), "0");
  EXPECT_EQ(format_decimal17(-0.999), "-0.99900000000000000");
  EXPECT_EQ(format_decimal17(3.0), "3.0000000000000000");
  for (double v : {1.2345678901234567e-16, -7.5e-300, 6.02214076e23, 0.1, 1.0 / 3.0}) {
    const std::string s = format_decimal17(v);
    EXPECT_EQ(s.find('e'), std::string::npos) << s;
    EXPECT_EQ(std::strtod(s.c_str(), nullptr), v) << s;
  }
}

TEST(Scan, S4CsvHasNoExponents) {
  const std::string csv = to_csv(scan(round_s4_metric(), 21));
  EXPECT_EQ(csv.find('e'), std::string::npos);
}
