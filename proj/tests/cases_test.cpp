#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "expected.hpp"
#include "taf/cases.hpp"
#include "taf/csv.hpp"

namespace taf {
namespace {

namespace chr = std::chrono;

DailyHospitalizations flat(chr::sys_days from, int days, double per_day) {
  DailyHospitalizations h;
  for (int d = 0; d < days; ++d) h.push_back({from + chr::days{d}, per_day});
  return h;
}

csv::Table table(const std::string& text) {
  std::istringstream in(text);
  return csv::parse(in, "t.csv");
}

TEST(IsoWeek, Mondays) {
  EXPECT_EQ(format_date(parse_iso_week("2020-42").monday()), "2020-10-12");
  EXPECT_EQ(format_date(parse_iso_week("2021-01").monday()), "2021-01-04");
  EXPECT_EQ(format_date(parse_iso_week("2020-53").monday()), "2020-12-28");
  EXPECT_EQ(parse_iso_week("2021-05").label(), "2021-05");
  EXPECT_EQ(iso_weeks_in_year(2020), 53);
  EXPECT_EQ(iso_weeks_in_year(2021), 52);
}

TEST(IsoWeek, Rejects) {
  EXPECT_THROW(parse_iso_week("2021-53"), ModelError);
  EXPECT_THROW(parse_iso_week("2021-00"), ModelError);
  EXPECT_THROW(parse_iso_week("2021/05"), ModelError);
  EXPECT_THROW(parse_date("2021-02-30"), ModelError);
}

TEST(TotalCases, FlatSeries) {
  const auto start = parse_iso_week("2020-42").monday();
  const auto h = flat(start, 14, 10.0);
  EXPECT_NEAR(estimate_total_cases(h, start, default_params()), 70 / 0.0132,
              1e-9);
  EXPECT_NEAR(estimate_total_cases(h, start, default_params()), 5303.0, 0.05);
  EXPECT_EQ(estimate_total_cases(flat(start, 14, 0.0), start,
                                 default_params()),
            0.0);
}

TEST(TotalCases, WindowIsDaysFiveToEleven) {
  const auto start = parse_iso_week("2021-03").monday();
  auto h = flat(start, 20, 0.0);
  h[4].admissions = 1000;
  h[12].admissions = 1000;
  EXPECT_EQ(estimate_total_cases(h, start, default_params()), 0.0);
  h[5].admissions = 1;
  h[11].admissions = 1;
  EXPECT_NEAR(estimate_total_cases(h, start, default_params()), 2 / 0.0132,
              1e-9);
}

TEST(TotalCases, MissingCoverage) {
  const auto start = parse_iso_week("2020-42").monday();
  auto h = flat(start, 14, 10.0);
  h.erase(h.begin() + 8);
  try {
    estimate_total_cases(h, start, default_params());
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMissingCoverage);
  }
  EXPECT_THROW(estimate_total_cases(flat(start, 11, 1.0), start,
                                    default_params()),
               ModelError);
}

TEST(TotalCases, LinearInAdmissionsInverseInIhr) {
  const auto start = parse_iso_week("2020-50").monday();
  DailyHospitalizations h;
  for (int d = 0; d < 14; ++d) h.push_back({start + chr::days{d}, 3.0 + d});
  const auto p = default_params();
  const double base = estimate_total_cases(h, start, p);
  auto scaled = h;
  for (auto& d : scaled) d.admissions *= 2.5;
  EXPECT_NEAR(estimate_total_cases(scaled, start, p), 2.5 * base, 1e-9);
  auto q = p;
  q.ihr = p.ihr / 4;
  EXPECT_NEAR(estimate_total_cases(h, start, q), 4 * base, 1e-9);
}

TEST(DeriveCaseTypes, Examples) {
  const auto p = default_params();
  WeeklyRawRecord raw{"2020-50", 0, 2500, 0, 0, 0};
  auto w = derive_case_types(raw, 10000, p);
  EXPECT_NEAR(w.c_pers, 1500, 1e-9);
  EXPECT_NEAR(w.c_ct, 1000, 1e-9);
  raw = {"2020-50", 0, 0, 300, 100, 0};
  w = derive_case_types(raw, 10000, p);
  EXPECT_NEAR(w.c_app_minus, 20, 1e-9);
  EXPECT_NEAR(w.c_app_plus, 380, 1e-9);
}

// Week 2020-49: 530 symptomless and 23 symptomatic app cases as reported.
TEST(DeriveCaseTypes, RawWeekMatchesSplitFixture) {
  const auto fixture = load_fixture()[7];
  ASSERT_EQ(fixture.label, "2020-49");
  WeeklyRawRecord raw{"2020-49", fixture.c_sym,
                      fixture.c_pers + fixture.c_ct, 23, 530, 12.3};
  const auto w = derive_case_types(raw, fixture.c_total, default_params(), 7);
  EXPECT_NEAR(w.c_app_minus, 106, 1e-9);
  EXPECT_NEAR(w.c_app_plus, 447, 1e-9);
  EXPECT_NEAR(w.c_app_minus, fixture.c_app_minus, 1e-9);
  EXPECT_NEAR(w.c_app_plus, fixture.c_app_plus, 1e-9);
}

TEST(DeriveCaseTypes, PartitionReconstructsTotal) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> count(0, 5000);
  for (int i = 0; i < 200; ++i) {
    WeeklyRawRecord raw{"2021-02", count(rng), count(rng), count(rng),
                        count(rng), 0};
    const double total = 30000 + count(rng);
    const auto w = derive_case_types(raw, total, default_params());
    EXPECT_NEAR(w.c_miss + w.found(), total, 1e-9 * total);
  }
}

TEST(DeriveCaseTypes, NegativeMiss) {
  WeeklyRawRecord raw{"2020-50", 900, 200, 0, 0, 0};
  try {
    derive_case_types(raw, 1000, default_params());
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNegativeMiss);
  }
}

TEST(Fixture, FirstAndLastRows) {
  const auto s = load_fixture();
  ASSERT_EQ(s.size(), 31u);
  EXPECT_EQ(s[0].label, "2020-42");
  EXPECT_EQ(s[0].c_total, 134772);
  EXPECT_EQ(s[0].c_sym, 53531);
  EXPECT_EQ(s[0].c_pers, 1760);
  EXPECT_EQ(s[0].c_ct, 1029);
  EXPECT_EQ(s[0].c_app_minus, 0);
  EXPECT_EQ(s[0].c_app_plus, 344);
  EXPECT_EQ(s[30].label, "2021-19");
  EXPECT_EQ(s[30].c_total, 74386);
  for (std::size_t w = 0; w < s.size(); ++w) EXPECT_EQ(s[w].week, int(w));
}

// The summary row printed with the source table disagrees with its own rows
// for C, C_sym and C_CT; these are the sums of the rows.
TEST(Fixture, ColumnSums) {
  double c = 0, sym = 0, pers = 0, ct = 0, am = 0, ap = 0;
  for (const auto& w : load_fixture()) {
    c += w.c_total;
    sym += w.c_sym;
    pers += w.c_pers;
    ct += w.c_ct;
    am += w.c_app_minus;
    ap += w.c_app_plus;
  }
  EXPECT_EQ(c, 3453079);
  EXPECT_EQ(sym, 955654);
  EXPECT_EQ(pers, 269774);
  EXPECT_EQ(ct, 173517);
  EXPECT_EQ(am, 3916);
  EXPECT_EQ(ap, 10345);
}

TEST(Fixture, MissShareToTwoDecimals) {
  const auto s = load_fixture();
  for (std::size_t w = 0; w < s.size(); ++w) {
    EXPECT_EQ(std::round(s[w].c_miss / s[w].c_total * 100) / 100,
              expected::kMissShare[w])
        << s[w].label;
  }
}

TEST(Fixture, MatchesShippedCsv) {
  const auto from_csv = read_presplit_csv(
      csv::read_file(std::string(TAF_SOURCE_DIR) + "/data/fixture.csv"));
  const auto fixture = load_fixture();
  ASSERT_EQ(from_csv.size(), fixture.size());
  for (std::size_t w = 0; w < fixture.size(); ++w) {
    EXPECT_EQ(from_csv[w].label, fixture[w].label);
    for (auto t : kCaseTypes) EXPECT_EQ(from_csv[w].count(t), fixture[w].count(t));
    EXPECT_EQ(from_csv[w].c_total, fixture[w].c_total);
  }
}

TEST(ValidateSeries, Fixture) { EXPECT_TRUE(validate_series(load_fixture()).ok()); }

TEST(ValidateSeries, NegativeMiss) {
  auto s = load_fixture();
  s[3] = make_case_week(3, "2020-45", 1000, 900, 200, 0, 0, 0);
  const auto r = validate_series(s);
  EXPECT_EQ(r.size(), 1u);
}

TEST(ValidateSeries, Gap) {
  auto s = load_fixture();
  s.erase(s.begin() + 10);
  EXPECT_EQ(validate_series(s).size(), 1u);
}

TEST(ValidateSeries, BrokenPartition) {
  auto s = load_fixture();
  s[2].c_sym += 10;
  EXPECT_EQ(validate_series(s).size(), 1u);
}

TEST(Csv, MissingColumnNamed) {
  try {
    read_presplit_csv(table("week,c_total,c_sym,c_pers,c_ct,c_app_plus\n"));
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("c_app_minus"), std::string::npos)
        << e.what();
  }
}

TEST(Csv, BadNumberNamesLine) {
  try {
    read_presplit_csv(table(
        "week,c_total,c_sym,c_pers,c_ct,c_app_minus,c_app_plus\n"
        "2020-42,1,0,0,0,0,0\n2020-43,x,0,0,0,0,0\n"));
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_NE(std::string(e.what()).find("t.csv:3"), std::string::npos)
        << e.what();
  }
}

TEST(Csv, FieldCountMismatch) {
  EXPECT_THROW(table("a,b\n1,2,3\n"), ModelError);
}

TEST(Csv, MissingFileNamesPath) {
  try {
    csv::read_file("/nonexistent/cases.csv");
    FAIL();
  } catch (const ModelError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIo);
    EXPECT_NE(std::string(e.what()).find("/nonexistent/cases.csv"),
              std::string::npos);
  }
}

TEST(RawIngestion, BuildSeries) {
  const auto raw = read_raw_csv(table(
      "week,sym_positives,ct_found,app_with_symptoms,app_without_symptoms,"
      "k_app\n2020-42,1000,500,20,50,8.4\n2020-43,1100,400,30,60,9\n"));
  ASSERT_EQ(raw.size(), 2u);
  std::ostringstream hosp;
  hosp << "date,admissions\n";
  auto day = parse_iso_week("2020-42").monday();
  for (int d = 0; d < 21; ++d) {
    hosp << format_date(day + chr::days{d}) << ",66\n";
  }
  const auto h = read_hospitalizations_csv(table(hosp.str()));
  const auto s = build_series(raw, h, default_params());
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0].c_total, 7 * 66 / 0.0132, 1e-6);
  EXPECT_NEAR(s[0].c_pers, 300, 1e-9);
  EXPECT_NEAR(s[1].c_app_minus, 12, 1e-9);
  EXPECT_EQ(s[1].week, 1);
  EXPECT_TRUE(validate_series(s).ok());
}

TEST(RawIngestion, DatesMustIncrease) {
  EXPECT_THROW(read_hospitalizations_csv(table(
                   "date,admissions\n2020-10-12,1\n2020-10-12,2\n")),
               ModelError);
  EXPECT_THROW(read_hospitalizations_csv(
                   table("date,admissions\n2020-10-12,-1\n")),
               ModelError);
}

}  // namespace
}  // namespace taf
