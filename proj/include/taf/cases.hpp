#pragma once

// Weekly case counts split into six exclusive case types:
//   miss       never found by testing
//   sym        tested on own initiative after symptoms
//   pers       found by tracing but already warned personally by the index
//   ct         found by manual contact tracing
//   app_minus  app-warned and tested before symptoms
//   app_plus   all other app-warned positives
// The weekly total is estimated from hospital admissions one to two weeks
// later, divided by the infection hospitalization rate.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "taf/csv.hpp"
#include "taf/error.hpp"
#include "taf/lambda.hpp"
#include "taf/params.hpp"

namespace taf {

namespace chr = std::chrono;

struct IsoWeek {
  int year = 0;
  int week = 0;

  // Monday of the ISO week.
  chr::sys_days monday() const {
    const chr::sys_days jan4 = chr::year{year} / chr::January / 4;
    const chr::weekday wd{jan4};
    const auto week1 = jan4 - (wd - chr::Monday);
    return week1 + chr::weeks{week - 1};
  }

  std::string label() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d", year, week);
    return buf;
  }
};

inline int iso_weeks_in_year(int year) {
  // Dec 28 always falls in the last ISO week.
  const chr::sys_days dec28 = chr::year{year} / chr::December / 28;
  const chr::sys_days jan4 = chr::year{year} / chr::January / 4;
  const auto week1 = jan4 - (chr::weekday{jan4} - chr::Monday);
  return static_cast<int>((dec28 - week1).count() / 7) + 1;
}

inline IsoWeek parse_iso_week(std::string_view label) {
  IsoWeek w;
  const auto dash = label.find('-');
  const bool ok = dash != std::string_view::npos &&
                  detail::parse_int(label.substr(0, dash), w.year) &&
                  detail::parse_int(label.substr(dash + 1), w.week) &&
                  w.week >= 1 && w.week <= iso_weeks_in_year(w.year);
  if (!ok) {
    throw ModelError(ErrorKind::kParse,
                     "invalid ISO week '" + std::string(label) +
                         "', expected YYYY-WW");
  }
  return w;
}

inline chr::sys_days parse_date(std::string_view text) {
  int y = 0, m = 0, d = 0;
  bool ok = text.size() == 10 && text[4] == '-' && text[7] == '-' &&
            detail::parse_int(text.substr(0, 4), y) &&
            detail::parse_int(text.substr(5, 2), m) &&
            detail::parse_int(text.substr(8, 2), d);
  const chr::year_month_day ymd{chr::year{y}, chr::month{static_cast<unsigned>(m)},
                                chr::day{static_cast<unsigned>(d)}};
  if (!ok || !ymd.ok()) {
    throw ModelError(ErrorKind::kParse, "invalid date '" + std::string(text) +
                                            "', expected YYYY-MM-DD");
  }
  return chr::sys_days{ymd};
}

inline std::string format_date(chr::sys_days day) {
  const chr::year_month_day ymd{day};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buf;
}

struct WeeklyRawRecord {
  std::string week_label;
  double sym_positives = 0;
  double ct_found = 0;  // before the personal/CT split
  double app_with_symptoms = 0;
  double app_without_symptoms = 0;
  double k_app = 0;  // diagnostic only
};

struct DailyAdmission {
  chr::sys_days date;
  double admissions = 0;
};

using DailyHospitalizations = std::vector<DailyAdmission>;

struct CaseWeek {
  int week = 0;
  std::string label;
  double c_total = 0;
  double c_miss = 0;
  double c_sym = 0;
  double c_pers = 0;
  double c_ct = 0;
  double c_app_minus = 0;
  double c_app_plus = 0;

  double count(CaseType t) const {
    switch (t) {
      case CaseType::kMiss: return c_miss;
      case CaseType::kSym: return c_sym;
      case CaseType::kPers: return c_pers;
      case CaseType::kCt: return c_ct;
      case CaseType::kAppPlus: return c_app_plus;
      case CaseType::kAppMinus: return c_app_minus;
    }
    return 0.0;
  }

  double found() const {
    return c_sym + c_pers + c_ct + c_app_minus + c_app_plus;
  }
};

using CaseSeries = std::vector<CaseWeek>;

// First admission day counted, relative to the week start, and the window
// length in days.
inline constexpr int kHospitalizationLag = 5;
inline constexpr int kHospitalizationWindow = 7;

inline double estimate_total_cases(const DailyHospitalizations& hosp,
                                   chr::sys_days week_start,
                                   const ModelParams& p) {
  const auto first = week_start + chr::days{kHospitalizationLag};
  const auto last = first + chr::days{kHospitalizationWindow - 1};
  double sum = 0.0;
  int covered = 0;
  for (const auto& day : hosp) {
    if (day.date >= first && day.date <= last) {
      sum += day.admissions;
      ++covered;
    }
  }
  if (covered != kHospitalizationWindow) {
    throw ModelError(ErrorKind::kMissingCoverage,
                     "hospitalizations do not cover " + format_date(first) +
                         " .. " + format_date(last) + " (" +
                         std::to_string(covered) + " of " +
                         std::to_string(kHospitalizationWindow) + " days)");
  }
  if (p.ihr <= 0.0) {
    throw ModelError(ErrorKind::kDivisionByZero, "ihr must be positive");
  }
  return sum / p.ihr;
}

// Builds a week from already-split counts; the missed share is the rest.
inline CaseWeek make_case_week(int week, std::string label, double c_total,
                               double c_sym, double c_pers, double c_ct,
                               double c_app_minus, double c_app_plus) {
  CaseWeek cw{week,   std::move(label), c_total,     0.0,       c_sym,
              c_pers, c_ct,             c_app_minus, c_app_plus};
  cw.c_miss = c_total - cw.found();
  return cw;
}

inline CaseWeek derive_case_types(const WeeklyRawRecord& raw, double c_total,
                                  const ModelParams& p, int week = 0) {
  const double app_minus = p.presym_fraction * raw.app_without_symptoms;
  const double app_plus = raw.app_with_symptoms +
                          (1.0 - p.presym_fraction) * raw.app_without_symptoms;
  auto cw = make_case_week(week, raw.week_label, c_total, raw.sym_positives,
                           p.e_ct * raw.ct_found,
                           (1.0 - p.e_ct) * raw.ct_found, app_minus, app_plus);
  if (cw.c_miss < 0.0) {
    throw ModelError(ErrorKind::kNegativeMiss,
                     "week " + raw.week_label +
                         ": found cases exceed estimated total (" +
                         std::to_string(cw.found()) + " > " +
                         std::to_string(c_total) + ")");
  }
  return cw;
}

namespace detail {

struct FixtureRow {
  const char* label;
  double c, sym, pers, ct, app_minus, app_plus;
};

// Weekly counts, 2020-42 through 2021-19.
inline constexpr std::array<FixtureRow, 31> kFixture{{
    {"2020-42", 134772, 53531, 1760, 1029, 0, 344},
    {"2020-43", 145302, 62259, 2309, 1243, 0, 705},
    {"2020-44", 134014, 55732, 4284, 2604, 0, 600},
    {"2020-45", 114620, 37278, 4090, 2567, 0, 380},
    {"2020-46", 97650, 30140, 4390, 2770, 0, 372},
    {"2020-47", 91210, 28481, 4888, 3121, 0, 328},
    {"2020-48", 83407, 25070, 4869, 3088, 0, 377},
    {"2020-49", 100073, 30195, 6926, 4375, 106, 447},
    {"2020-50", 122875, 42627, 10139, 6402, 235, 567},
    {"2020-51", 138329, 54945, 13451, 8490, 346, 718},
    {"2020-52", 147419, 44924, 12976, 8273, 251, 597},
    {"2020-53", 136131, 35065, 12385, 7942, 185, 526},
    {"2021-01", 113480, 30728, 11656, 7500, 175, 433},
    {"2021-02", 106056, 23329, 9345, 6021, 147, 321},
    {"2021-03", 99465, 21286, 8488, 5485, 139, 247},
    {"2021-04", 94162, 17572, 6617, 4264, 116, 210},
    {"2021-05", 90601, 15693, 6374, 4141, 76, 165},
    {"2021-06", 88707, 14338, 5654, 3670, 88, 129},
    {"2021-07", 88858, 17127, 6887, 4482, 90, 151},
    {"2021-08", 90070, 18541, 7608, 4950, 95, 174},
    {"2021-09", 94463, 18591, 7720, 5018, 119, 162},
    {"2021-10", 105371, 22556, 9420, 6115, 183, 171},
    {"2021-11", 122869, 26854, 10831, 7054, 136, 230},
    {"2021-12", 124990, 29986, 12658, 8238, 174, 269},
    {"2021-13", 123399, 28490, 11584, 7523, 199, 235},
    {"2021-14", 118778, 28998, 12097, 7835, 241, 258},
    {"2021-15", 132791, 31253, 12962, 8427, 170, 306},
    {"2021-16", 133397, 32710, 13897, 9039, 218, 275},
    {"2021-17", 111883, 29912, 12301, 8021, 149, 248},
    {"2021-18", 93551, 27080, 11923, 7772, 149, 240},
    {"2021-19", 74386, 20363, 9285, 6058, 129, 160},
}};

}  // namespace detail

// The shipped 31-week series in already-split form.
inline CaseSeries load_fixture() {
  CaseSeries series;
  series.reserve(detail::kFixture.size());
  int w = 0;
  for (const auto& r : detail::kFixture) {
    series.push_back(make_case_week(w++, r.label, r.c, r.sym, r.pers, r.ct,
                                    r.app_minus, r.app_plus));
  }
  return series;
}

// Slack for the partition identity, in cases.
inline constexpr double kPartitionSlack = 2.0;

inline ValidationReport validate_series(const CaseSeries& s) {
  ValidationReport report;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& w = s[i];
    const auto at = "week " + (w.label.empty() ? std::to_string(w.week)
                                               : w.label);
    const double sum = w.c_miss + w.found();
    if (std::abs(sum - w.c_total) > kPartitionSlack) {
      report.add(at, "case types sum to " + std::to_string(sum) +
                         ", total is " + std::to_string(w.c_total));
    }
    for (auto t : kCaseTypes) {
      if (w.count(t) < 0.0) {
        report.add(at, std::string(to_string(t)) + " count is negative");
      }
    }
    if (w.c_total < 0.0) report.add(at, "total is negative");
    if (i > 0 && w.week != s[i - 1].week + 1) {
      report.add(at, "week index " + std::to_string(w.week) +
                         " does not follow " + std::to_string(s[i - 1].week));
    }
  }
  return report;
}

// week,c_total,c_sym,c_pers,c_ct,c_app_minus,c_app_plus
inline CaseSeries read_presplit_csv(const csv::Table& table) {
  const auto c_week = table.column("week");
  const auto c_total = table.column("c_total");
  const auto c_sym = table.column("c_sym");
  const auto c_pers = table.column("c_pers");
  const auto c_ct = table.column("c_ct");
  const auto c_app_minus = table.column("c_app_minus");
  const auto c_app_plus = table.column("c_app_plus");
  CaseSeries series;
  int w = 0;
  for (const auto& row : table.rows()) {
    series.push_back(make_case_week(
        w++, row.cells[c_week], table.number(row, c_total),
        table.number(row, c_sym), table.number(row, c_pers),
        table.number(row, c_ct), table.number(row, c_app_minus),
        table.number(row, c_app_plus)));
  }
  return series;
}

// week,sym_positives,ct_found,app_with_symptoms,app_without_symptoms,k_app
inline std::vector<WeeklyRawRecord> read_raw_csv(const csv::Table& table) {
  const auto c_week = table.column("week");
  const auto c_sym = table.column("sym_positives");
  const auto c_ct = table.column("ct_found");
  const auto c_with = table.column("app_with_symptoms");
  const auto c_without = table.column("app_without_symptoms");
  const auto c_k = table.column("k_app");
  std::vector<WeeklyRawRecord> out;
  for (const auto& row : table.rows()) {
    WeeklyRawRecord r{row.cells[c_week],         table.number(row, c_sym),
                      table.number(row, c_ct),   table.number(row, c_with),
                      table.number(row, c_without), table.number(row, c_k)};
    parse_iso_week(r.week_label);
    for (double v : {r.sym_positives, r.ct_found, r.app_with_symptoms,
                     r.app_without_symptoms}) {
      if (v < 0.0) {
        throw ModelError(ErrorKind::kParse,
                         table.where(row) + ": negative count");
      }
    }
    if (r.k_app < 0.0) {
      throw ModelError(ErrorKind::kParse, table.where(row) + ": negative k_app");
    }
    out.push_back(std::move(r));
  }
  return out;
}

// date,admissions
inline DailyHospitalizations read_hospitalizations_csv(
    const csv::Table& table) {
  const auto c_date = table.column("date");
  const auto c_adm = table.column("admissions");
  DailyHospitalizations out;
  for (const auto& row : table.rows()) {
    DailyAdmission d{parse_date(row.cells[c_date]),
                     table.number(row, c_adm)};
    if (d.admissions < 0.0) {
      throw ModelError(ErrorKind::kParse,
                       table.where(row) + ": negative admissions");
    }
    if (!out.empty() && d.date <= out.back().date) {
      throw ModelError(ErrorKind::kParse,
                       table.where(row) + ": dates must be strictly increasing");
    }
    out.push_back(d);
  }
  return out;
}

// Raw ingestion: totals from hospitalizations, strict parameterized split.
inline CaseSeries build_series(const std::vector<WeeklyRawRecord>& raw,
                               const DailyHospitalizations& hosp,
                               const ModelParams& p) {
  CaseSeries series;
  int w = 0;
  for (const auto& r : raw) {
    const auto start = parse_iso_week(r.week_label).monday();
    series.push_back(
        derive_case_types(r, estimate_total_cases(hosp, start, p), p, w++));
  }
  return series;
}

}  // namespace taf
