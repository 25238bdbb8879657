#pragma once

// Text and CSV rendering. Counts print with 0 decimals, rates and Rt with 4.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "taf/counterfactual.hpp"
#include "taf/lambda.hpp"
#include "taf/oracle.hpp"
#include "taf/reference.hpp"

namespace taf::report {

inline std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  std::string s(buf);
  if (!s.empty() && s.front() == '-' &&
      s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);  // no negative zero
  }
  return s;
}

inline std::string count(double v) { return fixed(v, 0); }
inline std::string rate(double v) { return fixed(v, 4); }

inline std::string header_line(const Estimate& e) {
  return "# recurrence: " + std::string(to_string(e.ct.mode)) +
         "; rt reduction: unweighted mean over " +
         std::to_string(e.rt.size()) +
         " weekly transitions; lambda form: " +
         std::string(to_string(e.calibration.chosen));
}

inline void write_weekly_csv(std::ostream& out, const Estimate& e) {
  out << "week,c,c_not_ct,s_ct,c_not_app,s_app,rt,rt_not_ct,rt_not_app\n";
  const auto rt_ct = rt_series(e.ct.c_not_weekly);
  const auto rt_app = rt_series(e.app.c_not_weekly);
  for (std::size_t w = 0; w < e.series.size(); ++w) {
    out << e.series[w].label << ',' << count(e.series[w].c_total) << ','
        << count(e.ct.c_not_weekly[w]) << ',' << count(e.ct.s_weekly[w]) << ','
        << count(e.app.c_not_weekly[w]) << ',' << count(e.app.s_weekly[w]);
    if (w < e.rt.size()) {
      out << ',' << rate(e.rt[w]) << ',' << rate(rt_ct[w]) << ','
          << rate(rt_app[w]);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

inline void write_summary_text(std::ostream& out, const Estimate& e) {
  char line[160];
  out << header_line(e) << '\n';
  std::snprintf(line, sizeof line, "%-28s %16s %16s\n", "", "Manual CT",
                "App");
  out << line;
  auto row = [&](const char* name, const std::string& ct,
                 const std::string& app) {
    std::snprintf(line, sizeof line, "%-28s %16s %16s\n", name, ct.c_str(),
                  app.c_str());
    out << line;
  };
  row("averted cases", count(e.ct.s_total), count(e.app.s_total));
  row("averted hospitalizations", count(e.ct.averted_hospitalizations),
      count(e.app.averted_hospitalizations));
  row("averted ICU cases", count(e.ct.averted_icu), count(e.app.averted_icu));
  row("averted deaths", count(e.ct.averted_deaths),
      count(e.app.averted_deaths));
  row("average reduction of Rt", rate(e.ct.rt_reduction_avg),
      rate(e.app.rt_reduction_avg));
}

inline void write_summary_csv(std::ostream& out, const Estimate& e) {
  out << "metric,ct,app\n";
  out << "averted_cases," << count(e.ct.s_total) << ','
      << count(e.app.s_total) << '\n';
  out << "averted_hospitalizations," << count(e.ct.averted_hospitalizations)
      << ',' << count(e.app.averted_hospitalizations) << '\n';
  out << "averted_icu," << count(e.ct.averted_icu) << ','
      << count(e.app.averted_icu) << '\n';
  out << "averted_deaths," << count(e.ct.averted_deaths) << ','
      << count(e.app.averted_deaths) << '\n';
  out << "rt_reduction," << rate(e.ct.rt_reduction_avg) << ','
      << rate(e.app.rt_reduction_avg) << '\n';
}

// quantity,day,value,reference,delta. Reference columns stay empty when the
// parameters differ from the defaults the reference values belong to.
inline void write_lambda_table(std::ostream& out, const InfectivityProfile& pr,
                               const LambdaTable& t,
                               const FormCalibration& cal,
                               bool with_reference) {
  out << "# lambda form: " << to_string(cal.chosen)
      << " (max deviation days " << reference::kCalibrationFirstDay << ".."
      << reference::kCalibrationLastDay << ": direct "
      << rate(cal.direct_max_deviation) << ", shifted "
      << rate(cal.shifted_max_deviation) << ")\n";
  out << "quantity,day,value,reference,delta\n";
  auto emit = [&](const std::string& name, const std::string& day, double v,
                  const double* ref) {
    out << name << ',' << day << ',' << rate(v);
    if (with_reference && ref != nullptr) {
      out << ',' << rate(*ref) << ',' << rate(v - *ref);
    } else {
      out << ",,";
    }
    out << '\n';
  };
  const auto weibull = weibull_profile();
  auto rows = [&](const std::string& name, const DailyProfile& values,
                  const DailyProfile* ref) {
    for (int x = 1; x <= kProfileDays; ++x) {
      const auto k = static_cast<std::size_t>(x - 1);
      emit(name, std::to_string(x), values[k],
           ref != nullptr ? &(*ref)[k] : nullptr);
    }
  };
  rows("i_w", pr.weibull(), &weibull);
  rows("i_a", pr.adhering(), &reference::kAdheringRow);
  rows("i_c", pr.cumulative(), &reference::kCumulativeRow);
  rows("lambda_pair", t.pair_row, &reference::kPairRow);
  rows("lambda_app", t.app_row, &reference::kAppRow);
  rows("lambda_ct", t.ct_row, &reference::kCtRow);
  for (auto type : kCaseTypes) {
    emit("lambda_" + std::string(to_string(type)), "", t.per_type[type],
         &reference::kCaseTypeLambdas[static_cast<std::size_t>(type)]);
  }
}

inline void write_sim_header(std::ostream& out) {
  out << "scenario,trees,seed,r0,empirical_taf,standard_error,"
         "tertiary_realized,tertiary_potential,analytic\n";
}

inline void write_sim_row(std::ostream& out, const std::string& scenario,
                          const SimConfig& cfg, const SimOutcome& o,
                          double analytic) {
  out << scenario << ',' << cfg.trees << ',' << cfg.seed << ','
      << fixed(cfg.r0, 4) << ',' << fixed(o.empirical_taf, 6) << ','
      << fixed(o.standard_error, 6) << ',' << fixed(o.tertiary_realized, 2)
      << ',' << fixed(o.tertiary_potential, 2) << ',' << fixed(analytic, 6)
      << '\n';
}

}  // namespace taf::report
