#pragma once

// Counterfactual weekly case totals without manual contact tracing (CT) or
// without the exposure-notification app, and the cases each one averted.
//
// The weekly TAF volume sum_t lambda_t * C_t(w) stands for next week's
// infection opportunity. Had intervention a not existed, its cases would
// have spread as the cases replacing them (missed for CT, a miss/CT mix for
// the app), adding surplus(w) = sum_t C_t(w) * (lambda_replacement -
// lambda_t) to that volume. Next week's counterfactual total therefore grows
// by the relative surplus X(w) = surplus(w) / volume(w) on top of following
// the observed growth C(w+1)/C(w).

#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "taf/cases.hpp"
#include "taf/error.hpp"
#include "taf/infectivity.hpp"
#include "taf/lambda.hpp"
#include "taf/params.hpp"

namespace taf {

enum class Intervention { kCt, kApp };

inline std::string_view to_string(Intervention i) {
  return i == Intervention::kCt ? "ct" : "app";
}

// How averted cases feed back into the counterfactual series.
//   kPropagated  the counterfactual follows observed growth and gains the
//                relative surplus each week; S(w) is the cumulative gap
//                C_not(w) - C(w).
//   kAsPrinted   C_not(w+1) = C_not(w) * C(w+1)/C(w) + S(w) and
//                S(w+1) = C_not(w+1) * X(w), S(w) being only the
//                newly averted cases.
enum class RecurrenceMode { kPropagated, kAsPrinted };

inline std::string_view to_string(RecurrenceMode m) {
  return m == RecurrenceMode::kPropagated ? "propagated" : "as-printed";
}

inline double taf_volume(const CaseWeek& week, const CaseTypeLambdas& lambdas) {
  double volume = 0.0;
  for (auto t : kCaseTypes) volume += lambdas[t] * week.count(t);
  return volume;
}

// TAF of app-found cases had there been no app: a share e_app would have
// been missed, the rest found later by manual tracing.
inline double lambda_mix(const CaseTypeLambdas& lambdas, const ModelParams& p) {
  return p.e_app * lambdas[CaseType::kMiss] +
         (1.0 - p.e_app) * lambdas[CaseType::kCt];
}

inline double taf_surplus(const CaseWeek& week, Intervention which,
                          const CaseTypeLambdas& lambdas,
                          const ModelParams& p) {
  if (which == Intervention::kCt) {
    return week.c_ct * (lambdas[CaseType::kMiss] - lambdas[CaseType::kCt]);
  }
  const double mix = lambda_mix(lambdas, p);
  return week.c_app_minus * (mix - lambdas[CaseType::kAppMinus]) +
         week.c_app_plus * (mix - lambdas[CaseType::kAppPlus]);
}

struct SeverityOutcomes {
  double hospitalizations = 0;
  double icu = 0;
  double deaths = 0;
};

inline SeverityOutcomes severity_outcomes(double s_total, const ModelParams& p) {
  return {s_total * p.ihr, s_total * p.iir, s_total * p.ifr};
}

// Weekly reproduction number from weekly growth, assuming a 4-day serial
// interval over a 7-day week.
inline constexpr double kSerialIntervalDays = 4.0;
inline constexpr double kWeekDays = 7.0;

inline std::vector<double> rt_series(const std::vector<double>& totals) {
  if (totals.size() < 2) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "rt_series needs at least two weeks");
  }
  std::vector<double> rt;
  rt.reserve(totals.size() - 1);
  for (std::size_t w = 0; w < totals.size(); ++w) {
    if (!(totals[w] > 0.0)) {
      throw ModelError(ErrorKind::kNonPositiveTotal,
                       "rt_series: week " + std::to_string(w) +
                           " total is not positive");
    }
    if (w > 0) {
      rt.push_back(std::pow(totals[w] / totals[w - 1],
                            kSerialIntervalDays / kWeekDays));
    }
  }
  return rt;
}

// Unweighted mean over weekly transitions of Rt_counterfactual - Rt_actual.
inline double rt_reduction(const std::vector<double>& actual,
                           const std::vector<double>& counterfactual) {
  if (actual.size() != counterfactual.size()) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "rt_reduction: series lengths differ");
  }
  const auto rt_actual = rt_series(actual);
  const auto rt_cf = rt_series(counterfactual);
  double sum = 0.0;
  for (std::size_t w = 0; w < rt_actual.size(); ++w) {
    sum += rt_cf[w] - rt_actual[w];
  }
  return sum / static_cast<double>(rt_actual.size());
}

struct CounterfactualResult {
  Intervention intervention = Intervention::kCt;
  RecurrenceMode mode = RecurrenceMode::kPropagated;
  std::vector<double> s_weekly;
  std::vector<double> c_not_weekly;
  double s_total = 0;
  double averted_hospitalizations = 0;
  double averted_icu = 0;
  double averted_deaths = 0;
  double rt_reduction_avg = 0;
};

inline std::vector<double> weekly_totals(const CaseSeries& series) {
  std::vector<double> c;
  c.reserve(series.size());
  for (const auto& w : series) c.push_back(w.c_total);
  return c;
}

inline CounterfactualResult averted(
    const CaseSeries& series, Intervention which,
    const CaseTypeLambdas& lambdas, const ModelParams& p,
    RecurrenceMode mode = RecurrenceMode::kPropagated) {
  const std::size_t n = series.size();
  if (n < 2) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "counterfactual needs at least two weeks");
  }
  CounterfactualResult r;
  r.intervention = which;
  r.mode = mode;
  r.s_weekly.assign(n, 0.0);
  r.c_not_weekly.assign(n, 0.0);
  r.c_not_weekly[0] = series[0].c_total;

  // Ratio C_not(w) / C(w), used by the propagated form so that a zero
  // surplus leaves the counterfactual exactly equal to the observed series.
  double multiplier = 1.0;
  for (std::size_t w = 0; w + 1 < n; ++w) {
    const double c_now = series[w].c_total;
    const double volume = taf_volume(series[w], lambdas);
    if (c_now == 0.0 || volume == 0.0) {
      throw ModelError(ErrorKind::kDivisionByZero,
                       "week " + std::to_string(w) + ": " +
                           (c_now == 0.0 ? "total" : "TAF volume") +
                           " is zero");
    }
    const double relative = taf_surplus(series[w], which, lambdas, p) / volume;
    const double c_next = series[w + 1].c_total;
    if (mode == RecurrenceMode::kPropagated) {
      multiplier *= 1.0 + relative;
      r.c_not_weekly[w + 1] = c_next * multiplier;
      r.s_weekly[w + 1] = c_next * (multiplier - 1.0);
    } else {
      r.c_not_weekly[w + 1] =
          r.c_not_weekly[w] * (c_next / c_now) + r.s_weekly[w];
      r.s_weekly[w + 1] = r.c_not_weekly[w + 1] * relative;
    }
  }
  r.s_total = std::accumulate(r.s_weekly.begin(), r.s_weekly.end(), 0.0);
  const auto sev = severity_outcomes(r.s_total, p);
  r.averted_hospitalizations = sev.hospitalizations;
  r.averted_icu = sev.icu;
  r.averted_deaths = sev.deaths;
  r.rt_reduction_avg = rt_reduction(weekly_totals(series), r.c_not_weekly);
  return r;
}

inline CounterfactualResult averted_ct(
    const CaseSeries& series, const CaseTypeLambdas& lambdas,
    const ModelParams& p, RecurrenceMode mode = RecurrenceMode::kPropagated) {
  return averted(series, Intervention::kCt, lambdas, p, mode);
}

inline CounterfactualResult averted_app(
    const CaseSeries& series, const CaseTypeLambdas& lambdas,
    const ModelParams& p, RecurrenceMode mode = RecurrenceMode::kPropagated) {
  return averted(series, Intervention::kApp, lambdas, p, mode);
}

// Everything the estimate report needs.
struct Estimate {
  ModelParams params;
  FormCalibration calibration;
  LambdaTable lambdas;
  CaseSeries series;
  std::vector<double> rt;
  CounterfactualResult ct;
  CounterfactualResult app;
};

inline Estimate estimate(const CaseSeries& series, const ModelParams& p,
                         RecurrenceMode mode = RecurrenceMode::kPropagated) {
  Estimate e;
  e.params = p;
  e.calibration = calibrate_lambda_form();
  const InfectivityProfile profile(p);
  e.lambdas = build_lambda_table(p, profile, e.calibration.chosen);
  e.series = series;
  e.rt = rt_series(weekly_totals(series));
  e.ct = averted_ct(series, e.lambdas.per_type, p, mode);
  e.app = averted_app(series, e.lambdas.per_type, p, mode);
  return e;
}

}  // namespace taf
