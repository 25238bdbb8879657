#pragma once

// Tertiary attack fractions (TAF): the share of all possible tertiary
// infections that a case's contacts actually realize under a given warning
// regime. 1 means nobody ever quarantines.
//
//   lambda_pair(l, h)        contacts loose until day l+h, all adhere
//   lambda_alpha(x, ch)      index quarantines on day x, channel ch warns
//                            its contacts, only reach*adherence of them act
//   capital_lambda(l, h, b)  lambda_alpha averaged over the infection day of
//                            the case itself, weighted by i_w(x + b)
//   delta_mix(l, h, b)       app-usage mixture of the CT and app averages

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "taf/error.hpp"
#include "taf/infectivity.hpp"
#include "taf/params.hpp"
#include "taf/reference.hpp"

namespace taf {

enum class Channel { kCt, kApp };

inline std::string_view to_string(Channel c) {
  return c == Channel::kCt ? "ct" : "app";
}

struct WarningChannel {
  Channel kind = Channel::kCt;
  int delay = 0;           // days from planning a test to the warning
  double reach = 0.0;      // fraction of infected contacts found
  double adherence = 0.0;  // fraction of found contacts that quarantine

  double effective() const { return reach * adherence; }
};

inline WarningChannel make_channel(Channel kind, const ModelParams& p) {
  if (kind == Channel::kCt) return {kind, p.t_ct, p.f_ct, p.a_ct};
  return {kind, p.t_app, p.f_app, p.a_app};
}

// Which day the reached branch of lambda_alpha is loose until, for an index
// quarantining on day x with channel delay t:
//   kDirect   lambda_pair(t, x): warnings land on day t + x
//   kShifted  lambda_pair(t, t + x): warnings land on day 2t + x
enum class LambdaForm { kDirect, kShifted };

inline std::string_view to_string(LambdaForm f) {
  return f == LambdaForm::kDirect ? "direct lambda(t_a, x)"
                                  : "shifted lambda(t_a, t_a + x)";
}

enum class CaseType { kMiss, kSym, kPers, kCt, kAppPlus, kAppMinus };

inline constexpr std::array<CaseType, 6> kCaseTypes{
    CaseType::kMiss, CaseType::kSym,     CaseType::kPers,
    CaseType::kCt,   CaseType::kAppPlus, CaseType::kAppMinus};

inline std::string_view to_string(CaseType t) {
  switch (t) {
    case CaseType::kMiss: return "miss";
    case CaseType::kSym: return "sym";
    case CaseType::kPers: return "pers";
    case CaseType::kCt: return "ct";
    case CaseType::kAppPlus: return "app_plus";
    case CaseType::kAppMinus: return "app_minus";
  }
  return "?";
}

inline CaseType parse_case_type(std::string_view name) {
  for (auto t : kCaseTypes) {
    if (to_string(t) == name) return t;
  }
  throw ModelError(ErrorKind::kInvalidArgument,
                   "unknown case type '" + std::string(name) + "'");
}

namespace detail {

// Sum over infection days x of i_w(x) * i_c(end - x), x = 1..end-1.
inline double tertiary_until(int end, const InfectivityProfile& profile) {
  double sum = 0.0;
  for (int x = 1; x <= end - 1; ++x) {
    sum += profile.i_w(x) * profile.i_c(end - x);
  }
  return sum;
}

}  // namespace detail

inline double lambda_pair(int l, int h, const InfectivityProfile& profile) {
  if (l < 1) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "lambda_pair: l must be >= 1, got " + std::to_string(l));
  }
  if (h < 0) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "lambda_pair: h must be >= 0, got " + std::to_string(h));
  }
  return detail::tertiary_until(l + h, profile);
}

inline double lambda_alpha(int x, const WarningChannel& ch,
                           const InfectivityProfile& profile,
                           LambdaForm form = LambdaForm::kDirect) {
  if (x < 1) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "lambda_alpha: day must be >= 1, got " +
                         std::to_string(x));
  }
  const int loose_until =
      form == LambdaForm::kDirect ? ch.delay + x : 2 * ch.delay + x;
  const double reached = detail::tertiary_until(loose_until, profile);
  const double af = ch.effective();
  return af * reached + (1.0 - af) * profile.i_c(x) * profile.i_c_inf();
}

inline double capital_lambda(int l, int h, int b, const WarningChannel& ch,
                             const InfectivityProfile& profile,
                             LambdaForm form = LambdaForm::kDirect) {
  if (h < 1) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "capital_lambda: h must be >= 1, got " +
                         std::to_string(h));
  }
  double weighted = 0.0;
  double weight = 0.0;
  for (int x = 1; x <= h; ++x) {
    const double w = profile.i_w(x + b);
    if (w == 0.0) continue;
    weighted += w * lambda_alpha(l + h + 1 - x, ch, profile, form);
    weight += w;
  }
  if (weight == 0.0) {
    throw ModelError(ErrorKind::kZeroDenominator,
                     "capital_lambda: infectivity weights vanish for h=" +
                         std::to_string(h) + ", b=" + std::to_string(b));
  }
  return weighted / weight;
}

inline double delta_mix(int l, int h, int b, const ModelParams& p,
                        const InfectivityProfile& profile,
                        LambdaForm form = LambdaForm::kDirect) {
  const auto app = make_channel(Channel::kApp, p);
  const auto ct = make_channel(Channel::kCt, p);
  return p.u_app * capital_lambda(l, h, b, app, profile, form) +
         (1.0 - p.u_app) * capital_lambda(l, h, b, ct, profile, form);
}

// Average TAF per case type, indexed by CaseType.
class CaseTypeLambdas {
 public:
  CaseTypeLambdas() = default;
  explicit CaseTypeLambdas(const std::array<double, 6>& values)
      : values_(values) {}

  double operator[](CaseType t) const {
    return values_[static_cast<std::size_t>(t)];
  }
  double& operator[](CaseType t) {
    return values_[static_cast<std::size_t>(t)];
  }
  const std::array<double, 6>& values() const { return values_; }

 private:
  std::array<double, 6> values_{};
};

inline CaseTypeLambdas case_type_lambdas(const ModelParams& p,
                                         const InfectivityProfile& profile,
                                         LambdaForm form = LambdaForm::kDirect) {
  const auto ct = make_channel(Channel::kCt, p);
  const int action_day = p.t_sym + p.t_plan;
  CaseTypeLambdas out;
  out[CaseType::kMiss] = profile.i_c_inf() * profile.i_c_inf();
  out[CaseType::kSym] = lambda_alpha(action_day, ct, profile, form);
  out[CaseType::kPers] = capital_lambda(p.t_pers, action_day, 0, ct, profile,
                                        form);
  out[CaseType::kCt] = capital_lambda(p.t_ct, action_day, 0, ct, profile, form);
  // Tested with symptoms: quarantined on days t_sym .. t_sym+t_app+t_plan.
  out[CaseType::kAppPlus] = delta_mix(p.t_sym - 1, p.t_app + p.t_plan + 1, 0,
                                      p, profile, form);
  // Tested before symptoms: quarantined on days t_app+1 .. t_sym-1.
  out[CaseType::kAppMinus] = delta_mix(p.t_app, p.t_sym - 1 - p.t_app,
                                       p.t_app + p.t_plan + 1, p, profile,
                                       form);
  return out;
}

struct LambdaTable {
  LambdaForm form = LambdaForm::kDirect;
  DailyProfile pair_row{};  // lambda_pair(1, x)
  DailyProfile app_row{};   // lambda_alpha(x, app)
  DailyProfile ct_row{};    // lambda_alpha(x, ct)
  CaseTypeLambdas per_type;
};

inline LambdaTable build_lambda_table(const ModelParams& p,
                                      const InfectivityProfile& profile,
                                      LambdaForm form) {
  LambdaTable table;
  table.form = form;
  const auto app = make_channel(Channel::kApp, p);
  const auto ct = make_channel(Channel::kCt, p);
  for (int x = 1; x <= kProfileDays; ++x) {
    const auto k = static_cast<std::size_t>(x - 1);
    table.pair_row[k] = lambda_pair(1, x, profile);
    table.app_row[k] = lambda_alpha(x, app, profile, form);
    table.ct_row[k] = lambda_alpha(x, ct, profile, form);
  }
  table.per_type = case_type_lambdas(p, profile, form);
  return table;
}

struct FormCalibration {
  LambdaForm chosen = LambdaForm::kDirect;
  double direct_max_deviation = 0.0;
  double shifted_max_deviation = 0.0;
};

// Largest absolute deviation of the CT and app rows from the reference rows
// over the calibration days.
inline double max_row_deviation(const LambdaTable& table) {
  double worst = 0.0;
  for (int x = reference::kCalibrationFirstDay;
       x <= reference::kCalibrationLastDay; ++x) {
    const auto k = static_cast<std::size_t>(x - 1);
    worst = std::max(worst, std::abs(table.ct_row[k] - reference::kCtRow[k]));
    worst = std::max(worst, std::abs(table.app_row[k] - reference::kAppRow[k]));
  }
  return worst;
}

// Picks the lambda_alpha form that best reproduces the reference rows. The
// reference rows belong to the default parameters, so calibration always
// runs on defaults.
inline FormCalibration calibrate_lambda_form() {
  const auto p = default_params();
  const InfectivityProfile profile(p);
  FormCalibration cal;
  cal.direct_max_deviation =
      max_row_deviation(build_lambda_table(p, profile, LambdaForm::kDirect));
  cal.shifted_max_deviation =
      max_row_deviation(build_lambda_table(p, profile, LambdaForm::kShifted));
  cal.chosen = cal.direct_max_deviation <= cal.shifted_max_deviation
                   ? LambdaForm::kDirect
                   : LambdaForm::kShifted;
  return cal;
}

inline LambdaTable build_lambda_table(const ModelParams& p,
                                      const InfectivityProfile& profile) {
  return build_lambda_table(p, profile, calibrate_lambda_form().chosen);
}

}  // namespace taf
