#pragma once

// Daily infectivity of an infected person, by day since infection (1-based).
//
//   i_w  average infectivity, fraction of all secondary infections caused on
//        each day; sums to one.
//   i_a  the same after base adherence: from the day after symptoms plus
//        test planning, a fraction a_base of people stop infecting.
//   i_c  running sum of i_a, the realized share of infection potential.
//
// Days past the last entry carry zero infectivity, so i_c is flat there.

#include <array>
#include <cstddef>
#include <numeric>
#include <ostream>

#include "taf/params.hpp"

namespace taf {

inline constexpr int kProfileDays = 14;

using DailyProfile = std::array<double, kProfileDays>;

// Discretized Weibull generation-time profile, days 1..14.
inline constexpr DailyProfile weibull_profile() {
  return {0.00, 0.00, 0.22, 0.22, 0.18, 0.13, 0.08,
          0.05, 0.04, 0.02, 0.02, 0.02, 0.01, 0.00};
}

inline DailyProfile adhering_profile(const DailyProfile& i_w,
                                     const ModelParams& p) {
  const int action_day = p.t_sym + p.t_plan;
  DailyProfile i_a{};
  for (int day = 1; day <= kProfileDays; ++day) {
    const auto k = static_cast<std::size_t>(day - 1);
    i_a[k] = day <= action_day ? i_w[k] : i_w[k] * (1.0 - p.a_base);
  }
  return i_a;
}

inline DailyProfile cumulative_profile(const DailyProfile& i_a) {
  DailyProfile i_c{};
  std::partial_sum(i_a.begin(), i_a.end(), i_c.begin());
  return i_c;
}

class InfectivityProfile {
 public:
  InfectivityProfile(const DailyProfile& i_w, const ModelParams& p)
      : i_w_(i_w),
        i_a_(adhering_profile(i_w, p)),
        i_c_(cumulative_profile(i_a_)) {}

  explicit InfectivityProfile(const ModelParams& p)
      : InfectivityProfile(weibull_profile(), p) {}

  // Zero outside days 1..14.
  double i_w(int day) const { return in_range(day) ? i_w_[index(day)] : 0.0; }
  double i_a(int day) const { return in_range(day) ? i_a_[index(day)] : 0.0; }

  // Zero at nonpositive days; flat at i_c_inf beyond the horizon.
  double i_c(int day) const {
    if (day < 1) return 0.0;
    if (day > kProfileDays) return i_c_inf();
    return i_c_[index(day)];
  }

  double i_c_inf() const { return i_c_.back(); }

  const DailyProfile& weibull() const { return i_w_; }
  const DailyProfile& adhering() const { return i_a_; }
  const DailyProfile& cumulative() const { return i_c_; }

 private:
  static bool in_range(int day) { return day >= 1 && day <= kProfileDays; }
  static std::size_t index(int day) { return static_cast<std::size_t>(day - 1); }

  DailyProfile i_w_;
  DailyProfile i_a_;
  DailyProfile i_c_;
};

// `day,i_w,i_a,i_c` rows for inspection.
inline void write_profile_csv(std::ostream& out,
                              const InfectivityProfile& profile) {
  out << "day,i_w,i_a,i_c\n";
  const auto old_precision = out.precision(4);
  const auto old_flags = out.flags();
  out.setf(std::ios::fixed, std::ios::floatfield);
  for (int day = 1; day <= kProfileDays; ++day) {
    out << day << ',' << profile.i_w(day) << ',' << profile.i_a(day) << ','
        << profile.i_c(day) << '\n';
  }
  out.precision(old_precision);
  out.flags(old_flags);
}

}  // namespace taf
