#pragma once

// Monte Carlo branching process used to check the closed-form tertiary
// attack fractions.
//
// Each tree starts from one index case. On day i of its infection the index
// would infect Poisson(r0 * i_w(i)) secondaries if nobody ever quarantined;
// those are the potential secondaries, each worth r0 potential tertiary
// infections. The profile's days carry slightly less than a whole unit of
// infectivity; the remainder counts as potential only, so a case that is
// never stopped realizes (sum of i_w)^2 of it, matching i_c_inf squared. The index stops infecting after its quarantine day, and with
// probability a_base also after symptoms plus test planning. A secondary
// infected while the index is still active infects tertiaries on its own
// days 1..cutoff, where cutoff is the earliest of
//   - the horizon,
//   - symptoms plus test planning, with probability a_base,
//   - the warning day relative to its own infection, if the channel reaches
//     it and it adheres (probability reach * adherence).
// Realized tertiary infections are counted in expectation (r0 times the
// infectivity up to the cutoff), so the only randomness is in the tree
// shape and in the individual adherence draws.
//
// The empirical TAF pools realized over potential across trees. Trees are
// seeded independently from (seed, tree index), so results do not depend on
// the thread count.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "taf/error.hpp"
#include "taf/infectivity.hpp"
#include "taf/lambda.hpp"
#include "taf/params.hpp"

namespace taf {

struct SimConfig {
  std::uint64_t trees = 100000;
  double r0 = 2.0;
  std::uint64_t seed = 1;
  int horizon = 28;
  std::optional<WarningChannel> channel;
  std::optional<int> index_quarantine_day;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct SimOutcome {
  double empirical_taf = 0;
  double standard_error = 0;
  double tertiary_realized = 0;
  double tertiary_potential = 0;

  bool operator==(const SimOutcome&) const = default;
};

inline void validate_config(const SimConfig& cfg) {
  if (cfg.trees < 1) {
    throw ModelError(ErrorKind::kInvalidArgument, "trees must be >= 1");
  }
  if (!(cfg.r0 > 0.0)) {
    throw ModelError(ErrorKind::kInvalidArgument, "r0 must be > 0");
  }
  if (cfg.horizon < kProfileDays) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "horizon must be >= " + std::to_string(kProfileDays));
  }
  if (cfg.index_quarantine_day && *cfg.index_quarantine_day < 1) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "index quarantine day must be >= 1");
  }
}

// What happens to one index case: which channel warns its contacts and when
// it quarantines. Empty members mean none / never.
struct TreeSetup {
  std::optional<WarningChannel> channel;
  std::optional<int> quarantine_day;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline std::uint64_t tree_seed(std::uint64_t seed, std::uint64_t tree) {
  return splitmix64(splitmix64(seed) ^ tree);
}

struct TreeTally {
  double realized = 0;
  double potential = 0;
};

template <typename Sampler>
TreeTally simulate_tree(std::mt19937_64& rng, const Sampler& sampler,
                        const SimConfig& cfg, const ModelParams& p,
                        const InfectivityProfile& profile,
                        const std::vector<double>& infectivity_through) {
  const TreeSetup setup = sampler(rng);
  const int action_day = p.t_sym + p.t_plan;
  const int never = std::numeric_limits<int>::max();
  std::bernoulli_distribution adheres(p.a_base);

  int index_last = setup.quarantine_day.value_or(never);
  if (adheres(rng)) index_last = std::min(index_last, action_day);

  const bool warns = setup.channel.has_value() && setup.quarantine_day;
  std::bernoulli_distribution acts(warns ? setup.channel->effective() : 0.0);
  const int warning_day =
      warns ? *setup.quarantine_day + setup.channel->delay : never;

  auto through = [&](int day) {
    if (day < 1) return 0.0;
    return infectivity_through[static_cast<std::size_t>(
        std::min(day, cfg.horizon))];
  };

  TreeTally tally;
  for (int day = 1; day <= cfg.horizon; ++day) {
    const double mean = cfg.r0 * profile.i_w(day);
    if (mean <= 0.0) continue;
    std::poisson_distribution<int> offspring(mean);
    const int n = offspring(rng);
    tally.potential += n * cfg.r0;
    if (day > index_last) continue;
    for (int k = 0; k < n; ++k) {
      int cutoff = cfg.horizon;
      if (adheres(rng)) cutoff = std::min(cutoff, action_day);
      if (warns && acts(rng)) cutoff = std::min(cutoff, warning_day - day);
      tally.realized += cfg.r0 * through(cutoff);
    }
  }
  const double tail = 1.0 - through(cfg.horizon);
  if (tail > 0.0) {
    std::poisson_distribution<int> late(cfg.r0 * tail);
    tally.potential += late(rng) * cfg.r0;
  }
  return tally;
}

template <typename Sampler>
SimOutcome run_trees(const SimConfig& cfg, const ModelParams& p,
                     const InfectivityProfile& profile,
                     const Sampler& sampler) {
  validate_config(cfg);
  std::vector<double> infectivity_through(
      static_cast<std::size_t>(cfg.horizon) + 1, 0.0);
  for (int d = 1; d <= cfg.horizon; ++d) {
    infectivity_through[static_cast<std::size_t>(d)] =
        infectivity_through[static_cast<std::size_t>(d - 1)] + profile.i_w(d);
  }

  std::vector<TreeTally> tallies(cfg.trees);
  unsigned workers = cfg.threads != 0 ? cfg.threads
                                      : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, cfg.trees));

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t t = begin; t < end; ++t) {
      std::mt19937_64 rng(tree_seed(cfg.seed, t));
      tallies[t] =
          simulate_tree(rng, sampler, cfg, p, profile, infectivity_through);
    }
  };
  if (workers == 1) {
    work(0, cfg.trees);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (cfg.trees + workers - 1) / workers;
    for (std::uint64_t begin = 0; begin < cfg.trees; begin += chunk) {
      pool.emplace_back(work, begin, std::min(cfg.trees, begin + chunk));
    }
  }

  SimOutcome out;
  for (const auto& t : tallies) {
    out.tertiary_realized += t.realized;
    out.tertiary_potential += t.potential;
  }
  if (out.tertiary_potential <= 0.0) return out;
  out.empirical_taf = out.tertiary_realized / out.tertiary_potential;

  // Delta-method standard error of the pooled ratio.
  const double n = static_cast<double>(cfg.trees);
  if (cfg.trees > 1) {
    double ss = 0.0;
    for (const auto& t : tallies) {
      const double e = t.realized - out.empirical_taf * t.potential;
      ss += e * e;
    }
    const double mean_potential = out.tertiary_potential / n;
    out.standard_error = std::sqrt(ss / (n * (n - 1.0))) / mean_potential;
  }
  return out;
}

}  // namespace detail

inline SimOutcome simulate_trees(const SimConfig& cfg, const ModelParams& p,
                                 const InfectivityProfile& profile) {
  const TreeSetup fixed{cfg.channel, cfg.index_quarantine_day};
  return detail::run_trees(cfg, p, profile,
                           [&](std::mt19937_64&) { return fixed; });
}

// Index timing for a traced case: the case was itself infected on day x of
// its own index's infection, x = 1..h with weight i_w(x + b), and so
// quarantines on day l + h + 1 - x.
struct LooseWindow {
  int l = 0;
  int h = 1;
  int b = 0;
};

// Draws the per-tree setup for a case type, mirroring its closed form.
class CaseTypeSampler {
 public:
  CaseTypeSampler(CaseType type, const ModelParams& p,
                  const InfectivityProfile& profile)
      : type_(type), ct_(make_channel(Channel::kCt, p)),
        app_(make_channel(Channel::kApp, p)), u_app_(p.u_app) {
    const int action_day = p.t_sym + p.t_plan;
    switch (type) {
      case CaseType::kMiss:
      case CaseType::kSym:
        fixed_day_ = action_day;
        return;
      case CaseType::kPers: window_ = {p.t_pers, action_day, 0}; break;
      case CaseType::kCt: window_ = {p.t_ct, action_day, 0}; break;
      case CaseType::kAppPlus:
        window_ = {p.t_sym - 1, p.t_app + p.t_plan + 1, 0};
        break;
      case CaseType::kAppMinus:
        window_ = {p.t_app, p.t_sym - 1 - p.t_app, p.t_app + p.t_plan + 1};
        break;
    }
    if (window_.h < 1) {
      throw ModelError(ErrorKind::kInvalidArgument,
                       "empty infection window for case type " +
                           std::string(to_string(type)));
    }
    std::vector<double> weights;
    for (int x = 1; x <= window_.h; ++x) {
      weights.push_back(profile.i_w(x + window_.b));
    }
    if (std::all_of(weights.begin(), weights.end(),
                    [](double w) { return w == 0.0; })) {
      throw ModelError(ErrorKind::kZeroDenominator,
                       "infectivity weights vanish for case type " +
                           std::string(to_string(type)));
    }
    infection_day_ = std::discrete_distribution<int>(weights.begin(),
                                                     weights.end());
  }

  TreeSetup operator()(std::mt19937_64& rng) const {
    if (type_ == CaseType::kMiss) return {};
    if (type_ == CaseType::kSym) return {ct_, fixed_day_};
    // discrete_distribution::operator() is non-const; copies are cheap.
    auto dist = infection_day_;
    const int x = dist(rng) + 1;
    const int day = window_.l + window_.h + 1 - x;
    const bool mixed =
        type_ == CaseType::kAppPlus || type_ == CaseType::kAppMinus;
    if (mixed) {
      std::bernoulli_distribution uses_app(u_app_);
      return {uses_app(rng) ? app_ : ct_, day};
    }
    return {ct_, day};
  }

 private:
  CaseType type_;
  WarningChannel ct_;
  WarningChannel app_;
  double u_app_;
  int fixed_day_ = 0;
  LooseWindow window_;
  std::discrete_distribution<int> infection_day_;
};

// Ignores cfg.channel and cfg.index_quarantine_day; the case type decides.
inline SimOutcome empirical_case_type_taf(CaseType type, const SimConfig& cfg,
                                          const ModelParams& p,
                                          const InfectivityProfile& profile) {
  const CaseTypeSampler sampler(type, p, profile);
  return detail::run_trees(cfg, p, profile, sampler);
}

// Closed-form counterpart of simulate_trees for a fixed setup.
inline double analytic_taf(const SimConfig& cfg,
                           const InfectivityProfile& profile,
                           LambdaForm form = LambdaForm::kDirect) {
  if (!cfg.index_quarantine_day) {
    return profile.i_c_inf() * profile.i_c_inf();
  }
  const int q = *cfg.index_quarantine_day;
  if (!cfg.channel) return profile.i_c(q) * profile.i_c_inf();
  return lambda_alpha(q, *cfg.channel, profile, form);
}

}  // namespace taf
