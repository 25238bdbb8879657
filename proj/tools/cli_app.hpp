#pragma once

// Command-line front end. Subcommands:
//   estimate      counterfactual weekly series and summary
//   lambda-table  infectivity rows, TAF rows and per-type constants
//   simulate      Monte Carlo check of a TAF
//   sweep         estimate summary for each value of one parameter
//   validate      parameter and input checks only
//
// Exit codes: 0 success, 1 usage/input error, 2 validation violations.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "taf/taf.hpp"

namespace taf::cli {

struct Options {
  std::string config;
  std::vector<std::string> params;
  std::string data;
  std::string hosp;
  bool raw = false;
  bool presplit = false;
  std::string out;
  std::string recurrence = "propagated";
  std::string sweep;
  std::uint64_t trees = 100000;
  std::uint64_t seed = 1;
  double r0 = 2.0;
  int horizon = 28;
  std::string type;
  std::string channel = "none";
  int quarantine_day = 0;
  unsigned threads = 0;
};

struct Inputs {
  ParamOverrides overrides;
  ModelParams params;
};

inline void print_report(std::ostream& err, const std::string& what,
                         const ValidationReport& report) {
  for (const auto& v : report.violations()) {
    err << what << ": " << v.field << ": " << v.message << '\n';
  }
}

inline ParamOverrides collect_overrides(const Options& o) {
  ParamOverrides overrides;
  if (!o.config.empty()) overrides = read_config_file(o.config);
  for (const auto& token : o.params) {
    auto kv = parse_assignment(token);
    if (!is_param_name(kv.first)) {
      throw ModelError(ErrorKind::kUnknownKey,
                       "--param: unknown parameter '" + kv.first + "'");
    }
    overrides.push_back(std::move(kv));
  }
  return overrides;
}

inline CaseSeries load_series(const Options& o, const ModelParams& p) {
  if (o.raw && o.presplit) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "--raw and --presplit are mutually exclusive");
  }
  if (o.raw) {
    if (o.data.empty() || o.hosp.empty()) {
      throw ModelError(ErrorKind::kInvalidArgument,
                       "--raw needs both --data and --hosp");
    }
    const auto raw = read_raw_csv(csv::read_file(o.data));
    const auto hosp = read_hospitalizations_csv(csv::read_file(o.hosp));
    return build_series(raw, hosp, p);
  }
  if (!o.hosp.empty()) {
    throw ModelError(ErrorKind::kInvalidArgument, "--hosp requires --raw");
  }
  if (o.data.empty()) return load_fixture();
  return read_presplit_csv(csv::read_file(o.data));
}

inline RecurrenceMode parse_recurrence(const std::string& s) {
  if (s == "propagated") return RecurrenceMode::kPropagated;
  if (s == "as-printed") return RecurrenceMode::kAsPrinted;
  throw ModelError(ErrorKind::kInvalidArgument,
                   "unknown recurrence '" + s + "'");
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw ModelError(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  }
  f << text;
}

// Returns false after reporting violations.
inline bool checked(const ValidationReport& report, const std::string& what,
                    std::ostream& err) {
  print_report(err, what, report);
  return report.ok();
}

inline int run_estimate(const Options& o, std::ostream& out,
                        std::ostream& err) {
  const auto params = apply_overrides(default_params(), collect_overrides(o));
  if (!checked(validate(params), "params", err)) return 2;
  const auto series = load_series(o, params);
  if (!checked(validate_series(series), "data", err)) return 2;
  const auto e = estimate(series, params, parse_recurrence(o.recurrence));

  std::ostringstream summary;
  report::write_summary_text(summary, e);
  out << summary.str();
  if (!o.out.empty()) {
    const std::filesystem::path dir(o.out);
    std::filesystem::create_directories(dir);
    std::ostringstream weekly, summary_csv;
    report::write_weekly_csv(weekly, e);
    report::write_summary_csv(summary_csv, e);
    write_file(dir / "weekly.csv", weekly.str());
    write_file(dir / "summary.txt", summary.str());
    write_file(dir / "summary.csv", summary_csv.str());
  }
  return 0;
}

inline int run_lambda_table(const Options& o, std::ostream& out,
                            std::ostream& err) {
  const auto params = apply_overrides(default_params(), collect_overrides(o));
  if (!checked(validate(params), "params", err)) return 2;
  const InfectivityProfile profile(params);
  const auto cal = calibrate_lambda_form();
  const auto table = build_lambda_table(params, profile, cal.chosen);
  std::ostringstream text;
  report::write_lambda_table(text, profile, table, cal,
                             params == default_params());
  out << text.str();
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    write_file(std::filesystem::path(o.out) / "lambda_table.csv", text.str());
  }
  return 0;
}

inline int run_simulate(const Options& o, std::ostream& out,
                        std::ostream& err) {
  const auto params = apply_overrides(default_params(), collect_overrides(o));
  if (!checked(validate(params), "params", err)) return 2;
  const InfectivityProfile profile(params);
  SimConfig cfg;
  cfg.trees = o.trees;
  cfg.seed = o.seed;
  cfg.r0 = o.r0;
  cfg.horizon = o.horizon;
  cfg.threads = o.threads;

  const auto form = calibrate_lambda_form().chosen;
  std::string scenario;
  SimOutcome outcome;
  double analytic = 0.0;
  if (!o.type.empty()) {
    const auto type = parse_case_type(o.type);
    scenario = std::string(to_string(type));
    outcome = empirical_case_type_taf(type, cfg, params, profile);
    analytic = case_type_lambdas(params, profile, form)[type];
  } else {
    if (o.channel == "ct") {
      cfg.channel = make_channel(Channel::kCt, params);
    } else if (o.channel == "app") {
      cfg.channel = make_channel(Channel::kApp, params);
    } else if (o.channel != "none") {
      throw ModelError(ErrorKind::kInvalidArgument,
                       "unknown channel '" + o.channel + "'");
    }
    if (o.quarantine_day > 0) cfg.index_quarantine_day = o.quarantine_day;
    scenario = "channel=" + o.channel + ";quarantine_day=" +
               (cfg.index_quarantine_day
                    ? std::to_string(*cfg.index_quarantine_day)
                    : std::string("never"));
    outcome = simulate_trees(cfg, params, profile);
    analytic = analytic_taf(cfg, profile, form);
  }
  report::write_sim_header(out);
  report::write_sim_row(out, scenario, cfg, outcome, analytic);
  return 0;
}

inline int run_sweep(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.sweep.empty()) {
    throw ModelError(ErrorKind::kInvalidArgument, "--sweep key=v1,v2,... required");
  }
  const auto [key, list] = parse_assignment(o.sweep);
  if (!is_param_name(key)) {
    throw ModelError(ErrorKind::kUnknownKey,
                     "--sweep: unknown parameter '" + key + "'");
  }
  std::vector<std::string> values;
  if (!list.empty()) {
    for (auto& v : csv::split(list)) {
      if (v.empty()) {
        throw ModelError(ErrorKind::kParse, "--sweep: empty value in list");
      }
      values.push_back(std::move(v));
    }
  }
  if (values.empty()) {
    throw ModelError(ErrorKind::kInvalidArgument,
                     "--sweep: no values given for '" + key + "'");
  }
  const auto base = collect_overrides(o);
  const auto mode = parse_recurrence(o.recurrence);

  std::ostringstream text;
  text << "parameter,value,s_ct,s_app,hosp_ct,icu_ct,deaths_ct,hosp_app,"
          "icu_app,deaths_app,rt_reduction_ct,rt_reduction_app\n";
  for (const auto& value : values) {
    auto overrides = base;
    overrides.emplace_back(key, value);
    const auto params = apply_overrides(default_params(), overrides);
    if (!checked(validate(params), "params", err)) return 2;
    const auto series = load_series(o, params);
    if (!checked(validate_series(series), "data", err)) return 2;
    const auto e = estimate(series, params, mode);
    text << key << ',' << value << ',' << report::count(e.ct.s_total) << ','
         << report::count(e.app.s_total) << ','
         << report::count(e.ct.averted_hospitalizations) << ','
         << report::count(e.ct.averted_icu) << ','
         << report::count(e.ct.averted_deaths) << ','
         << report::count(e.app.averted_hospitalizations) << ','
         << report::count(e.app.averted_icu) << ','
         << report::count(e.app.averted_deaths) << ','
         << report::rate(e.ct.rt_reduction_avg) << ','
         << report::rate(e.app.rt_reduction_avg) << '\n';
  }
  out << text.str();
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    write_file(std::filesystem::path(o.out) / "sweep.csv", text.str());
  }
  return 0;
}

inline int run_validate(const Options& o, std::ostream& out,
                        std::ostream& err) {
  const auto params = apply_overrides(default_params(), collect_overrides(o));
  auto report = validate(params);
  bool ok = checked(report, "params", err);
  if (ok) {
    const auto series = load_series(o, params);
    ok = checked(validate_series(series), "data", err);
    if (ok) out << "ok: " << series.size() << " weeks, parameters valid\n";
  }
  return ok ? 0 : 2;
}

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Tertiary attack fraction model of contact-tracing "
               "effectiveness"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "key = value parameter file");
    cmd->add_option("--param", o.params, "override, key=value (repeatable)");
    cmd->add_option("--out", o.out, "output directory");
  };
  auto add_data = [&](CLI::App* cmd) {
    cmd->add_option("--data", o.data, "weekly case CSV (default: shipped series)");
    cmd->add_option("--hosp", o.hosp, "daily hospitalizations CSV (with --raw)");
    cmd->add_flag("--raw", o.raw, "raw weekly counts, split by parameters");
    cmd->add_flag("--presplit", o.presplit, "already-split weekly counts");
    cmd->add_option("--recurrence", o.recurrence,
                    "propagated (default) or as-printed");
  };

  auto* est = app.add_subcommand("estimate", "averted cases, severity and Rt");
  add_common(est);
  add_data(est);
  auto* lt = app.add_subcommand("lambda-table", "print TAF rows and constants");
  add_common(lt);
  auto* sim = app.add_subcommand("simulate", "Monte Carlo TAF check");
  add_common(sim);
  sim->add_option("--trees", o.trees, "index cases to simulate");
  sim->add_option("--seed", o.seed, "random seed");
  sim->add_option("--r0", o.r0, "mean secondaries per unimpeded index");
  sim->add_option("--horizon", o.horizon, "days simulated per generation");
  sim->add_option("--type", o.type,
                  "case type: miss, sym, pers, ct, app_plus, app_minus");
  sim->add_option("--channel", o.channel, "none, ct or app (without --type)");
  sim->add_option("--quarantine-day", o.quarantine_day,
                  "index quarantine day (without --type; 0 = never)");
  sim->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  auto* sw = app.add_subcommand("sweep", "estimate per parameter value");
  add_common(sw);
  add_data(sw);
  sw->add_option("--sweep", o.sweep, "key=v1,v2,...")->required();
  auto* val = app.add_subcommand("validate", "check parameters and inputs");
  add_common(val);
  add_data(val);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (est->parsed()) return run_estimate(o, out, err);
    if (lt->parsed()) return run_lambda_table(o, out, err);
    if (sim->parsed()) return run_simulate(o, out, err);
    if (sw->parsed()) return run_sweep(o, out, err);
    if (val->parsed()) return run_validate(o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace taf::cli
