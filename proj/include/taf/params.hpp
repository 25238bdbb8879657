#pragma once

// Scalar model parameters: severity rates, adherences, reach fractions and
// delays. Composite adherences (a_base, a_ct, a_app) are kept unrounded.

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <variant>
#include <vector>

#include "taf/error.hpp"

namespace taf {

struct ModelParams {
  // Severity rates per infection.
  double ihr = 0.0132;
  double iir = 0.0025;
  double ifr = 0.0060;

  double f_sym = 0.70;
  double a_sym = 0.50;
  double a_base = 0.50 * 0.70;  // a_sym * f_sym

  double a_ct_plus = 0.75;
  double a_ct_minus = 0.50;
  double a_ct = 0.70 * 0.75 + (1.0 - 0.70) * 0.50;
  double a_app_plus = 0.75;
  double a_app_minus = 0.50;
  double a_app = 0.70 * 0.75 + (1.0 - 0.70) * 0.50;

  double e_ct = 0.60;
  double e_app = 0.58;
  double f_ct = 0.50;
  double f_app = 0.50;
  double u_app = 0.16;

  // Delays in days.
  int t_sym = 5;
  int t_plan = 2;
  int t_ct = 3;
  int t_app = 2;
  int t_pers = 1;

  // Share of symptomless app-warned positives counted as pre-symptomatic.
  double presym_fraction = 0.20;

  bool operator==(const ModelParams&) const = default;
};

inline ModelParams default_params() { return ModelParams{}; }

inline double composite_base_adherence(const ModelParams& p) {
  return p.a_sym * p.f_sym;
}
inline double composite_ct_adherence(const ModelParams& p) {
  return p.f_sym * p.a_ct_plus + (1.0 - p.f_sym) * p.a_ct_minus;
}
inline double composite_app_adherence(const ModelParams& p) {
  return p.f_sym * p.a_app_plus + (1.0 - p.f_sym) * p.a_app_minus;
}

namespace detail {

using FieldPtr = std::variant<double ModelParams::*, int ModelParams::*>;

struct FieldInfo {
  std::string_view name;
  FieldPtr ptr;
};

inline constexpr std::array<FieldInfo, 23> kFields{{
    {"ihr", &ModelParams::ihr},
    {"iir", &ModelParams::iir},
    {"ifr", &ModelParams::ifr},
    {"f_sym", &ModelParams::f_sym},
    {"a_sym", &ModelParams::a_sym},
    {"a_base", &ModelParams::a_base},
    {"a_ct_plus", &ModelParams::a_ct_plus},
    {"a_ct_minus", &ModelParams::a_ct_minus},
    {"a_ct", &ModelParams::a_ct},
    {"a_app_plus", &ModelParams::a_app_plus},
    {"a_app_minus", &ModelParams::a_app_minus},
    {"a_app", &ModelParams::a_app},
    {"e_ct", &ModelParams::e_ct},
    {"e_app", &ModelParams::e_app},
    {"f_ct", &ModelParams::f_ct},
    {"f_app", &ModelParams::f_app},
    {"u_app", &ModelParams::u_app},
    {"t_sym", &ModelParams::t_sym},
    {"t_plan", &ModelParams::t_plan},
    {"t_ct", &ModelParams::t_ct},
    {"t_app", &ModelParams::t_app},
    {"t_pers", &ModelParams::t_pers},
    {"presym_fraction", &ModelParams::presym_fraction},
}};

inline const FieldInfo* find_field(std::string_view name) {
  for (const auto& f : kFields) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

inline bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end && !s.empty();
}

inline bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end && !s.empty();
}

inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace detail

inline bool is_param_name(std::string_view name) {
  return detail::find_field(name) != nullptr;
}

inline std::vector<std::string_view> param_names() {
  std::vector<std::string_view> names;
  for (const auto& f : detail::kFields) names.push_back(f.name);
  return names;
}

// Reads a field as double (delays widen losslessly).
inline double get_param(const ModelParams& p, std::string_view name) {
  const auto* f = detail::find_field(name);
  if (f == nullptr) {
    throw ModelError(ErrorKind::kUnknownKey,
                     "unknown parameter '" + std::string(name) + "'");
  }
  return std::visit(
      [&](auto ptr) -> double { return static_cast<double>(p.*ptr); },
      f->ptr);
}

// key = value assignments in application order.
using ParamOverrides = std::vector<std::pair<std::string, std::string>>;

// Applies overrides field-wise over `base`. A composite adherence is
// recomputed from its constituents unless it is itself overridden.
inline ModelParams apply_overrides(ModelParams base,
                                   const ParamOverrides& overrides) {
  bool set_base = false, set_ct = false, set_app = false;
  for (const auto& [key, value] : overrides) {
    const auto* f = detail::find_field(key);
    if (f == nullptr) {
      throw ModelError(ErrorKind::kUnknownKey,
                       "unknown parameter '" + key + "'");
    }
    if (key == "a_base") set_base = true;
    if (key == "a_ct") set_ct = true;
    if (key == "a_app") set_app = true;
    std::visit(
        [&](auto ptr) {
          using T = std::remove_cvref_t<decltype(base.*ptr)>;
          if constexpr (std::is_same_v<T, int>) {
            int v = 0;
            if (!detail::parse_int(value, v)) {
              throw ModelError(ErrorKind::kParse, "parameter '" + key +
                                                      "' expects an integer "
                                                      "day count, got '" +
                                                      value + "'");
            }
            base.*ptr = v;
          } else {
            double v = 0.0;
            if (!detail::parse_double(value, v)) {
              throw ModelError(ErrorKind::kParse, "parameter '" + key +
                                                      "' expects a number, "
                                                      "got '" + value + "'");
            }
            base.*ptr = v;
          }
        },
        f->ptr);
  }
  if (!set_base) base.a_base = composite_base_adherence(base);
  if (!set_ct) base.a_ct = composite_ct_adherence(base);
  if (!set_app) base.a_app = composite_app_adherence(base);
  return base;
}

inline ModelParams with_param(const ModelParams& base, std::string_view key,
                              double value) {
  return apply_overrides(
      base, {{std::string(key), detail::format_double(value)}});
}

// Parses a single "key=value" token as given on the command line.
inline std::pair<std::string, std::string> parse_assignment(
    std::string_view token) {
  const auto eq = token.find('=');
  if (eq == std::string_view::npos) {
    throw ModelError(ErrorKind::kParse, "expected key=value, got '" +
                                            std::string(token) + "'");
  }
  return {std::string(detail::trim(token.substr(0, eq))),
          std::string(detail::trim(token.substr(eq + 1)))};
}

// Config text: one "key = value" per line, '#' starts a comment.
inline ParamOverrides parse_config(std::istream& in,
                                   std::string_view source = "<config>") {
  ParamOverrides out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = detail::trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    const auto where = std::string(source) + ":" + std::to_string(lineno);
    if (eq == std::string_view::npos) {
      throw ModelError(ErrorKind::kParse,
                       where + ": expected 'key = value', got '" +
                           std::string(view) + "'");
    }
    auto key = std::string(detail::trim(view.substr(0, eq)));
    auto value = std::string(detail::trim(view.substr(eq + 1)));
    if (!is_param_name(key)) {
      throw ModelError(ErrorKind::kUnknownKey,
                       where + ": unknown parameter '" + key + "'");
    }
    out.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

inline ParamOverrides read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ModelError(ErrorKind::kIo, "cannot open config file '" + path + "'");
  }
  return parse_config(in, path);
}

// Writes every field at round-trip precision.
inline std::string write_config(const ModelParams& p) {
  std::ostringstream out;
  for (const auto& f : detail::kFields) {
    out << f.name << " = ";
    std::visit(
        [&](auto ptr) {
          using T = std::remove_cvref_t<decltype(p.*ptr)>;
          if constexpr (std::is_same_v<T, int>) {
            out << p.*ptr;
          } else {
            out << detail::format_double(p.*ptr);
          }
        },
        f.ptr);
    out << '\n';
  }
  return out.str();
}

inline ValidationReport validate(const ModelParams& p) {
  ValidationReport report;
  for (const auto& f : detail::kFields) {
    std::visit(
        [&](auto ptr) {
          using T = std::remove_cvref_t<decltype(p.*ptr)>;
          const auto v = p.*ptr;
          if constexpr (std::is_same_v<T, int>) {
            if (v < 0) {
              report.add(std::string(f.name),
                         "delay must be >= 0, got " + std::to_string(v));
            }
          } else {
            if (!(v >= 0.0 && v <= 1.0)) {
              report.add(std::string(f.name),
                         "fraction must lie in [0,1], got " +
                             detail::format_double(v));
            }
          }
        },
        f.ptr);
  }
  return report;
}

}  // namespace taf
