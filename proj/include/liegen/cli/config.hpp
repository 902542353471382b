#pragma once

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cctype>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace liegen::cli {

/// Malformed config file or flag value; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, csv, text };

inline const char* format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "?";
}

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  if (s == "text") return OutputFormat::text;
  throw ConfigError("unknown output format '" + s + "' (expected json, csv or text)");
}

struct SuiteConfig {
  struct General {
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 20240601;
  } general;

  struct Groups {
    std::size_t samples = 100;
    double e2_tol = 1e-12;
    unsigned max_degree = 6;  // monomial test space for commutation tables
    std::vector<std::int64_t> scaled_R{1, 10, 1000};
  } groups;

  struct Hermite {
    unsigned max_n = 64;
    unsigned genfunc_order = 64;
    unsigned disentangle_order = 32;
    unsigned orthonormality_max_n = 20;
    unsigned anticommutator_max_n = 32;
    unsigned discrete_dimension = 40;
  } hermite;

  struct Bessel {
    std::vector<int> orders{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    std::vector<double> r_values{0.1, 0.5, 1, 2, 5, 10, 20};
    double identity_tol = 1e-10;
    double ode_small_r = 0.1;  // radius at which the ODE gate is relaxed
    double ode_small_r_tol = 1e-9;
    std::vector<double> crosscheck_r{0.2, 0.5, 1, 2, 5, 10};
    std::vector<double> crosscheck_phi{0, 1.1};
    double crosscheck_tol = 1e-6;
    std::vector<int> genfunc_orders{0, 1, 2};
    std::vector<double> genfunc_r{1, 2, 5};
    std::vector<double> genfunc_phi{0, 0.7, std::numbers::pi / 3};
    std::vector<double> genfunc_t_abs{0.1, 0.3, 0.5};
    unsigned genfunc_terms = 30;
    double genfunc_tol = 1e-8;
  } bessel;

  struct Contraction {
    std::vector<std::int64_t> R_values{8, 16, 32, 64, 128, 256, 512, 1024};
    std::vector<int> l_values{64, 128, 256, 512, 1024};
    double rate_target = 0.5;
    double rate_tol = 0.1;
    int legendre_max_m = 3;
    std::vector<double> legendre_r{1, 2, 4};
    double legendre_ratio_max = 0.5;
    double mehler_rel_tol = 0.02;
    double mehler_abs_tol = 0.005;
    std::vector<double> ladder_r{0.5, 1, 2.5};
    std::vector<int> ladder_orders{0, 1, 3};
  } contraction;

  struct Diagnostics {
    double flow_r0 = 2, flow_phi0 = 0.5, flow_t = 0.3;
    std::size_t flow_steps = 10000;
  } diagnostics;

  /// Override every absolute floating tolerance (the --tol flag).
  void set_tolerance(double tol) {
    groups.e2_tol = bessel.identity_tol = bessel.ode_small_r_tol = bessel.crosscheck_tol = bessel.genfunc_tol = tol;
  }

  void validate() const;
};

namespace detail {

template <typename T>
T parse_scalar(const std::string& key, const std::string& raw) {
  std::istringstream is(raw);
  is.imbue(std::locale::classic());
  T value{};
  if (!(is >> value) || !(is >> std::ws).eof()) throw ConfigError("bad value for '" + key + "': '" + raw + "'");
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& raw) {
  std::vector<T> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("empty list item in '" + key + "'");
    out.push_back(parse_scalar<T>(key, item.substr(b, e - b + 1)));
  }
  return out;
}

template <typename T>
void assign(const std::string& key, const std::string& raw, T& target) {
  target = parse_scalar<T>(key, raw);
}

template <typename T>
void assign(const std::string& key, const std::string& raw, std::vector<T>& target) {
  target = parse_list<T>(key, raw);
}

/// Drops a trailing "  ; ..." or "  # ..." comment and surrounding blanks.
inline std::string strip_inline_comment(std::string raw) {
  for (std::size_t i = 1; i < raw.size(); ++i)
    if ((raw[i] == ';' || raw[i] == '#') && std::isspace(static_cast<unsigned char>(raw[i - 1]))) {
      raw.resize(i);
      break;
    }
  const auto end = raw.find_last_not_of(" \t");
  return end == std::string::npos ? std::string() : raw.substr(0, end + 1);
}

inline void assign(const std::string&, const std::string& raw, OutputFormat& target) {
  target = parse_format(raw);
}

}  // namespace detail

/// Applies one "section.key = value" setting; unknown keys are errors.
inline void apply_setting(SuiteConfig& c, const std::string& key, const std::string& raw) {
  using detail::assign;
#define LIEGEN_KEY(name, field) \
  if (key == name) return assign(key, raw, field)
  LIEGEN_KEY("general.format", c.general.format);
  LIEGEN_KEY("general.seed", c.general.seed);
  LIEGEN_KEY("groups.samples", c.groups.samples);
  LIEGEN_KEY("groups.e2_tol", c.groups.e2_tol);
  LIEGEN_KEY("groups.max_degree", c.groups.max_degree);
  LIEGEN_KEY("groups.scaled_R", c.groups.scaled_R);
  LIEGEN_KEY("hermite.max_n", c.hermite.max_n);
  LIEGEN_KEY("hermite.genfunc_order", c.hermite.genfunc_order);
  LIEGEN_KEY("hermite.disentangle_order", c.hermite.disentangle_order);
  LIEGEN_KEY("hermite.orthonormality_max_n", c.hermite.orthonormality_max_n);
  LIEGEN_KEY("hermite.anticommutator_max_n", c.hermite.anticommutator_max_n);
  LIEGEN_KEY("hermite.discrete_dimension", c.hermite.discrete_dimension);
  LIEGEN_KEY("bessel.orders", c.bessel.orders);
  LIEGEN_KEY("bessel.r_values", c.bessel.r_values);
  LIEGEN_KEY("bessel.identity_tol", c.bessel.identity_tol);
  LIEGEN_KEY("bessel.ode_small_r", c.bessel.ode_small_r);
  LIEGEN_KEY("bessel.ode_small_r_tol", c.bessel.ode_small_r_tol);
  LIEGEN_KEY("bessel.crosscheck_r", c.bessel.crosscheck_r);
  LIEGEN_KEY("bessel.crosscheck_phi", c.bessel.crosscheck_phi);
  LIEGEN_KEY("bessel.crosscheck_tol", c.bessel.crosscheck_tol);
  LIEGEN_KEY("bessel.genfunc_orders", c.bessel.genfunc_orders);
  LIEGEN_KEY("bessel.genfunc_r", c.bessel.genfunc_r);
  LIEGEN_KEY("bessel.genfunc_phi", c.bessel.genfunc_phi);
  LIEGEN_KEY("bessel.genfunc_t_abs", c.bessel.genfunc_t_abs);
  LIEGEN_KEY("bessel.genfunc_terms", c.bessel.genfunc_terms);
  LIEGEN_KEY("bessel.genfunc_tol", c.bessel.genfunc_tol);
  LIEGEN_KEY("contraction.R_values", c.contraction.R_values);
  LIEGEN_KEY("contraction.l_values", c.contraction.l_values);
  LIEGEN_KEY("contraction.rate_target", c.contraction.rate_target);
  LIEGEN_KEY("contraction.rate_tol", c.contraction.rate_tol);
  LIEGEN_KEY("contraction.legendre_max_m", c.contraction.legendre_max_m);
  LIEGEN_KEY("contraction.legendre_r", c.contraction.legendre_r);
  LIEGEN_KEY("contraction.legendre_ratio_max", c.contraction.legendre_ratio_max);
  LIEGEN_KEY("contraction.mehler_rel_tol", c.contraction.mehler_rel_tol);
  LIEGEN_KEY("contraction.mehler_abs_tol", c.contraction.mehler_abs_tol);
  LIEGEN_KEY("contraction.ladder_r", c.contraction.ladder_r);
  LIEGEN_KEY("contraction.ladder_orders", c.contraction.ladder_orders);
  LIEGEN_KEY("diagnostics.flow_r0", c.diagnostics.flow_r0);
  LIEGEN_KEY("diagnostics.flow_phi0", c.diagnostics.flow_phi0);
  LIEGEN_KEY("diagnostics.flow_t", c.diagnostics.flow_t);
  LIEGEN_KEY("diagnostics.flow_steps", c.diagnostics.flow_steps);
#undef LIEGEN_KEY
  throw ConfigError("unknown config key '" + key + "'");
}

inline void SuiteConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0)) throw ConfigError(std::string(name) + " must be > 0");
  };
  auto nonempty = [](std::size_t n, const char* name) {
    if (n == 0) throw ConfigError(std::string(name) + " must not be empty");
  };
  positive(groups.e2_tol, "groups.e2_tol");
  positive(bessel.identity_tol, "bessel.identity_tol");
  positive(bessel.ode_small_r_tol, "bessel.ode_small_r_tol");
  positive(bessel.crosscheck_tol, "bessel.crosscheck_tol");
  positive(bessel.genfunc_tol, "bessel.genfunc_tol");
  positive(contraction.rate_tol, "contraction.rate_tol");
  positive(contraction.legendre_ratio_max, "contraction.legendre_ratio_max");
  positive(contraction.mehler_rel_tol, "contraction.mehler_rel_tol");
  positive(contraction.mehler_abs_tol, "contraction.mehler_abs_tol");
  if (groups.samples == 0) throw ConfigError("groups.samples must be > 0");
  if (diagnostics.flow_steps == 0) throw ConfigError("diagnostics.flow_steps must be > 0");
  nonempty(groups.scaled_R.size(), "groups.scaled_R");
  nonempty(bessel.orders.size(), "bessel.orders");
  nonempty(bessel.r_values.size(), "bessel.r_values");
  nonempty(bessel.crosscheck_r.size(), "bessel.crosscheck_r");
  nonempty(bessel.crosscheck_phi.size(), "bessel.crosscheck_phi");
  nonempty(bessel.genfunc_orders.size(), "bessel.genfunc_orders");
  nonempty(bessel.genfunc_r.size(), "bessel.genfunc_r");
  nonempty(bessel.genfunc_phi.size(), "bessel.genfunc_phi");
  nonempty(bessel.genfunc_t_abs.size(), "bessel.genfunc_t_abs");
  nonempty(contraction.l_values.size(), "contraction.l_values");
  nonempty(contraction.legendre_r.size(), "contraction.legendre_r");
  nonempty(contraction.ladder_r.size(), "contraction.ladder_r");
  nonempty(contraction.ladder_orders.size(), "contraction.ladder_orders");
  if (contraction.R_values.size() < 2) throw ConfigError("contraction.R_values needs at least two entries");
  for (auto R : contraction.R_values)
    if (R <= 0) throw ConfigError("contraction.R_values must be positive");
  for (auto R : groups.scaled_R)
    if (R <= 0) throw ConfigError("groups.scaled_R must be positive");
}

/// Reads an INI-style file ("[section]" headers, "key = value" lines, '#' or
/// ';' comments) on top of the defaults.
inline SuiteConfig load_config(std::istream& in, SuiteConfig base = {}) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("config key '" + section + "' is outside any [section]");
    for (const auto& [key, value] : body) apply_setting(base, section + "." + key, detail::strip_inline_comment(value.data()));
  }
  base.validate();
  return base;
}

inline SuiteConfig load_config_file(const std::string& path, SuiteConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return load_config(in, std::move(base));
}

/// Effective configuration as JSON, echoed into every report.
inline nlohmann::json config_to_json(const SuiteConfig& c) {
  using nlohmann::json;
  return json{
      {"general", {{"format", format_name(c.general.format)}, {"seed", c.general.seed}}},
      {"groups",
       {{"samples", c.groups.samples},
        {"e2_tol", c.groups.e2_tol},
        {"max_degree", c.groups.max_degree},
        {"scaled_R", c.groups.scaled_R}}},
      {"hermite",
       {{"max_n", c.hermite.max_n},
        {"genfunc_order", c.hermite.genfunc_order},
        {"disentangle_order", c.hermite.disentangle_order},
        {"orthonormality_max_n", c.hermite.orthonormality_max_n},
        {"anticommutator_max_n", c.hermite.anticommutator_max_n},
        {"discrete_dimension", c.hermite.discrete_dimension}}},
      {"bessel",
       {{"orders", c.bessel.orders},
        {"r_values", c.bessel.r_values},
        {"identity_tol", c.bessel.identity_tol},
        {"ode_small_r", c.bessel.ode_small_r},
        {"ode_small_r_tol", c.bessel.ode_small_r_tol},
        {"crosscheck_r", c.bessel.crosscheck_r},
        {"crosscheck_phi", c.bessel.crosscheck_phi},
        {"crosscheck_tol", c.bessel.crosscheck_tol},
        {"genfunc_orders", c.bessel.genfunc_orders},
        {"genfunc_r", c.bessel.genfunc_r},
        {"genfunc_phi", c.bessel.genfunc_phi},
        {"genfunc_t_abs", c.bessel.genfunc_t_abs},
        {"genfunc_terms", c.bessel.genfunc_terms},
        {"genfunc_tol", c.bessel.genfunc_tol}}},
      {"contraction",
       {{"R_values", c.contraction.R_values},
        {"l_values", c.contraction.l_values},
        {"rate_target", c.contraction.rate_target},
        {"rate_tol", c.contraction.rate_tol},
        {"legendre_max_m", c.contraction.legendre_max_m},
        {"legendre_r", c.contraction.legendre_r},
        {"legendre_ratio_max", c.contraction.legendre_ratio_max},
        {"mehler_rel_tol", c.contraction.mehler_rel_tol},
        {"mehler_abs_tol", c.contraction.mehler_abs_tol},
        {"ladder_r", c.contraction.ladder_r},
        {"ladder_orders", c.contraction.ladder_orders}}},
      {"diagnostics",
       {{"flow_r0", c.diagnostics.flow_r0},
        {"flow_phi0", c.diagnostics.flow_phi0},
        {"flow_t", c.diagnostics.flow_t},
        {"flow_steps", c.diagnostics.flow_steps}}},
  };
}

}  // namespace liegen::cli
