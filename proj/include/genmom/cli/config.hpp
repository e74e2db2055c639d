#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace genmom::cli {

/// Invalid command-line configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Suite { kernel, fourier, operators, eigen, well, commutator, ortho, all };
enum class Format { json, csv };

inline const std::vector<std::pair<std::string_view, Suite>>& suite_names() {
  static const std::vector<std::pair<std::string_view, Suite>> names = {
      {"kernel", Suite::kernel}, {"fourier", Suite::fourier}, {"operators", Suite::operators},
      {"eigen", Suite::eigen},   {"well", Suite::well},       {"commutator", Suite::commutator},
      {"ortho", Suite::ortho},   {"all", Suite::all}};
  return names;
}

inline Suite parse_suite(std::string_view s) {
  for (const auto& [name, v] : suite_names()) {
    if (name == s) return v;
  }
  throw ConfigError("unknown suite '" + std::string(s) + "'");
}

inline std::string_view to_string(Suite s) {
  for (const auto& [name, v] : suite_names()) {
    if (v == s) return name;
  }
  return "?";
}

inline Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw ConfigError("unknown format '" + std::string(s) + "' (expected json or csv)");
}

/// Named real parameters with defaults. Ordered so reports are deterministic.
class Params {
 public:
  Params() : values_(defaults()) {}

  static const std::map<std::string, double>& defaults() {
    static const std::map<std::string, double> d = {
        {"a", 0.5},       {"b", 0.0},        {"c", 0.3},        {"d", 0.0},
        {"k", 1.0},       {"x", 1.0},        {"L", 1.0},        {"m", 1.0},
        {"n_max", 5},     {"x_min", -40.0},  {"x_max", 40.0},   {"k_min", -40.0},
        {"k_max", 40.0},  {"n", 8001},       {"eigen_n", 2001}, {"well_n", 8001},
        {"draws", 50},    {"states", 100},   {"seed", 1},       {"ortho_a", 0.3},
        {"ortho_k", 1.2}, {"ortho_kp", 0.7}, {"X", 40.0},       {"state_x", 12.0},
        {"state_k", 20.0}, {"state_n", 1201}, {"kernel_x", 4.0},  {"kernel_n", 2001},
        {"bump_x", 10.0},  {"bump_n", 4001},   {"eigen_x", 5.0}};
    return d;
  }

  void set(const std::string& key, double value) {
    if (!values_.contains(key)) throw ConfigError("unknown parameter '" + key + "'");
    values_[key] = value;
  }

  /// Parses "key=value".
  void set_assignment(const std::string& kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw ConfigError("expected key=value, got '" + kv + "'");
    const std::string key = kv.substr(0, eq);
    const std::string text = kv.substr(eq + 1);
    double v = 0.0;
    std::size_t used = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      throw ConfigError("parameter '" + key + "': '" + text + "' is not a number");
    }
    if (used != text.size() || !std::isfinite(v)) {
      throw ConfigError("parameter '" + key + "': '" + text + "' is not a finite number");
    }
    set(key, v);
  }

  double operator[](const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError("unknown parameter '" + key + "'");
    return it->second;
  }

  std::size_t count(const std::string& key) const { return static_cast<std::size_t>((*this)[key]); }

  const std::map<std::string, double>& all() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

namespace detail {

inline void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

inline bool is_integer(double v) { return std::floor(v) == v; }

inline void require_grid_size(const Params& p, const std::string& key) {
  const double v = p[key];
  require(is_integer(v) && v >= 9 && static_cast<long long>(v) % 2 == 1,
          key + " must be an odd integer >= 9");
}

}  // namespace detail

/// Checks every parameter against its module's validity domain.
inline void validate(const Params& p) {
  using detail::require;
  require(std::abs(p["a"]) < 1.0, "a out of domain |a| < 1");
  require(std::abs(p["b"]) < 1.0, "b out of domain |b| < 1");
  require(p["a"] * p["a"] + p["b"] * p["b"] < 1.0, "(a, b) out of domain a^2 + b^2 < 1");
  require(std::abs(p["c"]) < 1.0, "c out of domain |c| < 1");
  require(std::abs(p["d"]) < 1.0, "d out of domain |d| < 1");
  require(p["c"] * p["c"] + p["d"] * p["d"] < 1.0, "(c, d) out of domain c^2 + d^2 < 1");
  require(std::abs(p["ortho_a"]) < 1.0, "ortho_a out of domain |ortho_a| < 1");
  require(p["L"] > 0.0, "L must be positive");
  require(p["m"] > 0.0, "m must be positive");
  require(p["X"] > 0.0, "X must be positive");
  require(p["x_max"] > p["x_min"], "x_max must exceed x_min");
  require(p["k_max"] > p["k_min"], "k_max must exceed k_min");
  for (const char* key : {"state_x", "state_k", "kernel_x", "bump_x", "eigen_x"}) {
    require(p[key] > 0.0, std::string(key) + " must be positive");
  }
  for (const char* key : {"n", "eigen_n", "well_n", "state_n", "kernel_n", "bump_n"}) detail::require_grid_size(p, key);
  for (const char* key : {"n_max", "draws", "states"}) {
    require(detail::is_integer(p[key]) && p[key] >= 1, std::string(key) + " must be a positive integer");
  }
  require(detail::is_integer(p["seed"]) && p["seed"] >= 0, "seed must be a non-negative integer");
}

struct RunConfig {
  Suite suite = Suite::all;
  Params params;
  std::string output_path;
  Format format = Format::json;
};

}  // namespace genmom::cli
