#pragma once

// Scenario data model and the flat `key = value` scenario file format.
//
// Units: hbar = c = 1, lengths in units of the initial probe width b, times in
// units of b/c. Every scenario parameter is a dimensionless number.

#include <sglight/error.hpp>
#include <sglight/format.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sglight {

enum class Mode { MagneticGradient, OpticalGradient, Uniform };

inline std::string_view to_string(Mode m) {
  switch (m) {
    case Mode::MagneticGradient: return "MagneticGradient";
    case Mode::OpticalGradient: return "OpticalGradient";
    case Mode::Uniform: return "Uniform";
  }
  return "?";
}

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "MagneticGradient") return Mode::MagneticGradient;
  if (s == "OpticalGradient") return Mode::OpticalGradient;
  if (s == "Uniform") return Mode::Uniform;
  return std::nullopt;
}

struct Scenario {
  Mode mode = Mode::Uniform;
  double coupling_g = 1.0;
  double atom_number = 1.0;
  double gamma_excited = 1.0;
  double gamma_ground = 0.0;
  std::array<double, 4> mu{};  // magnetic moments of levels 1..4
  double b0 = 0.0;
  double b1 = 0.0;
  double omega0 = 1.0;
  double sigma_ctrl = 1.0;
  double k_probe = 1.0;
  double c_light = 1.0;
  double probe_a = 0.0;
  double probe_b = 1.0;
  double medium_length = 1.0;
  std::array<double, 3> bare_detunings{};  // probe 1, probe 2, control

  bool operator==(const Scenario&) const = default;

  /// Coupling strength |g|^2 N.
  double coupling_strength() const { return coupling_g * coupling_g * atom_number; }
  /// Transit time through the cell, L/c.
  double transit_time() const { return medium_length / c_light; }
};

using KeyValues = std::vector<std::pair<std::string, std::string>>;

namespace detail {

using ScalarField = double Scenario::*;
using Vec4Field = std::array<double, 4> Scenario::*;
using Vec3Field = std::array<double, 3> Scenario::*;
struct ModeField {};

struct FieldSpec {
  std::string_view name;
  std::variant<ScalarField, Vec4Field, Vec3Field, ModeField> member;
  bool required;
};

inline const std::array<FieldSpec, 16>& field_table() {
  static const std::array<FieldSpec, 16> table{{
      {"mode", ModeField{}, true},
      {"coupling_g", &Scenario::coupling_g, true},
      {"atom_number", &Scenario::atom_number, true},
      {"gamma_excited", &Scenario::gamma_excited, false},
      {"gamma_ground", &Scenario::gamma_ground, false},
      {"mu", &Scenario::mu, true},
      {"b0", &Scenario::b0, false},
      {"b1", &Scenario::b1, false},
      {"omega0", &Scenario::omega0, true},
      {"sigma_ctrl", &Scenario::sigma_ctrl, false},
      {"k_probe", &Scenario::k_probe, true},
      {"c_light", &Scenario::c_light, false},
      {"probe_a", &Scenario::probe_a, false},
      {"probe_b", &Scenario::probe_b, true},
      {"medium_length", &Scenario::medium_length, true},
      {"bare_detunings", &Scenario::bare_detunings, false},
  }};
  return table;
}

inline const FieldSpec* find_field(std::string_view key) {
  for (const auto& f : field_table())
    if (f.name == key) return &f;
  return nullptr;
}

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline double parse_real(std::string_view key, std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw ConfigError(ConfigError::Kind::BadValue, std::string(key),
                      "not a number: '" + std::string(text) + "'");
  if (!std::isfinite(v))
    throw ConfigError(ConfigError::Kind::BadValue, std::string(key), "must be finite");
  return v;
}

template <std::size_t N>
std::array<double, N> parse_vector(std::string_view key, std::string_view text) {
  std::array<double, N> out{};
  std::size_t count = 0;
  while (true) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    if (count == N)
      throw ConfigError(ConfigError::Kind::BadValue, std::string(key),
                        "expected " + std::to_string(N) + " comma-separated values");
    out[count++] = parse_real(key, item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (count != N)
    throw ConfigError(ConfigError::Kind::BadValue, std::string(key),
                      "expected " + std::to_string(N) + " comma-separated values");
  return out;
}

template <std::size_t N>
std::string join(const std::array<double, N>& v) {
  std::string s;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) s += ", ";
    s += fmt_exact(v[i]);
  }
  return s;
}

inline void require(bool ok, std::string_view key, const char* reason) {
  if (!ok) throw ConfigError(ConfigError::Kind::BadValue, std::string(key), reason);
}

}  // namespace detail

/// Splits scenario text into ordered (key, value) entries. `#` starts a comment.
inline KeyValues parse_key_values(std::string_view text) {
  KeyValues entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError(ConfigError::Kind::Syntax, "line " + std::to_string(line_no),
                        "expected 'key = value'");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key.empty())
      throw ConfigError(ConfigError::Kind::Syntax, "line " + std::to_string(line_no), "empty key");
    entries.emplace_back(std::string(key), std::string(value));
  }
  return entries;
}

/// Parses a `key=value` override as given on the command line.
inline std::pair<std::string, std::string> parse_override(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos)
    throw ConfigError(ConfigError::Kind::Syntax, std::string(text), "override must be key=value");
  return {std::string(detail::trim(text.substr(0, eq))), std::string(detail::trim(text.substr(eq + 1)))};
}

/// Builds and validates a Scenario. Later entries win over earlier ones, so
/// overrides are simply appended.
inline Scenario scenario_from_entries(const KeyValues& entries) {
  std::map<std::string, std::string, std::less<>> values;
  std::vector<std::string> unknown;
  for (const auto& [k, v] : entries) {
    if (!detail::find_field(k)) {
      if (std::find(unknown.begin(), unknown.end(), k) == unknown.end()) unknown.push_back(k);
      continue;
    }
    values[k] = v;
  }
  if (!unknown.empty()) {
    std::string names;
    for (const auto& k : unknown) names += (names.empty() ? "" : ",") + k;
    throw ConfigError(ConfigError::Kind::UnknownKey, names, "unknown scenario key(s)");
  }

  Scenario s;
  for (const auto& f : detail::field_table()) {
    const auto it = values.find(f.name);
    if (it == values.end()) {
      if (f.required) throw ConfigError(ConfigError::Kind::MissingKey, std::string(f.name), "");
      continue;
    }
    const std::string& text = it->second;
    std::visit(
        [&](auto member) {
          using M = decltype(member);
          if constexpr (std::is_same_v<M, detail::ModeField>) {
            const auto m = parse_mode(text);
            if (!m)
              throw ConfigError(ConfigError::Kind::BadValue, "mode",
                                "expected MagneticGradient, OpticalGradient or Uniform");
            s.mode = *m;
          } else if constexpr (std::is_same_v<M, detail::ScalarField>) {
            s.*member = detail::parse_real(f.name, text);
          } else if constexpr (std::is_same_v<M, detail::Vec4Field>) {
            s.*member = detail::parse_vector<4>(f.name, text);
          } else {
            s.*member = detail::parse_vector<3>(f.name, text);
          }
        },
        f.member);
  }

  detail::require(s.coupling_g >= 0, "coupling_g", "must be >= 0");
  detail::require(s.atom_number > 0, "atom_number", "must be > 0");
  detail::require(s.gamma_excited >= 0, "gamma_excited", "must be >= 0");
  detail::require(s.gamma_ground >= 0, "gamma_ground", "must be >= 0");
  detail::require(s.omega0 > 0, "omega0", "must be > 0");
  detail::require(s.sigma_ctrl > 0, "sigma_ctrl", "must be > 0");
  detail::require(s.k_probe > 0, "k_probe", "must be > 0");
  detail::require(s.c_light > 0, "c_light", "must be > 0");
  detail::require(s.probe_b > 0, "probe_b", "must be > 0");
  detail::require(s.medium_length > 0, "medium_length", "must be > 0");

  if (s.mode == Mode::OpticalGradient && !values.count("sigma_ctrl"))
    throw ConfigError(ConfigError::Kind::ModeMismatch, "sigma_ctrl",
                      "required in OpticalGradient mode");
  if (s.mode != Mode::MagneticGradient && s.b1 != 0.0)
    throw ConfigError(ConfigError::Kind::ModeMismatch, "b1",
                      "a transverse field gradient needs MagneticGradient mode");
  return s;
}

inline Scenario load_scenario(std::string_view text, const KeyValues& overrides = {}) {
  KeyValues entries = parse_key_values(text);
  entries.insert(entries.end(), overrides.begin(), overrides.end());
  return scenario_from_entries(entries);
}

/// Renders every field in file order with round-trip precision.
inline std::string serialize_scenario(const Scenario& s) {
  std::string out;
  for (const auto& f : detail::field_table()) {
    out += f.name;
    out += " = ";
    std::visit(
        [&](auto member) {
          using M = decltype(member);
          if constexpr (std::is_same_v<M, detail::ModeField>) out += to_string(s.mode);
          else if constexpr (std::is_same_v<M, detail::ScalarField>) out += fmt_exact(s.*member);
          else out += detail::join(s.*member);
        },
        f.member);
    out += '\n';
  }
  return out;
}

/// True for keys that hold a single real number (sweepable).
inline bool is_scalar_key(std::string_view key) {
  const auto* f = detail::find_field(key);
  return f && std::holds_alternative<detail::ScalarField>(f->member);
}

/// Non-fatal model-validity diagnostics. Never alter results.
inline std::vector<std::string> validity_warnings(const Scenario& s) {
  std::vector<std::string> w;
  if (!(s.omega0 * s.omega0 > 100.0 * s.gamma_excited * s.gamma_ground))
    w.push_back("EIT validity: omega0^2 is not >> gamma_excited*gamma_ground");
  if (s.mode == Mode::OpticalGradient && !(s.probe_b < s.sigma_ctrl / 3.0))
    w.push_back("linearization validity: probe_b should be < sigma_ctrl/3");
  return w;
}

}  // namespace sglight
