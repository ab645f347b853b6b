#include "options.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

double parse_number(const std::string& token) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw ConfigError("not a number: '" + token + "'");
  }
  if (used != token.size()) throw ConfigError("not a number: '" + token + "'");
  return v;
}

bool parse_bool(const std::string& token) {
  if (token == "1" || token == "true" || token == "yes" || token == "on") return true;
  if (token == "0" || token == "false" || token == "no" || token == "off") return false;
  throw ConfigError("not a boolean: '" + token + "'");
}

}  // namespace

SweepConfig::SweepConfig() : thetas{0.0, 0.25 * kPi, 0.75 * kPi, kPi} {}

double parse_angle(const std::string& token) {
  const std::string t = trim(token);
  if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
    const std::string head = trim(t.substr(0, t.size() - 2));
    return (head.empty() ? 1.0 : parse_number(head)) * kPi;
  }
  return parse_number(t);
}

std::vector<double> parse_double_list(const std::string& text, bool angles) {
  std::vector<double> out;
  for (const auto& tok : split(text, ','))
    if (!tok.empty()) out.push_back(angles ? parse_angle(tok) : parse_number(tok));
  if (out.empty()) throw ConfigError("empty value list: '" + text + "'");
  return out;
}

std::vector<convdisp::Scheme> parse_scheme_list(const std::string& text) {
  std::vector<convdisp::Scheme> out;
  for (const auto& tok : split(text, ',')) {
    if (tok.empty()) continue;
    const auto s = convdisp::parse_scheme(tok);
    if (!s) throw ConfigError("unknown scheme: '" + tok + "'");
    out.push_back(*s);
  }
  if (out.empty()) throw ConfigError("empty scheme list");
  return out;
}

std::vector<convdisp::Formulation> parse_formulation_list(const std::string& text) {
  std::vector<convdisp::Formulation> out;
  for (const auto& tok : split(text, ',')) {
    if (tok.empty()) continue;
    const auto f = convdisp::parse_formulation(tok);
    if (!f) throw ConfigError("unknown formulation: '" + tok + "'");
    out.push_back(*f);
  }
  if (out.empty()) throw ConfigError("empty formulation list");
  return out;
}

void apply_key(const std::string& key, const std::string& value, SweepConfig& cfg) {
  if (key == "scheme") {
    cfg.schemes = parse_scheme_list(value);
  } else if (key == "formulation") {
    cfg.formulations = parse_formulation_list(value);
  } else if (key == "mach") {
    cfg.machs = parse_double_list(value, false);
    cfg.machs_given = true;
  } else if (key == "theta") {
    cfg.thetas = parse_double_list(value, true);
  } else if (key == "omega") {
    cfg.omegas = parse_double_list(value, false);
  } else if (key == "out") {
    cfg.out_dir = value;
  } else if (key == "svg") {
    cfg.svg = parse_bool(value);
  } else if (key == "allow_large") {
    cfg.allow_large = parse_bool(value);
  } else if (key == "memory_cap_gib") {
    cfg.memory_cap_gib = parse_number(value);
  } else if (key == "h_max") {
    cfg.h_max = parse_number(value);
  } else if (key == "h_samples") {
    cfg.h_samples = static_cast<int>(parse_number(value));
  } else {
    throw ConfigError("unknown configuration key: '" + key + "'");
  }
}

void apply_config_file(const std::string& path, SweepConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    try {
      apply_key(trim(line.substr(0, eq)), trim(line.substr(eq + 1)), cfg);
    } catch (const ConfigError& e) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
}

void validate_config(const SweepConfig& cfg) {
  for (double m : cfg.machs)
    if (!(m >= 0.0 && m < 1.0))
      throw ConfigError("mach must lie in [0, 1), got " + std::to_string(m));
  for (double th : cfg.thetas)
    if (!(th >= 0.0 && th <= kPi + 1e-12))
      throw ConfigError("theta must lie in [0, pi], got " + std::to_string(th));
  for (double om : cfg.omegas)
    if (!(om > 0.0)) throw ConfigError("omega must be positive, got " + std::to_string(om));
  if (!(cfg.h_max > 0.0 && cfg.h_max <= 3.0))
    throw ConfigError("h_max must lie in (0, 3], got " + std::to_string(cfg.h_max));
  if (cfg.h_samples < 1) throw ConfigError("h_samples must be at least 1");
  if (!(cfg.memory_cap_gib > 0.0)) throw ConfigError("memory_cap_gib must be positive");
}

std::string angle_label(double theta) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%gpi", theta / kPi);
  return buf;
}

}  // namespace cli
