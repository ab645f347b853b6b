#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "convdisp/types.hpp"

namespace cli {

// Malformed or inadmissible configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::vector<convdisp::Scheme> schemes = {convdisp::Scheme::P1C, convdisp::Scheme::RT1NC,
                                           convdisp::Scheme::RT2NC};
  // Empty means the command's own default applies.
  std::vector<convdisp::Formulation> formulations;
  std::vector<double> machs = {0.3, 0.6, 0.9};
  std::vector<double> thetas;  // filled with {0, pi/4, 3pi/4, pi} by the constructor
  std::vector<double> omegas = {10.0, 20.0, 40.0};
  double h_max = 0.3;
  int h_samples = 16;
  std::string out_dir = "out";
  bool svg = false;
  bool allow_large = false;
  double memory_cap_gib = 8.0;
  // a1-table densifies the Mach sweep only when the user did not pin one.
  bool machs_given = false;

  SweepConfig();
};

// Accepts plain radians or a "<float>pi" suffix ("0.25pi", "pi").
double parse_angle(const std::string& token);

std::vector<double> parse_double_list(const std::string& text, bool angles);
std::vector<convdisp::Scheme> parse_scheme_list(const std::string& text);
std::vector<convdisp::Formulation> parse_formulation_list(const std::string& text);

// key=value lines, '#' comments; unknown keys are reported by name.
void apply_config_file(const std::string& path, SweepConfig& cfg);
void apply_key(const std::string& key, const std::string& value, SweepConfig& cfg);

// Range checks; throws ConfigError naming the offending field.
void validate_config(const SweepConfig& cfg);

// Compact angle spelling for file names and labels ("0.25pi").
std::string angle_label(double theta);

}  // namespace cli
