#pragma once

#include <cmath>
#include <optional>
#include <string_view>

namespace convdisp {

// Quadrilateral scheme family: conforming bilinear (P1C) or the two
// nonconforming rotated-bilinear variants distinguished by their edge DOFs
// (midpoint values for RT1NC, edge means for RT2NC).
enum class Scheme { P1C, RT1NC, RT2NC };

// Either the convected operator itself or its flow-free reformulation in
// transformed coordinates.
enum class Formulation { Convected, HelmholtzReformulated };

inline constexpr Scheme kAllSchemes[] = {Scheme::P1C, Scheme::RT1NC, Scheme::RT2NC};
inline constexpr Formulation kAllFormulations[] = {Formulation::Convected,
                                                   Formulation::HelmholtzReformulated};

constexpr std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::P1C: return "P1C";
    case Scheme::RT1NC: return "RT1NC";
    default: return "RT2NC";
  }
}

constexpr std::string_view to_string(Formulation f) {
  return f == Formulation::Convected ? "Convected" : "HelmholtzReformulated";
}

std::optional<Scheme> parse_scheme(std::string_view name);
std::optional<Formulation> parse_formulation(std::string_view name);

// Uniform mean flow along +x with Mach number in [0, 1); the induced
// anisotropy is diag(1 - M^2, 1).
struct FlowParams {
  double mach = 0.0;

  bool valid() const { return mach >= 0.0 && mach < 1.0; }
  double axx() const { return 1.0 - mach * mach; }
};

// Dimensionless wave probe: kappa = |k| * h and the propagation angle.
struct WaveProbe {
  double kappa = 0.0;
  double theta = 0.0;

  double k1() const { return kappa * std::cos(theta); }
  double k2() const { return kappa * std::sin(theta); }
};

}  // namespace convdisp
