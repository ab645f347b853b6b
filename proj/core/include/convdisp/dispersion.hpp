#pragma once

#include <array>
#include <optional>
#include <vector>

#include "convdisp/types.hpp"

namespace convdisp {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

// a*w^2 + b*w + c with raw signs as produced by the symbol; root extraction
// normalizes the leading sign, callers never need to.
struct QuadraticInOmega {
  double a = 0.0, b = 0.0, c = 0.0;
};

// Trigonometric factors of a scheme's symbol at grid components (kx, ky):
// zeroth-order mass, first-order convection, and the two second-order
// stiffness factors along x and y.
struct SymbolParts {
  double mass = 0.0, conv = 0.0, sx = 0.0, sy = 0.0;
};

// sin(t)/t with the removable singularity filled in.
double sinc(double t);

// Exact frequency of the plane wave with wavenumber kappa and direction theta.
double continuous_omega(const FlowParams& flow, const WaveProbe& probe);

// Grid components seen by a formulation for a physical wavevector (k1, k2).
// Convected keeps them as-is; the reformulation shifts the axial component to
// (k1 + |k| M) / (1 - M^2).
Vec2 wave_components(Formulation form, const FlowParams& flow, double k1, double k2);
Vec2 wave_components(Formulation form, const FlowParams& flow, const WaveProbe& probe);

// Both grid components must lie strictly inside (-pi, pi); outside that box
// the discrete symbol aliases and roots stop being comparable.
bool representable(Formulation form, const FlowParams& flow, const WaveProbe& probe);

SymbolParts scheme_symbol(Scheme scheme, double kx, double ky);

// Quadratic-in-frequency symbol of a scheme at formulation components.
QuadraticInOmega scheme_quadratic(Scheme scheme, Formulation form, const FlowParams& flow,
                                  const Vec2& components);

// Larger root after normalizing a < 0; empty when the quadratic degenerates
// or the discriminant is not strictly positive.
std::optional<double> positive_root(const QuadraticInOmega& q);

// Discrete frequency for a physical wavevector already scaled to the cell.
std::optional<double> scheme_omega_at(Scheme scheme, Formulation form, const FlowParams& flow,
                                      double k1, double k2);
std::optional<double> scheme_omega(Scheme scheme, Formulation form, const FlowParams& flow,
                                   const WaveProbe& probe);

// Magnitude of the h^2 coefficient in the relative frequency error, in
// closed form as a function of angle and Mach number.
double a1_closed(Scheme scheme, Formulation form, const FlowParams& flow, double theta);

// Same coefficient estimated from the symbol on a refinement ladder with
// Richardson extrapolation; residual is the spread of the two finest
// extrapolants and bounds the estimation error.
struct A1Numeric {
  double value = 0.0;
  double residual = 0.0;
};
A1Numeric a1_numeric(Scheme scheme, Formulation form, const FlowParams& flow, double theta);

// Wavenumber whose discrete frequency equals target, by bisection on
// kappa in [1e-12, 3]; unavailable roots count as above-target.
std::optional<double> kappa_for_discrete_frequency(Scheme scheme, Formulation form,
                                                   const FlowParams& flow, double theta,
                                                   double target);

// Phase quotient: exact frequency of the resolved wavenumber over the target.
// Group quotient: exact group speed over the discrete one, the latter from
// Richardson-extrapolated central differences of the discrete frequency.
struct Quotients {
  double kappa = 0.0;
  double phase = 0.0;
  double group = 0.0;
};
std::optional<Quotients> dispersion_quotients(Scheme scheme, Formulation form,
                                              const FlowParams& flow, double theta,
                                              double target);

// Max modulus over the sample points of the anisotropic-operator defect of
// the exponentially transformed plane wave, with every product-rule term of
// the second derivatives evaluated separately.
double transformed_wave_residual(double k, double theta, const FlowParams& flow,
                                 const std::vector<std::array<double, 2>>& points);

}  // namespace convdisp
