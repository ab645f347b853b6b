#include "convdisp/dispersion.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace convdisp {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

}  // namespace

std::optional<Scheme> parse_scheme(std::string_view name) {
  const std::string u = upper(name);
  if (u == "P1C") return Scheme::P1C;
  if (u == "RT1NC") return Scheme::RT1NC;
  if (u == "RT2NC") return Scheme::RT2NC;
  return std::nullopt;
}

std::optional<Formulation> parse_formulation(std::string_view name) {
  const std::string u = upper(name);
  if (u == "CONVECTED") return Formulation::Convected;
  if (u == "HELMHOLTZREFORMULATED" || u == "HELMHOLTZ") return Formulation::HelmholtzReformulated;
  return std::nullopt;
}

double sinc(double t) {
  if (std::abs(t) < 1e-8) return 1.0 - t * t / 6.0;
  return std::sin(t) / t;
}

double continuous_omega(const FlowParams& flow, const WaveProbe& probe) {
  return probe.kappa * (1.0 + flow.mach * std::cos(probe.theta));
}

Vec2 wave_components(Formulation form, const FlowParams& flow, double k1, double k2) {
  if (form == Formulation::Convected) return {k1, k2};
  const double kap = std::hypot(k1, k2);
  return {(k1 + kap * flow.mach) / flow.axx(), k2};
}

Vec2 wave_components(Formulation form, const FlowParams& flow, const WaveProbe& probe) {
  return wave_components(form, flow, probe.k1(), probe.k2());
}

bool representable(Formulation form, const FlowParams& flow, const WaveProbe& probe) {
  const Vec2 c = wave_components(form, flow, probe);
  return std::abs(c.x) < kPi && std::abs(c.y) < kPi;
}

SymbolParts scheme_symbol(Scheme scheme, double kx, double ky) {
  const double c1 = std::cos(0.5 * kx), s1 = std::sin(0.5 * kx);
  const double c2 = std::cos(0.5 * ky), s2 = std::sin(0.5 * ky);
  switch (scheme) {
    case Scheme::RT1NC:
      return {(c1 + c2) * (2.0 + c1 * c2) / 3.0,
              (8.0 / 3.0) * s1 * c2 * (2.0 * c1 + c2),
              8.0 * s1 * s1 * c2,
              8.0 * s2 * s2 * c1};
    case Scheme::RT2NC: {
      const double g1 = sinc(kx), g2 = sinc(ky);
      const double w1 = 0.5 * kx * sinc(0.5 * kx) * sinc(0.5 * kx);
      return {(g2 * (4.0 + 2.0 * c1 * c1) + g1 * (4.0 + 2.0 * c2 * c2)) / 24.0,
              (2.0 * s1 * c1 * g2 + w1 * 2.0 * c2 * c2) / 2.0,
              g2 * 2.0 * s1 * s1,
              g1 * 2.0 * s2 * s2};
    }
    default:
      return {(1.0 + 2.0 * c1 * c1) * (1.0 + 2.0 * c2 * c2) / 9.0,
              (2.0 / 3.0) * 2.0 * s1 * c1 * (1.0 + 2.0 * c2 * c2),
              (2.0 / 3.0) * 2.0 * s1 * s1 * (1.0 + 2.0 * c2 * c2),
              (2.0 / 3.0) * 2.0 * s2 * s2 * (1.0 + 2.0 * c1 * c1)};
  }
}

QuadraticInOmega scheme_quadratic(Scheme scheme, Formulation form, const FlowParams& flow,
                                  const Vec2& components) {
  const SymbolParts sp = scheme_symbol(scheme, components.x, components.y);
  QuadraticInOmega q;
  q.c = flow.axx() * sp.sx + sp.sy;
  if (form == Formulation::Convected) {
    q.a = -sp.mass;
    q.b = flow.mach * sp.conv;
  } else {
    q.a = -sp.mass / flow.axx();
    q.b = 0.0;
  }
  return q;
}

std::optional<double> positive_root(const QuadraticInOmega& q) {
  double a = q.a, b = q.b, c = q.c;
  if (!(std::abs(a) > 1e-10 * (std::abs(a) + std::abs(b) + std::abs(c)))) return std::nullopt;
  if (a > 0.0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const double disc = b * b - 4.0 * a * c;
  if (!(disc > 0.0)) return std::nullopt;
  return (b + std::sqrt(disc)) / (-2.0 * a);
}

std::optional<double> scheme_omega_at(Scheme scheme, Formulation form, const FlowParams& flow,
                                      double k1, double k2) {
  return positive_root(scheme_quadratic(scheme, form, flow, wave_components(form, flow, k1, k2)));
}

std::optional<double> scheme_omega(Scheme scheme, Formulation form, const FlowParams& flow,
                                   const WaveProbe& probe) {
  return scheme_omega_at(scheme, form, flow, probe.k1(), probe.k2());
}

double a1_closed(Scheme scheme, Formulation form, const FlowParams& flow, double theta) {
  const double m = flow.mach;
  const double m2 = m * m;
  const double ct = std::cos(theta);
  const double c2t = std::cos(2.0 * theta);
  const double c3t = std::cos(3.0 * theta);
  const double c4t = std::cos(4.0 * theta);
  const double d = 1.0 + m * ct;
  if (form == Formulation::Convected) {
    switch (scheme) {
      case Scheme::RT1NC:
        return std::abs(2.0 * (1.0 + c4t) + 4.0 * m * (c3t - 3.0 * ct) +
                        m2 * (c4t - 6.0 * c2t - 7.0)) /
               (384.0 * d * d * d);
      case Scheme::RT2NC:
        return std::abs(2.0 * (1.0 + c4t) + 4.0 * m * (c3t - ct) + m2 * (c4t - 2.0 * c2t - 3.0)) /
               (192.0 * d * d * d);
      default:
        return std::abs(3.0 + c4t - 4.0 * m2 * ct * ct * ct * ct) / (96.0 * d * d * d);
    }
  }
  const double axx = flow.axx();
  const double d4 = d * d * d * d;
  if (scheme == Scheme::P1C) {
    const double st = std::sin(theta);
    const double num = ct * ct * ct * ct + 4.0 * m * ct * ct * ct + 6.0 * m2 * ct * ct +
                       4.0 * m2 * m * ct + m2 * m2 + axx * axx * axx * st * st * st * st;
    return std::abs(num) / (24.0 * axx * axx * d4);
  }
  const double m4 = m2 * m2, m6 = m4 * m2;
  const double num = (4.0 + 10.0 * m2 + 28.0 * m4 - 7.0 * m6) +
                     4.0 * m * (4.0 + 11.0 * m2 - m4) * ct +
                     4.0 * m2 * (11.0 - 6.0 * m2 + 2.0 * m4) * c2t +
                     4.0 * m * (4.0 - 3.0 * m2 + m4) * c3t + (4.0 - 6.0 * m2 + 4.0 * m4 - m6) * c4t;
  const double base = std::abs(num) / (768.0 * axx * axx * d4);
  return scheme == Scheme::RT2NC ? 2.0 * base : base;
}

A1Numeric a1_numeric(Scheme scheme, Formulation form, const FlowParams& flow, double theta) {
  const double ct = std::cos(theta), st = std::sin(theta);
  const double omega = 1.0 + flow.mach * ct;
  // The reformulation magnifies the axial component; shrink the coarsest cell
  // so every level stays well inside the representable box.
  double gamma = 1.0;
  if (form == Formulation::HelmholtzReformulated)
    gamma = std::max(1.0, (std::abs(ct) + flow.mach) / flow.axx());
  const double h0 = 0.1 / gamma;
  double r[5];
  for (int m = 0; m < 5; ++m) {
    const double h = h0 * std::ldexp(1.0, -m);
    const auto x = scheme_omega_at(scheme, form, flow, h * ct, h * st);
    if (!x) throw std::runtime_error("discrete frequency unavailable on refinement ladder");
    r[m] = std::abs(*x / h - omega) / (omega * omega * omega * h * h);
  }
  const double fine = (4.0 * r[4] - r[3]) / 3.0;
  const double prev = (4.0 * r[3] - r[2]) / 3.0;
  return {fine, std::abs(fine - prev)};
}

std::optional<double> kappa_for_discrete_frequency(Scheme scheme, Formulation form,
                                                   const FlowParams& flow, double theta,
                                                   double target) {
  const auto value = [&](double kap) {
    // the symbol is periodic in the mesh wave components, so probes outside the
    // principal zone alias; they cannot witness the crossing and count as unavailable
    const WaveProbe probe{kap, theta};
    if (!representable(form, flow, probe)) return std::numeric_limits<double>::quiet_NaN();
    const auto w = scheme_omega(scheme, form, flow, probe);
    return w ? *w : std::numeric_limits<double>::quiet_NaN();
  };
  double lo = 1e-12, hi = 3.0;
  if (!(value(lo) < target)) return std::nullopt;
  const double at_hi = value(hi);
  if (!std::isnan(at_hi) && at_hi < target) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = value(mid);
    if (std::isnan(fm) || fm > target)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::optional<Quotients> dispersion_quotients(Scheme scheme, Formulation form,
                                              const FlowParams& flow, double theta,
                                              double target) {
  const auto kap = kappa_for_discrete_frequency(scheme, form, flow, theta, target);
  if (!kap) return std::nullopt;
  const double ct = std::cos(theta), st = std::sin(theta);
  const double k1 = *kap * ct, k2 = *kap * st;
  const double phase = *kap * (1.0 + flow.mach * ct) / target;

  const double delta = 1e-5 * std::max(*kap, 0.01);
  const auto central = [&](int comp, double d) -> std::optional<double> {
    const double e1 = comp == 0 ? d : 0.0, e2 = comp == 1 ? d : 0.0;
    const auto wp = scheme_omega_at(scheme, form, flow, k1 + e1, k2 + e2);
    const auto wm = scheme_omega_at(scheme, form, flow, k1 - e1, k2 - e2);
    if (!wp || !wm) return std::nullopt;
    return (*wp - *wm) / (2.0 * d);
  };
  double grad[2];
  for (int comp = 0; comp < 2; ++comp) {
    const auto coarse = central(comp, delta);
    const auto fine = central(comp, 0.5 * delta);
    if (!coarse || !fine) return std::nullopt;
    grad[comp] = (4.0 * *fine - *coarse) / 3.0;
  }
  const double discrete_speed = std::hypot(grad[0], grad[1]);
  if (!(discrete_speed > 0.0)) return std::nullopt;
  const double exact_speed = std::sqrt(1.0 + 2.0 * flow.mach * ct + flow.mach * flow.mach);
  return Quotients{*kap, phase, exact_speed / discrete_speed};
}

double transformed_wave_residual(double k, double theta, const FlowParams& flow,
                                 const std::vector<std::array<double, 2>>& points) {
  using C = std::complex<double>;
  const C i(0.0, 1.0);
  const double axx = flow.axx();
  const double k1 = k * std::cos(theta), k2 = k * std::sin(theta);
  const double omega = k * (1.0 + flow.mach * std::cos(theta));
  const double beta = omega * flow.mach / axx;
  double worst = 0.0;
  for (const auto& pt : points) {
    const C p = std::exp(i * (k1 * pt[0] + k2 * pt[1]));
    const C alpha = std::exp(i * (beta * pt[0]));
    const C u = p * alpha;
    const C uxx =
        (i * k1) * (i * k1) * p * alpha + 2.0 * (i * k1) * p * (i * beta) * alpha +
        p * (i * beta) * (i * beta) * alpha;
    const C uyy = (i * k2) * (i * k2) * u;
    const C defect = -axx * uxx - uyy - (omega * omega / axx) * u;
    worst = std::max(worst, std::abs(defect));
  }
  return worst;
}

}  // namespace convdisp
