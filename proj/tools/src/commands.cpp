#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "convdisp/dispersion.hpp"
#include "convdisp/fem.hpp"
#include "pool.hpp"
#include "svg.hpp"
#include "table.hpp"

namespace cli {

namespace {

constexpr double kPi = 3.14159265358979323846;

using convdisp::FlowParams;
using convdisp::Formulation;
using convdisp::Scheme;
using convdisp::WaveProbe;

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string mach_label(double m) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", m);
  return buf;
}

void ensure_out_dir(const std::string& dir) { std::filesystem::create_directories(dir); }

}  // namespace

int cmd_quotients(SweepConfig cfg) {
  if (cfg.formulations.empty()) cfg.formulations = {Formulation::Convected};
  ensure_out_dir(cfg.out_dir);

  struct Task {
    Scheme s;
    Formulation f;
    double m, th, H;
  };
  std::vector<Task> tasks;
  for (Scheme s : cfg.schemes)
    for (Formulation f : cfg.formulations)
      for (double m : cfg.machs)
        for (double th : cfg.thetas)
          for (int i = 1; i <= cfg.h_samples; ++i)
            tasks.push_back({s, f, m, th, cfg.h_max * i / cfg.h_samples});

  std::vector<std::optional<convdisp::Quotients>> results(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    const Task& t = tasks[i];
    results[i] = convdisp::dispersion_quotients(t.s, t.f, FlowParams{t.m}, t.th, t.H);
  });

  Table table({"scheme", "formulation", "M", "theta", "H", "q_p", "q_g"});
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    if (!results[i]) {
      std::fprintf(stderr, "warning: no resolvable wavenumber at %s/%s M=%g theta=%g H=%g\n",
                   to_string(t.s).data(), to_string(t.f).data(), t.m, t.th, t.H);
      continue;
    }
    table.add_row({std::string(to_string(t.s)), std::string(to_string(t.f)), fmt17(t.m),
                   fmt17(t.th), fmt17(t.H), fmt17(results[i]->phase), fmt17(results[i]->group)});
  }
  table.sort_by({0, 1, 2, 3, 4});
  const std::string csv = cfg.out_dir + "/quotients.csv";
  table.write_csv(csv);
  std::printf("quotients: %zu rows -> %s\n", table.rows(), csv.c_str());

  if (cfg.svg) {
    for (double m : cfg.machs) {
      for (double th : cfg.thetas) {
        std::vector<Series> series;
        for (Scheme s : cfg.schemes) {
          for (Formulation f : cfg.formulations) {
            Series sp, sg;
            const std::string tag = std::string(to_string(s)) +
                                    (cfg.formulations.size() > 1
                                         ? "/" + std::string(to_string(f).substr(0, 4))
                                         : "");
            sp.label = tag + " q_p";
            sg.label = tag + " q_g";
            for (size_t i = 0; i < tasks.size(); ++i) {
              const Task& t = tasks[i];
              if (t.s != s || t.f != f || t.m != m || t.th != th || !results[i]) continue;
              sp.points.emplace_back(t.H, results[i]->phase);
              sg.points.emplace_back(t.H, results[i]->group);
            }
            if (!sp.points.empty()) {
              series.push_back(std::move(sp));
              series.push_back(std::move(sg));
            }
          }
        }
        if (series.empty()) continue;
        const std::string path = cfg.out_dir + "/quotients_M" + mach_label(m) + "_theta" +
                                 angle_label(th) + ".svg";
        write_line_chart(path, "dispersion quotients, M=" + mach_label(m) +
                                   ", theta=" + angle_label(th),
                         "H", "quotient", series);
        std::printf("quotients: chart -> %s\n", path.c_str());
      }
    }
  }
  return 0;
}

int cmd_a1_table(SweepConfig cfg) {
  if (cfg.formulations.empty())
    cfg.formulations = {Formulation::Convected, Formulation::HelmholtzReformulated};
  if (!cfg.machs_given) {
    cfg.machs.clear();
    for (int k = 0; k <= 18; ++k) cfg.machs.push_back(k * 0.05);
  }
  ensure_out_dir(cfg.out_dir);

  struct Task {
    Scheme s;
    Formulation f;
    double m, th;
  };
  struct Result {
    double closed, numeric, rel, residual;
  };
  std::vector<Task> tasks;
  for (Scheme s : cfg.schemes)
    for (Formulation f : cfg.formulations)
      for (double m : cfg.machs)
        for (double th : cfg.thetas) tasks.push_back({s, f, m, th});

  std::vector<Result> results(tasks.size());
  parallel_for(tasks.size(), [&](size_t i) {
    const Task& t = tasks[i];
    const FlowParams flow{t.m};
    const double closed = convdisp::a1_closed(t.s, t.f, flow, t.th);
    const auto ladder = convdisp::a1_numeric(t.s, t.f, flow, t.th);
    results[i] = {closed, ladder.value,
                  std::abs(ladder.value - closed) / std::max(closed, 1e-3), ladder.residual};
  });

  Table table({"scheme", "formulation", "M", "theta", "A1_closed", "A1_numeric", "rel_err",
               "extrapolation_residual"});
  for (size_t i = 0; i < tasks.size(); ++i) {
    const Task& t = tasks[i];
    const Result& r = results[i];
    table.add_row({std::string(to_string(t.s)), std::string(to_string(t.f)), fmt17(t.m),
                   fmt17(t.th), fmt17(r.closed), fmt17(r.numeric), fmt17(r.rel),
                   fmt17(r.residual)});
  }
  table.sort_by({0, 1, 2, 3});
  const std::string csv = cfg.out_dir + "/a1_table.csv";
  table.write_csv(csv);
  std::printf("a1-table: %zu rows -> %s\n", table.rows(), csv.c_str());

  if (cfg.svg) {
    for (Formulation f : cfg.formulations) {
      for (double th : cfg.thetas) {
        std::vector<Series> series;
        for (Scheme s : cfg.schemes) {
          Series sc;
          sc.label = std::string(to_string(s));
          for (size_t i = 0; i < tasks.size(); ++i)
            if (tasks[i].s == s && tasks[i].f == f && tasks[i].th == th)
              sc.points.emplace_back(tasks[i].m, results[i].closed);
          std::sort(sc.points.begin(), sc.points.end());
          if (!sc.points.empty()) series.push_back(std::move(sc));
        }
        if (series.empty()) continue;
        const std::string path = cfg.out_dir + "/a1_" + std::string(to_string(f)) + "_theta" +
                                 angle_label(th) + ".svg";
        write_line_chart(path,
                         "error coefficient, " + std::string(to_string(f)) +
                             ", theta=" + angle_label(th),
                         "M", "A1", series);
        std::printf("a1-table: chart -> %s\n", path.c_str());
      }
    }
  }
  return 0;
}

int cmd_fem_errors(SweepConfig cfg) {
  for (double om : cfg.omegas)
    if (om > 40.0 && !cfg.allow_large) {
      char msg[96];
      std::snprintf(msg, sizeof msg, "omega=%g exceeds the default cap of 40; pass --allow-large",
                    om);
      throw ConfigError(msg);
    }

  // Every factorization must fit the memory cap; refuse up front with sizes.
  const double cap_bytes = cfg.memory_cap_gib * 1024.0 * 1024.0 * 1024.0;
  bool refused = false;
  for (Scheme s : cfg.schemes) {
    for (double om : cfg.omegas) {
      const auto sz = convdisp::system_sizing(s, convdisp::resolution_for_frequency(om));
      if (static_cast<double>(sz.factor_bytes) > cap_bytes) {
        std::fprintf(stderr,
                     "refusing %s omega=%g: n=%d, %lld unknowns, bandwidth %d, "
                     "factor storage %.1f GiB exceeds cap %.1f GiB\n",
                     to_string(s).data(), om, sz.n, sz.ndof, sz.bandwidth,
                     sz.factor_bytes / (1024.0 * 1024.0 * 1024.0), cfg.memory_cap_gib);
        refused = true;
      }
    }
  }
  if (refused) {
    std::fprintf(stderr, "raise memory_cap_gib in the configuration to proceed\n");
    return 1;
  }

  ensure_out_dir(cfg.out_dir);
  std::vector<double> omegas = cfg.omegas;
  std::sort(omegas.begin(), omegas.end());

  struct Row {
    Scheme s;
    double m, th, om;
    int n;
    double h, err, wall;
  };
  std::vector<Row> rows;

  // One factorization per (scheme, omega, M), reused across angles; systems
  // run one at a time so the band buffer is the only large allocation.
  for (double om : omegas) {
    const int n = convdisp::resolution_for_frequency(om);
    for (Scheme s : cfg.schemes) {
      for (double m : cfg.machs) {
        const auto t0 = std::chrono::steady_clock::now();
        const convdisp::ConvectedSolver solver(s, convdisp::QuadMesh{n}, om, FlowParams{m});
        const double t_factor = seconds_since(t0);
        std::fprintf(stderr, "[fem-errors] %s omega=%g M=%g: %d unknowns factorized in %.1fs\n",
                     to_string(s).data(), om, m, solver.ndof(), t_factor);
        for (double th : cfg.thetas) {
          const auto t1 = std::chrono::steady_clock::now();
          const auto en = solver.solve_energy(th);
          const double wall = seconds_since(t1) + t_factor / cfg.thetas.size();
          rows.push_back({s, m, th, om, n, 1.0 / n, en.error, wall});
        }
      }
    }
  }

  Table table({"scheme", "M", "theta", "omega", "n", "h", "err_energy", "wall_time"});
  for (const Row& r : rows)
    table.add_row({std::string(to_string(r.s)), fmt17(r.m), fmt17(r.th), fmt17(r.om),
                   std::to_string(r.n), fmt17(r.h), fmt17(r.err), fmt17(r.wall)});
  table.sort_by({0, 1, 2, 3});
  const std::string csv = cfg.out_dir + "/fem_errors.csv";
  table.write_csv(csv);
  std::printf("fem-errors: %zu rows -> %s\n", table.rows(), csv.c_str());

  if (cfg.svg) {
    for (Scheme s : cfg.schemes) {
      std::vector<Series> series;
      for (double m : cfg.machs) {
        for (double th : cfg.thetas) {
          Series sc;
          sc.label = "M=" + mach_label(m) + " th=" + angle_label(th);
          for (const Row& r : rows)
            if (r.s == s && r.m == m && r.th == th) sc.points.emplace_back(r.om, r.err);
          std::sort(sc.points.begin(), sc.points.end());
          if (!sc.points.empty()) series.push_back(std::move(sc));
        }
      }
      if (series.empty()) continue;
      const std::string path =
          cfg.out_dir + "/fem_errors_" + std::string(to_string(s)) + ".svg";
      write_line_chart(path, "energy error, " + std::string(to_string(s)), "omega",
                       "err_energy", series);
      std::printf("fem-errors: chart -> %s\n", path.c_str());
    }
  }
  return 0;
}

namespace {

bool suite_line(const char* name, bool pass, const std::string& detail) {
  std::printf("[validate] %-34s %s  (%s)\n", name, pass ? "PASS" : "FAIL", detail.c_str());
  return pass;
}

// Candidate closed-form frequencies for the reformulated midpoint-value
// scheme; the two variants differ in how the cosine factors combine in the
// denominator.
double reform_rt1_candidate(bool product, double m, double th, double kap) {
  const double k2 = kap * std::sin(th);
  const double k3 = (kap * std::cos(th) + kap * m) / (1.0 - m * m);
  const double c3 = std::cos(0.5 * k3), c2 = std::cos(0.5 * k2);
  const double num = (c2 + c3) * (1.0 - c2 * c3) + m * m * c2 * (c3 * c3 - 1.0);
  const double den = product ? (c2 + c3) * (2.0 + c2 * c3) : (c2 + c3) + (2.0 + c2 * c3);
  return 2.0 * std::sqrt(6.0 * (1.0 - m * m) * num / den);
}

}  // namespace

int cmd_validate() {
  bool all = true;
  const double machs[] = {0.0, 0.3, 0.6, 0.9};
  const double thetas[] = {0.0, 0.25 * kPi, 0.75 * kPi, kPi};

  {  // closed form vs assembled stencil, random probes, resampled when aliased
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> ukap(0.01, 1.0), uth(0.0, kPi);
    double worst = 0.0;
    long accepted = 0;
    for (Scheme s : convdisp::kAllSchemes)
      for (Formulation f : convdisp::kAllFormulations)
        for (double m : machs) {
          const FlowParams flow{m};
          int kept = 0;
          while (kept < 100) {
            const WaveProbe probe{ukap(rng), uth(rng)};
            if (!representable(f, flow, probe)) continue;
            const auto comp = wave_components(f, flow, probe);
            const auto closed = positive_root(scheme_quadratic(s, f, flow, comp));
            const auto oracle = positive_root(stencil_oracle(s, f, flow, comp));
            if (!closed || !oracle) continue;
            worst = std::max(worst, std::abs(*closed - *oracle) / *closed);
            ++kept;
            ++accepted;
          }
        }
    char d[128];
    std::snprintf(d, sizeof d, "worst rel %.2e over %ld probes, bound 1e-12", worst, accepted);
    all &= suite_line("closed form vs stencil oracle", worst <= 1e-12, d);
  }

  {  // ladder estimate vs closed form on the default grid
    double worst = 0.0;
    for (Scheme s : convdisp::kAllSchemes)
      for (Formulation f : convdisp::kAllFormulations)
        for (double m : machs)
          for (double th : thetas) {
            const double closed = convdisp::a1_closed(s, f, FlowParams{m}, th);
            const auto ladder = convdisp::a1_numeric(s, f, FlowParams{m}, th);
            worst = std::max(worst, std::abs(ladder.value - closed) / std::max(closed, 1e-3));
          }
    char d[96];
    std::snprintf(d, sizeof d, "worst rel %.2e, bound 1e-06", worst);
    all &= suite_line("ladder vs closed error coefficient", worst <= 1e-6, d);
  }

  {  // transformed plane wave against the anisotropic operator
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> upos(0.0, 1.0);
    double worst_scaled = 0.0;
    for (double k : {1.0, 3.0})
      for (double th : {0.0, 0.3 * kPi})
        for (double m : {0.5, 0.9}) {
          std::vector<std::array<double, 2>> pts(100);
          for (auto& p : pts) p = {upos(rng), upos(rng)};
          const double om = k * (1.0 + m * std::cos(th));
          const double res = convdisp::transformed_wave_residual(k, th, FlowParams{m}, pts);
          worst_scaled = std::max(worst_scaled, res / (om * om));
        }
    char d[96];
    std::snprintf(d, sizeof d, "worst %.2e * omega^2, bound 1e-10 * omega^2", worst_scaled);
    all &= suite_line("transformed-wave operator defect", worst_scaled <= 1e-10, d);
  }

  {  // quotients are even in the propagation angle
    double worst = 0.0;
    bool ok = true;
    for (Scheme s : convdisp::kAllSchemes)
      for (Formulation f : convdisp::kAllFormulations)
        for (double m : {0.3, 0.6, 0.9})
          for (double th : {0.25 * kPi, 0.75 * kPi}) {
            const auto qp = convdisp::dispersion_quotients(s, f, FlowParams{m}, th, 0.25);
            const auto qm = convdisp::dispersion_quotients(s, f, FlowParams{m}, -th, 0.25);
            if (!qp || !qm) {
              ok = false;
              continue;
            }
            worst = std::max(worst, std::abs(qp->phase - qm->phase) / qp->phase);
            worst = std::max(worst, std::abs(qp->group - qm->group) / qp->group);
          }
    char d[96];
    std::snprintf(d, sizeof d, "worst rel %.2e, bound 1e-12", worst);
    all &= suite_line("quotient angle symmetry", ok && worst <= 1e-12, d);
  }

  {  // second-order frequency convergence on the refinement ladder
    double lo = 10.0, hi = 0.0;
    for (Scheme s : convdisp::kAllSchemes)
      for (Formulation f : convdisp::kAllFormulations) {
        const FlowParams flow{0.6};
        const double th = 0.25 * kPi;
        const double om = 1.0 + flow.mach * std::cos(th);
        double err[5];
        for (int m = 0; m < 5; ++m) {
          const double h = 0.1 * std::ldexp(1.0, -m);
          const auto x = convdisp::scheme_omega_at(s, f, flow, h * std::cos(th),
                                                   h * std::sin(th));
          err[m] = std::abs(*x / h - om);
        }
        const double slope = std::log2(err[3] / err[4]);
        lo = std::min(lo, slope);
        hi = std::max(hi, slope);
      }
    char d[96];
    std::snprintf(d, sizeof d, "slopes in [%.4f, %.4f], bound 2 +/- 0.1", lo, hi);
    all &= suite_line("frequency-error convergence rate", lo >= 1.9 && hi <= 2.1, d);
  }

  {  // which algebraic variant of the reformulated closed form is the real one
    double prod_dev = 0.0, sum_dev = 0.0;
    const double probes[2][3] = {{0.5, kPi / 3.0, 0.4}, {0.3, 1.0, 0.7}};
    for (const auto& p : probes) {
      const FlowParams flow{p[0]};
      const auto comp = convdisp::wave_components(Formulation::HelmholtzReformulated, flow,
                                                  WaveProbe{p[2], p[1]});
      const auto oracle = positive_root(
          stencil_oracle(Scheme::RT1NC, Formulation::HelmholtzReformulated, flow, comp));
      prod_dev = std::max(prod_dev,
                          std::abs(reform_rt1_candidate(true, p[0], p[1], p[2]) - *oracle) /
                              *oracle);
      sum_dev = std::max(sum_dev,
                         std::abs(reform_rt1_candidate(false, p[0], p[1], p[2]) - *oracle) /
                             *oracle);
    }
    char d[160];
    std::snprintf(d, sizeof d,
                  "product (cx+cy)(2+cx*cy) rel %.2e; sum (cx+cy)+(2+cx*cy) rel %.2e -> "
                  "resolved to PRODUCT",
                  prod_dev, sum_dev);
    all &= suite_line("reformulated mass-factor variant", prod_dev <= 1e-12 && sum_dev > 1e-3,
                      d);
  }

  std::printf(all ? "all validation suites passed\n" : "validation FAILED\n");
  return all ? 0 : 1;
}

}  // namespace cli
