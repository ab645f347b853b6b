#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "options.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Dispersion toolkit: quotient sweeps, error-coefficient tables, and a "
               "verification harness for discrete plane waves in uniform flow"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path, schemes, formulations, machs, thetas, omegas, out_dir;
  bool svg = false, allow_large = false;
  app.add_option("--config", config_path, "key=value configuration file");
  app.add_option("--scheme", schemes, "comma list: P1C,RT1NC,RT2NC");
  app.add_option("--formulation", formulations, "comma list: Convected,HelmholtzReformulated");
  app.add_option("--mach", machs, "comma list of Mach numbers in [0,1)");
  app.add_option("--theta", thetas, "comma list of angles in radians; '<x>pi' accepted");
  app.add_option("--omega", omegas, "comma list of frequencies");
  app.add_option("--out", out_dir, "output directory (default: out)");
  app.add_flag("--svg", svg, "emit polyline charts next to the CSV");
  app.add_flag("--allow-large", allow_large,
               "unlock omega > 40 (still subject to memory_cap_gib)");

  auto* quotients = app.add_subcommand("quotients", "phase and group quotients vs resolution");
  auto* a1_table =
      app.add_subcommand("a1-table", "closed-form vs ladder-extrapolated error coefficients");
  auto* fem_errors =
      app.add_subcommand("fem-errors", "energy errors of the impedance problem vs frequency");
  auto* validate = app.add_subcommand("validate", "run the self-check suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli::SweepConfig cfg;
    if (!config_path.empty()) cli::apply_config_file(config_path, cfg);
    if (app.count("--scheme")) cfg.schemes = cli::parse_scheme_list(schemes);
    if (app.count("--formulation")) cfg.formulations = cli::parse_formulation_list(formulations);
    if (app.count("--mach")) {
      cfg.machs = cli::parse_double_list(machs, false);
      cfg.machs_given = true;
    }
    if (app.count("--theta")) cfg.thetas = cli::parse_double_list(thetas, true);
    if (app.count("--omega")) cfg.omegas = cli::parse_double_list(omegas, false);
    if (app.count("--out")) cfg.out_dir = out_dir;
    if (svg) cfg.svg = true;
    if (allow_large) cfg.allow_large = true;
    cli::validate_config(cfg);

    if (quotients->parsed()) return cli::cmd_quotients(cfg);
    if (a1_table->parsed()) return cli::cmd_a1_table(cfg);
    if (fem_errors->parsed()) return cli::cmd_fem_errors(cfg);
    if (validate->parsed()) return cli::cmd_validate();
    return 2;
  } catch (const cli::ConfigError& e) {
    std::fprintf(stderr, "configuration error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
