#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "convdisp/types.hpp"
#include "doctest.h"
#include "options.hpp"
#include "svg.hpp"
#include "table.hpp"

using namespace cli;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = 3.14159265358979323846;

fs::path scratch_dir() {
  static const fs::path dir = [] {
    const fs::path p =
        fs::temp_directory_path() / ("convdisp-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(CONVDISP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

bool throws_config_error_containing(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

}  // namespace

TEST_CASE("angles parse with an optional pi suffix") {
  CHECK(parse_angle("0.25pi") == doctest::Approx(0.25 * kPi).epsilon(1e-15));
  CHECK(parse_angle("pi") == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(parse_angle("1pi") == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(parse_angle("0") == 0.0);
  CHECK(parse_angle("2") == 2.0);
  CHECK(parse_angle("1.5e-1") == doctest::Approx(0.15).epsilon(1e-15));
  CHECK_THROWS_AS(parse_angle("xpi"), ConfigError);
  CHECK_THROWS_AS(parse_angle(""), ConfigError);
}

TEST_CASE("list parsing") {
  const auto angles = parse_double_list("0,0.25pi,1pi", true);
  REQUIRE(angles.size() == 3);
  CHECK(angles[1] == doctest::Approx(0.25 * kPi).epsilon(1e-15));

  const auto schemes = parse_scheme_list("P1C,RT2NC");
  REQUIRE(schemes.size() == 2);
  CHECK(schemes[1] == convdisp::Scheme::RT2NC);
  CHECK_THROWS_AS(parse_scheme_list("P1C,QQ"), ConfigError);

  const auto forms = parse_formulation_list("helmholtz");
  REQUIRE(forms.size() == 1);
  CHECK(forms[0] == convdisp::Formulation::HelmholtzReformulated);
}

TEST_CASE("defaults and keyed assignment") {
  SweepConfig cfg;
  REQUIRE(cfg.thetas.size() == 4);
  CHECK(cfg.thetas[0] == 0.0);
  CHECK(cfg.thetas[3] == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(cfg.schemes.size() == 3);
  CHECK(!cfg.machs_given);

  apply_key("mach", "0.1,0.5", cfg);
  REQUIRE(cfg.machs.size() == 2);
  CHECK(cfg.machs_given);
  apply_key("svg", "true", cfg);
  CHECK(cfg.svg);
  apply_key("memory_cap_gib", "2.5", cfg);
  CHECK(cfg.memory_cap_gib == 2.5);
  CHECK_THROWS_AS(apply_key("svg", "maybe", cfg), ConfigError);
  CHECK(throws_config_error_containing([&] { apply_key("bogus", "1", cfg); }, "'bogus'"));
}

TEST_CASE("config files") {
  const fs::path good = scratch_dir() / "good.cfg";
  write_file(good, "# comment\nmach=0.2,0.4\n\ntheta=0,0.5pi\nh_samples=4\n");
  SweepConfig cfg;
  apply_config_file(good.string(), cfg);
  CHECK(cfg.machs.size() == 2);
  CHECK(cfg.thetas.size() == 2);
  CHECK(cfg.h_samples == 4);

  const fs::path bad = scratch_dir() / "bad.cfg";
  write_file(bad, "mach=0.2\nnot a pair\n");
  SweepConfig cfg2;
  CHECK(throws_config_error_containing([&] { apply_config_file(bad.string(), cfg2); }, ":2:"));

  SweepConfig cfg3;
  CHECK(throws_config_error_containing(
      [&] { apply_config_file((scratch_dir() / "missing.cfg").string(), cfg3); }, "cannot open"));
}

TEST_CASE("configuration range checks") {
  SweepConfig good;
  CHECK_NOTHROW(validate_config(good));

  SweepConfig bad_m;
  bad_m.machs = {1.0};
  CHECK_THROWS_AS(validate_config(bad_m), ConfigError);

  SweepConfig slack;
  slack.thetas = {kPi + 1e-13};
  CHECK_NOTHROW(validate_config(slack));
  SweepConfig bad_th;
  bad_th.thetas = {3.15};
  CHECK_THROWS_AS(validate_config(bad_th), ConfigError);

  SweepConfig bad_h;
  bad_h.h_max = 0.0;
  CHECK_THROWS_AS(validate_config(bad_h), ConfigError);
  bad_h.h_max = 3.5;
  CHECK_THROWS_AS(validate_config(bad_h), ConfigError);

  SweepConfig bad_s;
  bad_s.h_samples = 0;
  CHECK_THROWS_AS(validate_config(bad_s), ConfigError);
  SweepConfig bad_cap;
  bad_cap.memory_cap_gib = 0.0;
  CHECK_THROWS_AS(validate_config(bad_cap), ConfigError);
}

TEST_CASE("angle labels") {
  CHECK(angle_label(0.0) == "0pi");
  CHECK(angle_label(kPi) == "1pi");
  CHECK(angle_label(0.75 * kPi) == "0.75pi");
}

TEST_CASE("seventeen-digit formatting round-trips") {
  for (double v : {kPi, 1.0 / 3.0, 1e-300, 12345.678901234567, -0.125}) {
    const std::string s = fmt17(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
}

TEST_CASE("table sorting and csv output") {
  Table t({"name", "value"});
  t.add_row({"b", "10"});
  t.add_row({"a", "9"});
  t.add_row({"a", "-2"});
  CHECK_THROWS_AS(t.add_row({"too", "many", "cells"}), std::logic_error);

  t.sort_by({0, 1});
  const fs::path csv = scratch_dir() / "t.csv";
  t.write_csv(csv.string());
  CHECK(read_file(csv) == "name,value\na,-2\na,9\nb,10\n");
}

TEST_CASE("line charts are well-formed svg") {
  const fs::path svg = scratch_dir() / "c.svg";
  Series one{"first", {{0.0, 1.0}, {1.0, 2.0}, {2.0, 1.5}}};
  Series two{"second", {{0.0, 2.0}, {1.0, 0.5}, {2.0, 2.5}}};
  write_line_chart(svg.string(), "title", "x", "y", {one, two});
  const std::string body = read_file(svg);
  CHECK(body.find("<svg") != std::string::npos);
  CHECK(body.find("first") != std::string::npos);
  CHECK(body.find("second") != std::string::npos);

  CHECK_THROWS_AS(write_line_chart((scratch_dir() / "e.svg").string(), "t", "x", "y", {}),
                  std::invalid_argument);
}

TEST_CASE("binary exit codes and outputs") {
  const fs::path out = scratch_dir() / "runs";

  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("no-such-command") == 2);

  const fs::path bad = scratch_dir() / "bad_key.cfg";
  write_file(bad, "bogus_key=3\n");
  CHECK(run_cli("quotients --config " + bad.string()) == 2);

  CHECK(run_cli("fem-errors --omega 80 --out " + (out / "a").string()) == 2);
  CHECK(run_cli("fem-errors --omega 80 --allow-large --out " + (out / "b").string()) == 1);

  const fs::path tiny = scratch_dir() / "tiny.cfg";
  write_file(tiny, "scheme=P1C\nmach=0.3\ntheta=0\nh_samples=3\nh_max=0.24\n");
  CHECK(run_cli("quotients --config " + tiny.string() + " --out " + (out / "q").string()) == 0);
  const std::string csv = read_file(out / "q" / "quotients.csv");
  CHECK(csv.rfind("scheme,formulation,M,theta,H,q_p,q_g\n", 0) == 0);

  CHECK(run_cli("a1-table --mach 0.3 --theta 0.25pi --out " + (out / "t").string()) == 0);
  CHECK(fs::exists(out / "t" / "a1_table.csv"));

  CHECK(run_cli("fem-errors --omega 4 --mach 0.3 --theta 0 --out " + (out / "f").string()) == 0);
  const std::string fcsv = read_file(out / "f" / "fem_errors.csv");
  CHECK(fcsv.rfind("scheme,M,theta,omega,n,h,err_energy,wall_time\n", 0) == 0);

  CHECK(run_cli("validate") == 0);
}
