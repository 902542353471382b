#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "liegen/cli/suites.hpp"
#include "liegen/cli/tables.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kEnvelope = 3 };

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw liegen::cli::ConfigError("cannot write '" + path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace liegen::cli;

  CLI::App app{"Lie-group special-function verification suites"};
  app.require_subcommand(1);

  std::string config_path, out_path, format_str;
  if (const char* env = std::getenv("LIEGEN_CONFIG")) config_path = env;

  auto* verify = app.add_subcommand("verify", "run a verification suite and report");
  std::string suite;
  std::optional<unsigned> max_n;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  bool timing = false;
  verify->add_option("suite", suite, "groups | hermite | bessel | contraction | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-n", max_n, "largest Hermite index");
  verify->add_option("--tol", tol, "override every absolute floating tolerance");
  verify->add_option("--format", format_str, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_option("--out", out_path, "write the report here instead of stdout");
  verify->add_option("--config", config_path, "INI config file (default: $LIEGEN_CONFIG)");
  verify->add_option("--seed", seed, "random seed for group axiom samples");
  verify->add_flag("--timing", timing, "include wall time in the report");

  auto* table = app.add_subcommand("table", "print a coefficient, value or convergence table");
  std::string kind, group = "h3";
  TableParams tp;
  table->add_option("kind", kind, "hermite_coeffs | bessel_values | contraction_convergence | group_demo")
      ->required()
      ->check(CLI::IsMember(table_kinds()));
  table->add_option("--max-n", tp.max_n, "hermite_coeffs: rows 0..N");
  table->add_option("--orders", tp.orders, "bessel_values: orders")->delimiter(',');
  table->add_option("--r", tp.r_values, "bessel_values: radii")->delimiter(',');
  table->add_option("--group", group, "group_demo: h3 | e2")->check(CLI::IsMember({"h3", "e2"}));
  table->add_option("--config", config_path, "INI config file");
  table->add_option("--out", out_path, "write the table here instead of stdout");

  auto* demo = app.add_subcommand("demo", "worked group examples");
  auto* demo_group = demo->add_subcommand("group", "composition, inverse and exp examples");
  demo->require_subcommand(1);
  std::string demo_name;
  demo_group->add_option("name", demo_name, "h3 | e2")->required()->check(CLI::IsMember({"h3", "e2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    SuiteConfig cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path);

    if (*verify) {
      if (!format_str.empty()) cfg.general.format = parse_format(format_str);
      if (max_n) cfg.hermite.max_n = *max_n;
      if (tol) cfg.set_tolerance(*tol);
      if (seed) cfg.general.seed = *seed;
      cfg.validate();
      const RunReport report = run_suite(suite, cfg, timing);
      write_output(emit(report, cfg.general.format), out_path);
      return report.passed() ? kPass : kFail;
    }
    if (*table) {
      write_output(emit_table(kind, tp, cfg, group), out_path);
      return kPass;
    }
    if (*demo_group) {
      std::cout << group_demo(demo_name);
      return kPass;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kUsage;
  } catch (const liegen::EnvelopeError& e) {
    std::cerr << "envelope violation: " << e.what() << '\n';
    return kEnvelope;
  } catch (const std::logic_error& e) {
    std::cerr << "envelope violation: " << e.what() << '\n';
    return kEnvelope;
  }
  return kUsage;
}
