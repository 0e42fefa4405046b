// magdisk: tables and checks for the magnetic Neumann Laplacian on the disk.
//
//   magdisk <curves|crossings|constants|derivatives|richardson|conjectures>
//           [--config PATH] [--n-max INT] [--output-dir PATH]
//           [--format csv|json] [--beta-grid START:STOP:STEP]
//
// Exit status: 0 success, 1 computation error, 2 conjecture scan failed,
// 3 bad arguments.

#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "magdisk/config.hpp"
#include "magdisk/errors.hpp"
#include "magdisk/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kComputation = 1;
constexpr int kScanFailed = 2;
constexpr int kBadArgs = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace magdisk;

  CLI::App app{"Spectrum of the magnetic Neumann Laplacian on the unit disk"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, output_dir, format, beta_grid;
  int n_max = -1;
  app.add_option("--config", config_path, "flat key = value configuration file");
  app.add_option("--n-max", n_max, "largest mode index")->check(CLI::NonNegativeNumber);
  app.add_option("--output-dir", output_dir, "directory for the emitted tables");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--beta-grid", beta_grid, "START:STOP:STEP");

  const std::map<std::string, std::string> help{
      {"curves", "eta(n, beta) samples for n <= min(n_max, 20)"},
      {"crossings", "crossing points by the Kummer system and the implicit equation"},
      {"constants", "De Gennes constants and the lambda2 fit"},
      {"derivatives", "one-sided derivatives at the crossings with R4 columns"},
      {"richardson", "gamma_n = beta_{n+1} - beta_n with R4, and expansion checks"},
      {"conjectures", "finite-range monotonicity scans; exit 2 on failure"}};
  for (const auto& [name, text] : help) app.add_subcommand(name, text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadArgs;
  }

  SolverConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    if (n_max >= 0) cfg.n_max = n_max;
    if (!output_dir.empty()) cfg.output_dir = output_dir;
    if (!format.empty()) cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
    if (!beta_grid.empty()) cfg.beta_grid = parse_beta_grid(beta_grid);
    cfg.validate();
  } catch (const Error& e) {
    std::cerr << "magdisk: " << e.what() << "\n";
    return kBadArgs;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    std::vector<std::string> paths;
    bool scan_pass = true;
    if (command == "curves") paths = report::cmd_curves(cfg);
    else if (command == "crossings") paths = report::cmd_crossings(cfg);
    else if (command == "constants") paths = report::cmd_constants(cfg);
    else if (command == "derivatives") paths = report::cmd_derivatives(cfg);
    else if (command == "richardson") paths = report::cmd_richardson(cfg);
    else paths = report::cmd_conjectures(cfg, scan_pass);
    for (const auto& p : paths) std::cout << p << "\n";
    if (!scan_pass) {
      std::cerr << "magdisk: conjecture scan failed, see " << paths.front() << "\n";
      return kScanFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "magdisk: " << command << ": " << e.what() << "\n";
    return kComputation;
  }
  return kOk;
}
