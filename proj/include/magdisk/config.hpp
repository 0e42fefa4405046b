#pragma once

#include <string>

namespace magdisk {

struct BetaGridSpec {
  double start = 0.5;
  double stop = 900.0;
  double step = 0.5;
};

enum class OutputFormat { Csv, Json };

// Numerical policy shared by every module. The defaults reproduce the
// acceptance suite unmodified.
struct SolverConfig {
  // Kummer series
  double series_rel_tol = 1e-16;
  int max_terms = 0;  // 0 selects the automatic bound 20*(z + 50)
  double quad_rel_tol = 1e-12;

  // radial eigenvalue problem
  double eig_rel_tol = 1e-13;
  double eta_scan_step = 0.02;

  // crossings
  double cross_rel_tol = 1e-12;
  int newton_max_iter = 50;

  // finite-difference oracles
  int fd_grid_count = 4001;
  int degennes_grid_count = 16001;
  double degennes_L = 15.0;

  int n_max = 400;
  BetaGridSpec beta_grid;

  double deriv_xcheck_tol = 1e-5;
  double const_tol = 1e-5;

  std::string output_dir = "out";
  OutputFormat format = OutputFormat::Csv;

  int max_terms_for(double z) const {
    return max_terms > 0 ? max_terms : static_cast<int>(20.0 * (z + 50.0));
  }

  // Throws Error(InvalidParams) when a field violates its invariant.
  void validate() const;
};

// Parses a flat "key = value" text file ('#' starts a comment) over `base`.
SolverConfig load_config_file(const std::string& path, SolverConfig base = {});
BetaGridSpec parse_beta_grid(const std::string& text);

}  // namespace magdisk
