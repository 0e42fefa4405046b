#include "magdisk/config.hpp"

#include <fstream>
#include <sstream>

#include "magdisk/errors.hpp"

namespace magdisk {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_real(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const double v = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidParams, "config key '" + key + "' expects a real, got '" + value + "'");
  }
}

int to_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidParams, "config key '" + key + "' expects an integer, got '" + value + "'");
  }
}

}  // namespace

BetaGridSpec parse_beta_grid(const std::string& text) {
  std::stringstream ss(text);
  std::string a, b, c;
  if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c) ) {
    throw Error(ErrorCode::InvalidParams, "beta grid must be START:STOP:STEP, got '" + text + "'");
  }
  BetaGridSpec g{to_real("beta_grid", trim(a)), to_real("beta_grid", trim(b)), to_real("beta_grid", trim(c))};
  if (!(g.step > 0) || !(g.start > 0) || g.stop < g.start) {
    throw Error(ErrorCode::InvalidParams, "beta grid needs 0 < START <= STOP and STEP > 0");
  }
  return g;
}

void SolverConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0)) throw Error(ErrorCode::InvalidParams, std::string(name) + " must be > 0");
  };
  positive(series_rel_tol, "series_rel_tol");
  positive(quad_rel_tol, "quad_rel_tol");
  positive(eig_rel_tol, "eig_rel_tol");
  positive(eta_scan_step, "eta_scan_step");
  positive(cross_rel_tol, "cross_rel_tol");
  positive(deriv_xcheck_tol, "deriv_xcheck_tol");
  positive(const_tol, "const_tol");
  positive(degennes_L, "degennes_L");
  positive(beta_grid.step, "beta_grid step");
  if (max_terms < 0) throw Error(ErrorCode::InvalidParams, "max_terms must be >= 0");
  if (fd_grid_count < 16 || degennes_grid_count < 16) {
    throw Error(ErrorCode::InvalidParams, "grid counts must be >= 16");
  }
  if (n_max < 0) throw Error(ErrorCode::InvalidParams, "n_max must be >= 0");
  if (newton_max_iter < 1) throw Error(ErrorCode::InvalidParams, "newton_max_iter must be >= 1");
}

SolverConfig load_config_file(const std::string& path, SolverConfig cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::InvalidParams, path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "series_rel_tol") cfg.series_rel_tol = to_real(key, value);
    else if (key == "max_terms") cfg.max_terms = to_int(key, value);
    else if (key == "quad_rel_tol") cfg.quad_rel_tol = to_real(key, value);
    else if (key == "eig_rel_tol") cfg.eig_rel_tol = to_real(key, value);
    else if (key == "eta_scan_step") cfg.eta_scan_step = to_real(key, value);
    else if (key == "cross_rel_tol") cfg.cross_rel_tol = to_real(key, value);
    else if (key == "newton_max_iter") cfg.newton_max_iter = to_int(key, value);
    else if (key == "fd_grid_count") cfg.fd_grid_count = to_int(key, value);
    else if (key == "degennes_grid_count") cfg.degennes_grid_count = to_int(key, value);
    else if (key == "degennes_L") cfg.degennes_L = to_real(key, value);
    else if (key == "n_max") cfg.n_max = to_int(key, value);
    else if (key == "beta_grid") cfg.beta_grid = parse_beta_grid(value);
    else if (key == "deriv_xcheck_tol") cfg.deriv_xcheck_tol = to_real(key, value);
    else if (key == "const_tol") cfg.const_tol = to_real(key, value);
    else if (key == "output_dir") cfg.output_dir = value;
    else if (key == "format") {
      if (value == "csv") cfg.format = OutputFormat::Csv;
      else if (value == "json") cfg.format = OutputFormat::Json;
      else throw Error(ErrorCode::InvalidParams, "format must be csv or json");
    } else {
      throw Error(ErrorCode::InvalidParams, path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

}  // namespace magdisk
