#include "magdisk/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "magdisk/asymptotics.hpp"
#include "magdisk/disk_spectrum.hpp"
#include "magdisk/errors.hpp"

namespace magdisk::report {

namespace {

using nlohmann::json;

std::size_t column_index(const Table& t, const std::string& column) {
  const auto it = std::find(t.columns.begin(), t.columns.end(), column);
  if (it == t.columns.end()) throw Error(ErrorCode::InvalidParams, "no column '" + column + "'");
  return static_cast<std::size_t>(it - t.columns.begin());
}

std::string cell_text(const Cell& c) {
  if (std::holds_alternative<long long>(c)) return std::to_string(std::get<long long>(c));
  if (std::holds_alternative<double>(c)) return format_real(std::get<double>(c));
  if (std::holds_alternative<std::string>(c)) {
    std::string s = std::get<std::string>(c);
    std::replace(s.begin(), s.end(), ',', ';');
    return s;
  }
  return {};
}

Cell parse_cell(const std::string& s) {
  if (s.empty()) return std::monostate{};
  const char* first = s.c_str();
  char* end = nullptr;
  if (s.find_first_of(".eEnN") == std::string::npos) {
    const long long v = std::strtoll(first, &end, 10);
    if (end && *end == '\0') return v;
  }
  const double v = std::strtod(first, &end);
  if (end && *end == '\0') return v;
  return s;
}

Cell opt(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

std::vector<CrossingPoint> phi_crossings(int last, const SolverConfig& cfg) {
  std::vector<CrossingPoint> out;
  for (int n = 0; n <= last; ++n) out.push_back(crossing_by_phi(n, cfg));
  return out;
}

std::vector<int> derivative_rows(int n_max) {
  std::vector<int> rows;
  for (int n = 0; n <= std::min(10, n_max); ++n) rows.push_back(n);
  for (int n : {25, 50, 100, 200, 300, 400}) {
    if (n <= n_max) rows.push_back(n);
  }
  return rows;
}

}  // namespace

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.16g", v);
  return buf;
}

std::optional<double> real_at(const Table& t, std::size_t row, const std::string& column) {
  const Cell& c = t.rows.at(row).at(column_index(t, column));
  if (std::holds_alternative<double>(c)) return std::get<double>(c);
  if (std::holds_alternative<long long>(c)) return static_cast<double>(std::get<long long>(c));
  return std::nullopt;
}

std::string text_at(const Table& t, std::size_t row, const std::string& column) {
  return cell_text(t.rows.at(row).at(column_index(t, column)));
}

std::string to_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + cell_text(row[i]);
    out += '\n';
  }
  return out;
}

Table parse_csv(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ls(line);
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    if (header) {
      t.columns = fields;
      header = false;
      continue;
    }
    if (line.empty()) continue;
    fields.resize(t.columns.size());
    std::vector<Cell> row;
    for (const auto& f : fields) row.push_back(parse_cell(f));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string to_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    json r = json::array();
    for (const auto& c : row) {
      if (std::holds_alternative<long long>(c)) r.push_back(std::get<long long>(c));
      else if (std::holds_alternative<double>(c)) r.push_back(std::get<double>(c));
      else if (std::holds_alternative<std::string>(c)) r.push_back(std::get<std::string>(c));
      else r.push_back(nullptr);
    }
    rows.push_back(std::move(r));
  }
  return json{{"columns", t.columns}, {"rows", rows}}.dump(1) + "\n";
}

Table parse_json(const std::string& text) {
  const json j = json::parse(text);
  Table t;
  t.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    std::vector<Cell> row;
    for (const auto& c : r) {
      if (c.is_null()) row.emplace_back(std::monostate{});
      else if (c.is_number_integer()) row.emplace_back(c.get<long long>());
      else if (c.is_number()) row.emplace_back(c.get<double>());
      else row.emplace_back(c.get<std::string>());
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string write_text(const std::string& text, const std::string& dir, const std::string& name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const std::string path = (std::filesystem::path(dir) / name).string();
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
  return path;
}

std::string write_table(const Table& t, const std::string& dir, const std::string& stem, OutputFormat format) {
  return format == OutputFormat::Json ? write_text(to_json(t), dir, stem + ".json")
                                      : write_text(to_csv(t), dir, stem + ".csv");
}

Table read_table(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return path.size() > 5 && path.substr(path.size() - 5) == ".json" ? parse_json(ss.str()) : parse_csv(ss.str());
}

Table crossings_table(const std::vector<CrossingPoint>& crossings) {
  Table t{{"n", "beta", "eta_star", "lambda_star", "sj_residual", "residual_n", "residual_n1", "method"}, {}};
  for (const auto& c : crossings) {
    t.rows.push_back({static_cast<long long>(c.n), c.beta_n, c.eta_star, c.lambda_star, c.sj_residual,
                      c.sys_residuals.first, c.sys_residuals.second, to_string(c.method)});
  }
  return t;
}

Table implicit_table(const std::vector<CrossingPoint>& system, const std::vector<CrossingPoint>& phi) {
  Table t{{"n", "beta", "eta_star", "epsilon"}, {}};
  for (std::size_t i = 0; i < phi.size(); ++i) {
    const double eps = std::abs(phi[i].eta_star - system[i].eta_star) / system[i].eta_star;
    t.rows.push_back({static_cast<long long>(phi[i].n), phi[i].beta_n, phi[i].eta_star, eps});
  }
  return t;
}

Table gamma_table(const std::vector<CrossingPoint>& crossings) {
  const HalfPowerSequence g = gamma_sequence(crossings);
  HalfPowerSequence r4;
  try {
    r4 = richardson(g, 4);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientData) throw;
  }
  Table t{{"n", "gamma", "r4_gamma"}, {}};
  for (const auto& [n, v] : g.values) t.rows.push_back({static_cast<long long>(n), v, opt(r4.at(n))});
  return t;
}

Table derivatives_table(const std::vector<CrossingPoint>& crossings, const DerivativeLimits& limits,
                        const std::vector<int>& rows) {
  Table t{{"n", "beta", "dlambda_left", "dlambda_right", "r4_left", "r4_right"}, {}};
  for (int n : rows) {
    t.rows.push_back({static_cast<long long>(n), crossings.at(n).beta_n, opt(limits.left.at(n)),
                      opt(limits.right.at(n)), opt(limits.left_r4.at(n)), opt(limits.right_r4.at(n))});
  }
  return t;
}

Table expansion_table(const std::vector<LimitCheck>& checks) {
  Table t{{"check", "expected", "r4", "r3", "index", "tolerance", "pass"}, {}};
  for (const auto& c : checks) {
    t.rows.push_back({c.name, c.expected, c.extrapolated, c.depth3, static_cast<long long>(c.index), c.tolerance,
                      std::string(c.pass ? "pass" : "fail")});
  }
  return t;
}

Table scan_table(const ScanReport& scan) {
  Table t{{"item", "value", "pass", "witness_n", "witness_beta"}, {}};
  for (const auto& i : scan.items) {
    t.rows.push_back({i.name, i.value, std::string(i.pass ? "pass" : "fail"), static_cast<long long>(i.witness_n),
                      i.witness_beta});
  }
  return t;
}

std::string constants_json(const DeGennesConstants& c, double stationarity) {
  json j{{"theta0", c.theta0},
         {"xi0", c.xi0},
         {"c1", c.c1},
         {"u0_trace", c.u0_trace},
         {"delta0", c.delta0_fit},
         {"delta0_formula", c.delta0_formula},
         {"delta0_fit", c.delta0_fit},
         {"c0", c.c0_fit},
         {"lambda1", c.lambda1_check},
         {"lambda2_leading", c.lambda2_leading},
         {"theta0_minus_xi0_sq", c.theta0 - c.xi0 * c.xi0},
         {"stationarity", stationarity},
         {"solver", {{"grid_count", c.grid_count}, {"L", c.L}, {"c0_grid_change", c.c0_grid_change}}}};
  return j.dump(1) + "\n";
}

std::vector<double> beta_grid_values(const BetaGridSpec& spec) {
  std::vector<double> out;
  const long long count = static_cast<long long>(std::floor((spec.stop - spec.start) / spec.step + 1e-9)) + 1;
  for (long long i = 0; i < count; ++i) out.push_back(spec.start + static_cast<double>(i) * spec.step);
  return out;
}

std::vector<CrossingPoint> crossings_up_to(int last, const SolverConfig& cfg) {
  std::vector<CrossingPoint> out;
  for (int n = 0; n <= last; ++n) out.push_back(crossing_by_system(n, cfg));
  return out;
}

std::vector<std::string> cmd_curves(const SolverConfig& cfg) {
  std::vector<std::string> paths;
  const std::vector<double> grid = beta_grid_values(cfg.beta_grid);
  for (int n = 0; n <= std::min(cfg.n_max, 20); ++n) {
    Table t{{"beta", "eta"}, {}};
    for (double beta : grid) t.rows.push_back({beta, lowest_eigenvalue(n, beta, cfg).eta});
    paths.push_back(write_table(t, cfg.output_dir, "curve_n" + std::to_string(n), cfg.format));
  }
  const DeGennesConstants c = minimize_theta0(cfg);
  Table ref{{"name", "value"}, {{std::string("one"), 1.0}, {std::string("theta0"), c.theta0}}};
  paths.push_back(write_table(ref, cfg.output_dir, "curve_reference", cfg.format));
  return paths;
}

std::vector<std::string> cmd_crossings(const SolverConfig& cfg) {
  const std::vector<CrossingPoint> system = crossings_up_to(cfg.n_max, cfg);
  const std::vector<CrossingPoint> phi = phi_crossings(cfg.n_max, cfg);
  return {write_table(crossings_table(system), cfg.output_dir, "crossings", cfg.format),
          write_table(implicit_table(system, phi), cfg.output_dir, "implicit", cfg.format)};
}

std::vector<std::string> cmd_constants(const SolverConfig& cfg) {
  const DeGennesConstants c = compute_degennes_constants(cfg);
  std::vector<std::string> paths{write_text(constants_json(c, stationarity_check(c, cfg)), cfg.output_dir,
                                            "constants.json")};
  if (cfg.format == OutputFormat::Csv) {
    Table t{{"name", "value"},
            {{std::string("theta0"), c.theta0},
             {std::string("xi0"), c.xi0},
             {std::string("c1"), c.c1},
             {std::string("u0_trace"), c.u0_trace},
             {std::string("delta0_formula"), c.delta0_formula},
             {std::string("delta0_fit"), c.delta0_fit},
             {std::string("c0"), c.c0_fit},
             {std::string("lambda1"), c.lambda1_check}}};
    paths.push_back(write_table(t, cfg.output_dir, "constants", cfg.format));
  }
  return paths;
}

std::vector<std::string> cmd_derivatives(const SolverConfig& cfg) {
  const std::vector<CrossingPoint> crossings = crossings_up_to(cfg.n_max, cfg);
  DerivativeLimits limits;
  std::vector<std::string> paths;
  if (crossings.size() >= 17) {
    const DeGennesConstants c = compute_degennes_constants(cfg);
    limits = derivative_limits_check(crossings, c, cfg);
    paths.push_back(write_table(expansion_table({limits.left_check, limits.right_check}), cfg.output_dir,
                                "derivative_limits", cfg.format));
  } else {
    for (const auto& x : crossings) {
      const OneSided s = one_sided_derivatives(x, cfg);
      limits.left.push(x.n, s.left);
      limits.right.push(x.n, s.right);
    }
  }
  paths.insert(paths.begin(), write_table(derivatives_table(crossings, limits, derivative_rows(cfg.n_max)),
                                          cfg.output_dir, "derivatives", cfg.format));
  return paths;
}

std::vector<std::string> cmd_richardson(const SolverConfig& cfg) {
  const std::vector<CrossingPoint> crossings = crossings_up_to(cfg.n_max, cfg);
  std::vector<std::string> paths{write_table(gamma_table(crossings), cfg.output_dir, "gamma", cfg.format)};
  try {
    const DeGennesConstants c = compute_degennes_constants(cfg);
    std::vector<LimitCheck> checks;
    for (const auto& rep : {beta_expansion_check(crossings, c), eta_star_expansion_check(crossings, c),
                            delta_at_crossings_check(crossings, c)}) {
      checks.insert(checks.end(), rep.checks.begin(), rep.checks.end());
    }
    paths.push_back(write_table(expansion_table(checks), cfg.output_dir, "expansions", cfg.format));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InsufficientData) throw;
  }
  return paths;
}

std::vector<std::string> cmd_conjectures(const SolverConfig& cfg, bool& all_pass) {
  const std::vector<CrossingPoint> crossings = crossings_up_to(cfg.n_max + 1, cfg);
  const DeGennesConstants c = minimize_theta0(cfg);
  const ScanReport scan = conjecture_scan(beta_grid_values(cfg.beta_grid), cfg.n_max, crossings, c, cfg);
  all_pass = scan.all_pass();
  return {write_table(scan_table(scan), cfg.output_dir, "conjectures", cfg.format)};
}

}  // namespace magdisk::report
