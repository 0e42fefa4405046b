#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "magdisk/config.hpp"
#include "magdisk/degennes.hpp"
#include "magdisk/diamagnetism.hpp"
#include "magdisk/intersections.hpp"

namespace magdisk::report {

// A cell is blank, an integer, a real or a label.
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// 16 significant digits, the precision of the printed tables.
std::string format_real(double v);

// Column-wise typed access for reading tables back.
std::optional<double> real_at(const Table& t, std::size_t row, const std::string& column);
std::string text_at(const Table& t, std::size_t row, const std::string& column);

std::string to_csv(const Table& t);
Table parse_csv(const std::string& text);
// {"columns": [...], "rows": [[...], ...]}, blanks as null.
std::string to_json(const Table& t);
Table parse_json(const std::string& text);

// Writes `stem`.csv or `stem`.json under dir; returns the path.
std::string write_table(const Table& t, const std::string& dir, const std::string& stem, OutputFormat format);
std::string write_text(const std::string& text, const std::string& dir, const std::string& name);
Table read_table(const std::string& path);

// Table builders.
Table crossings_table(const std::vector<CrossingPoint>& crossings);
Table implicit_table(const std::vector<CrossingPoint>& system, const std::vector<CrossingPoint>& phi);
Table gamma_table(const std::vector<CrossingPoint>& crossings);
Table derivatives_table(const std::vector<CrossingPoint>& crossings, const DerivativeLimits& limits,
                        const std::vector<int>& rows);
Table expansion_table(const std::vector<LimitCheck>& checks);
Table scan_table(const ScanReport& scan);
std::string constants_json(const DeGennesConstants& c, double stationarity);
std::vector<double> beta_grid_values(const BetaGridSpec& spec);

// Crossings n = 0..last by the Kummer-system method.
std::vector<CrossingPoint> crossings_up_to(int last, const SolverConfig& cfg);

// Subcommands. Each returns the written paths; conjectures also reports
// whether every scan item passed.
std::vector<std::string> cmd_curves(const SolverConfig& cfg);
std::vector<std::string> cmd_crossings(const SolverConfig& cfg);
std::vector<std::string> cmd_constants(const SolverConfig& cfg);
std::vector<std::string> cmd_derivatives(const SolverConfig& cfg);
std::vector<std::string> cmd_richardson(const SolverConfig& cfg);
std::vector<std::string> cmd_conjectures(const SolverConfig& cfg, bool& all_pass);

}  // namespace magdisk::report
