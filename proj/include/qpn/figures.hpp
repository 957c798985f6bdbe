#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qpn/config.hpp"
#include "qpn/parallel.hpp"

namespace qpn {

// One output table: a named curve with provenance metadata.
struct Curve {
  std::string name;                                        // file stem
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> meta;   // provenance header
};

// Deterministic CSV: '#'-prefixed provenance lines, then header, then rows in
// scientific notation with 12 significant digits and LF line endings.
std::string format_csv(const Curve& curve);
std::string format_json(const Curve& curve);

// Writes curve.name + ".csv"/".json" into dir (created if needed); returns the path.
std::string write_curve(const Curve& curve, const std::string& dir, const std::string& format);

// Figure reproductions (2..6).  Each returns one Curve per plotted line.
std::vector<Curve> run_figure(int id, const RunConfig& cfg, Exec mode = Exec::Par);

// Cartesian sweep over the config grid x the x_qp_res list; one row per point.
Curve run_sweep(const RunConfig& cfg, Exec mode = Exec::Par);

// Sweep writer that skips rows already present in an existing output file
// (deterministic ordering makes a row count sufficient).  Returns rows appended.
int write_sweep_resumable(const Curve& curve, const std::string& dir);

// Emits the canonical config echo next to the data files.
std::string write_config_echo(const RunConfig& cfg, const std::string& dir);

}  // namespace qpn
