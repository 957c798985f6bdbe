#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpn/errors.hpp"
#include "qpn/fdt.hpp"
#include "qpn/figures.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  std::string format;
  bool serial = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--config", opts.config_path, "JSON config file (merged over the preset)");
  cmd->add_option("--preset", opts.preset, "figure preset: fig2..fig6 or nbtin");
  cmd->add_option("--out", opts.out_dir, "output directory");
  cmd->add_option("--format", opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--serial", opts.serial, "serial grid evaluation (reference path)");
}

qpn::RunConfig assemble_config(const CommonOpts& opts, const std::string& default_preset = "") {
  json overrides = json::object();
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) throw qpn::ConfigError("config", "cannot open file '" + opts.config_path + "'");
    try {
      in >> overrides;
    } catch (const json::parse_error& e) {
      throw qpn::ConfigError("config", std::string("JSON parse error: ") + e.what());
    }
  }
  const std::string preset = !opts.preset.empty() ? opts.preset : default_preset;
  qpn::RunConfig cfg = preset.empty() ? qpn::parse_config(overrides)
                                      : qpn::config_from_preset(preset, overrides);
  if (!opts.out_dir.empty()) cfg.output.directory = opts.out_dir;
  if (!opts.format.empty()) cfg.output.format = opts.format;
  return cfg;
}

int run_quantity(const CommonOpts& opts, const std::string& quantity,
                 const std::string& default_preset) {
  qpn::RunConfig cfg = assemble_config(opts, default_preset);
  if (!cfg.sweep) throw qpn::ConfigError("sweep", "required for '" + quantity + "'");
  cfg.sweep->quantity = quantity;
  const qpn::Curve curve = qpn::run_sweep(cfg, opts.serial ? qpn::Exec::Serial : qpn::Exec::Par);
  if (cfg.output.format == "json") {
    const std::string path = qpn::write_curve(curve, cfg.output.directory, "json");
    std::cout << path << "\n";
  } else {
    const int appended = qpn::write_sweep_resumable(curve, cfg.output.directory);
    std::cout << cfg.output.directory + "/" + curve.name + ".csv"
              << " (" << appended << " rows appended)\n";
  }
  qpn::write_config_echo(cfg, cfg.output.directory);
  return 0;
}

int run_figure_cmd(const CommonOpts& opts, int id) {
  const std::string preset = "fig" + std::to_string(id);
  qpn::RunConfig cfg = assemble_config(opts, preset);
  const auto curves = qpn::run_figure(id, cfg, opts.serial ? qpn::Exec::Serial : qpn::Exec::Par);
  for (const auto& c : curves)
    std::cout << qpn::write_curve(c, cfg.output.directory, cfg.output.format) << "\n";
  qpn::write_config_echo(cfg, cfg.output.directory);
  return 0;
}

int run_fdt_check(const std::string& out_dir, std::size_t systems, std::size_t dim_lo,
                  std::size_t dim_hi, std::uint64_t seed, bool serial) {
  const auto results = qpn::fdt::run_batch(systems, dim_lo, dim_hi, seed, !serial);
  double max_gfdt = 0.0, max_fdt = 0.0;
  std::printf("%-8s %-4s %-14s %-14s\n", "seed", "dim", "gfdt_residual", "fdt_residual");
  for (const auto& r : results) {
    std::printf("%-8llu %-4zu %-14.3e %-14.3e\n", static_cast<unsigned long long>(r.seed),
                r.dim, r.gfdt_residual, r.fdt_residual);
    max_gfdt = std::max(max_gfdt, r.gfdt_residual);
    max_fdt = std::max(max_fdt, r.fdt_residual);
  }
  std::printf("max: gfdt %.3e, fdt-reduction %.3e (threshold 1e-12)\n", max_gfdt, max_fdt);
  json report;
  report["systems"] = systems;
  report["dim_range"] = {dim_lo, dim_hi};
  report["base_seed"] = seed;
  report["max_gfdt_residual"] = max_gfdt;
  report["max_fdt_residual"] = max_fdt;
  json rows = json::array();
  for (const auto& r : results)
    rows.push_back({{"seed", r.seed}, {"dim", r.dim}, {"gfdt", r.gfdt_residual},
                    {"fdt", r.fdt_residual}});
  report["results"] = rows;
  std::filesystem::create_directories(out_dir);
  std::ofstream(out_dir + "/fdt_report.json") << report.dump(2) << "\n";
  return (max_gfdt < 1e-12 && max_fdt < 1e-12) ? 0 : 1;
}

void emit_error(const std::string& type, const std::string& message, const std::string& key) {
  json err;
  err["error"]["type"] = type;
  err["error"]["message"] = message;
  if (!key.empty()) err["error"]["key"] = key;
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasiparticle dissipation and noise in superconducting circuits"};
  app.require_subcommand(1);

  CommonOpts opts;
  struct Verb {
    const char* name;
    const char* help;
    const char* preset;
  };
  const Verb verbs[] = {
      {"conductivity", "complex conductivity sweep", "fig2"},
      {"quality-factor", "CPW quality factor sweep", "fig3"},
      {"t1", "transmon energy relaxation sweep", "fig4"},
      {"flux-noise", "flux noise spectral density sweep", "fig5"},
      {"t2star", "split-transmon Ramsey time sweep", "fig6"},
  };
  for (const auto& v : verbs) add_common(app.add_subcommand(v.name, v.help), opts);

  auto* fig = app.add_subcommand("figure", "reproduce a figure data set (2..6)");
  int fig_id = 0;
  fig->add_option("id", fig_id, "figure number")->required()->check(CLI::Range(2, 6));
  add_common(fig, opts);

  auto* sweep = app.add_subcommand("sweep", "cartesian sweep from the config sweep block");
  add_common(sweep, opts);

  auto* fdt = app.add_subcommand("fdt-check", "finite-dimensional FDT identity check");
  std::size_t systems = 100, dim_lo = 2, dim_hi = 8;
  std::uint64_t seed = 20240901;
  std::string fdt_out = ".";
  bool fdt_serial = false;
  fdt->add_option("--systems", systems, "number of random systems");
  fdt->add_option("--dim-lo", dim_lo, "minimum dimension")->check(CLI::Range(2, 16));
  fdt->add_option("--dim-hi", dim_hi, "maximum dimension")->check(CLI::Range(2, 16));
  fdt->add_option("--seed", seed, "base seed (results are reproducible)");
  fdt->add_option("--out", fdt_out, "output directory for the JSON report");
  fdt->add_flag("--serial", fdt_serial, "serial batch evaluation");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& v : verbs)
      if (app.got_subcommand(v.name)) return run_quantity(opts, v.name, v.preset);
    if (app.got_subcommand("figure")) return run_figure_cmd(opts, fig_id);
    if (app.got_subcommand("sweep")) {
      qpn::RunConfig cfg = assemble_config(opts);
      if (!cfg.sweep) throw qpn::ConfigError("sweep", "required");
      const qpn::Curve curve =
          qpn::run_sweep(cfg, opts.serial ? qpn::Exec::Serial : qpn::Exec::Par);
      const int appended = qpn::write_sweep_resumable(curve, cfg.output.directory);
      std::cout << cfg.output.directory + "/" + curve.name + ".csv"
                << " (" << appended << " rows appended)\n";
      qpn::write_config_echo(cfg, cfg.output.directory);
      return 0;
    }
    if (app.got_subcommand("fdt-check"))
      return run_fdt_check(fdt_out, systems, dim_lo, dim_hi, seed, fdt_serial);
  } catch (const qpn::ConfigError& e) {
    emit_error("config", e.what(), e.key());
    return 1;
  } catch (const qpn::QuadratureError& e) {
    emit_error("quadrature", e.what(), "");
    return 1;
  } catch (const std::exception& e) {
    emit_error("runtime", e.what(), "");
    return 1;
  }
  return 1;
}
