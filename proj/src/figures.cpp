#include "qpn/figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qpn/conductivity.hpp"
#include "qpn/constants.hpp"
#include "qpn/decoherence.hpp"
#include "qpn/hash.hpp"

namespace qpn {

namespace k = constants;
namespace fs = std::filesystem;

namespace {

std::string fmt(double v) {
  char buf[32];
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

std::string xres_tag(double x) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%.0e", x);
  return buf;
}

std::vector<std::pair<std::string, std::string>> base_meta(const RunConfig& cfg) {
  // hash covers the physics inputs only; the output block does not alter data
  nlohmann::json j = config_to_json(cfg);
  j.erase("output");
  const std::string dump = j.dump();
  std::vector<std::pair<std::string, std::string>> m;
  m.emplace_back("config_hash", content_hash(dump));
  m.emplace_back("material", cfg.material.name);
  m.emplace_back("gap_GHz", fmt(cfg.material.gap_GHz));
  m.emplace_back("lambda_nm", fmt(cfg.material.lambda_nm));
  m.emplace_back("temperature_mK", fmt(cfg.material.temperature_mK));
  return m;
}

std::vector<double> grid_values(const RunConfig& cfg) {
  if (!cfg.sweep) throw ConfigError("sweep", "required for this command");
  return cfg.sweep->grid.values();
}

// Physics failures surface with the identity of the curve being built.
template <class Fn>
void build_rows(Curve& c, std::size_t n, Exec mode, Fn&& fn) {
  try {
    parallel_for(n, mode, fn);
  } catch (const std::exception& e) {
    throw std::runtime_error("curve '" + c.name + "': " + e.what());
  }
}

double grid_point_to_omega(const GridSpec& g, double v, const Material& mat) {
  if (g.variable == "omega_over_2pi_GHz") return 2.0 * k::pi * v * 1e9;
  if (g.variable == "omega_over_2pi_MHz") return 2.0 * k::pi * v * 1e6;
  if (g.variable == "hbar_omega_over_kT") return v * mat.kT() / k::hbar;
  throw ConfigError("sweep.grid.variable", "not a frequency variable");
}

// ---- figure builders ----

std::vector<Curve> figure2(const RunConfig& cfg, Exec mode) {
  const Material mat = make_material(cfg.material);
  const QpDistribution dist = make_distribution(cfg.distribution, cfg.distribution.x_qp_res[0]);
  const std::vector<double> ratios = grid_values(cfg);
  const double x = xqp_total(dist, mat);
  const double sigma0 = x * std::pow(2.0 * mat.gap / mat.kT(), 1.5);

  Curve c;
  c.name = "fig2_sigma1";
  c.columns = {"hbar_omega_over_kT", "sigma1_exact_over_sigma0", "sigma1_approx_over_sigma0"};
  c.rows.assign(ratios.size(), {});
  build_rows(c, ratios.size(), mode, [&](std::size_t i) {
    const double omega = ratios[i] * mat.kT() / k::hbar;
    const double exact = sigma1_exact(dist, mat, omega);
    const double approx = sigma1_approx(x, mat, omega).value;
    c.rows[i] = {ratios[i], exact / sigma0, approx / sigma0};
  });
  c.meta = base_meta(cfg);
  c.meta.emplace_back("normalization", "sigma0 = sigmaN x_qp (2 gap/kT)^1.5");
  return {c};
}

std::vector<Curve> figure3(const RunConfig& cfg, Exec mode) {
  if (!cfg.device || cfg.device->kind != "cpw")
    throw ConfigError("device.kind", "figure 3 requires a cpw device");
  const Material mat = make_material(cfg.material);
  const std::vector<double> ghz = grid_values(cfg);
  std::vector<Curve> out;

  for (double x : cfg.distribution.x_qp_res) {
    const QpDistribution dist = make_distribution(cfg.distribution, x);
    Curve c;
    c.name = "fig3_qqp_xres" + xres_tag(x);
    c.columns = {"omega_over_2pi_Hz", "q_qp"};
    c.rows.assign(ghz.size(), {});
    build_rows(c, ghz.size(), mode, [&](std::size_t i) {
      const double omega = 2.0 * k::pi * ghz[i] * 1e9;
      const CpwResonator cpw = make_cpw(cfg.device->cpw, mat, omega);
      c.rows[i] = {ghz[i] * 1e9, quality_factor_cpw(cpw, dist, mat)};
    });
    c.meta = base_meta(cfg);
    c.meta.emplace_back("x_qp_res", fmt(x));
    out.push_back(std::move(c));
  }
  if (cfg.tls) {
    const double amp = tls_amplitude(*cfg.tls);
    Curve c;
    c.name = "fig3_qtls";
    c.columns = {"omega_over_2pi_Hz", "q_tls"};
    for (double g : ghz) {
      const double omega = 2.0 * k::pi * g * 1e9;
      const double q = 1.0 / (amp * std::tanh(k::hbar * omega / (2.0 * mat.kT())));
      c.rows.push_back({g * 1e9, q});
    }
    c.meta = base_meta(cfg);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Curve> figure4(const RunConfig& cfg, Exec mode) {
  if (!cfg.device || cfg.device->kind != "transmon")
    throw ConfigError("device.kind", "figure 4 requires a transmon device");
  const Material mat = make_material(cfg.material);
  const std::vector<double> ghz = grid_values(cfg);
  std::vector<Curve> out;

  auto t1_curve = [&](double x, bool ge, const std::string& name) {
    const QpDistribution dist = make_distribution(cfg.distribution, x);
    Curve c;
    c.name = name;
    c.columns = {"omega_over_2pi_Hz", "t1_s", "rate_junction_per_s", "rate_wire_per_s"};
    c.rows.assign(ghz.size(), {});
    build_rows(c, ghz.size(), mode, [&](std::size_t i) {
      const double omega = 2.0 * k::pi * ghz[i] * 1e9;
      Transmon t = make_transmon(cfg.device->transmon, mat, omega);
      t.junction.gap_engineered = ge;
      const TransmonT1 r = t1_transmon(t, dist, mat);
      c.rows[i] = {ghz[i] * 1e9, r.t1, r.rate_junction, r.rate_wire};
    });
    c.meta = base_meta(cfg);
    c.meta.emplace_back("x_qp_res", fmt(x));
    c.meta.emplace_back("junction", ge ? "gap-engineered" : "non-gap-engineered");
    return c;
  };

  const double x_max =
      *std::max_element(cfg.distribution.x_qp_res.begin(), cfg.distribution.x_qp_res.end());
  out.push_back(t1_curve(x_max, false, "fig4_t1_nge_xres" + xres_tag(x_max)));
  for (double x : cfg.distribution.x_qp_res)
    out.push_back(t1_curve(x, true, "fig4_t1_ge_xres" + xres_tag(x)));

  if (cfg.tls) {
    // TLS channel via the FDT chain; tanh x coth collapses to Omega * amplitude.
    const double amp = tls_amplitude(*cfg.tls);
    const TlsParameters tls = make_tls(*cfg.tls);
    Curve c;
    c.name = "fig4_t1_tls";
    c.columns = {"omega_over_2pi_Hz", "t1_s"};
    for (double g : ghz) {
      const double omega = 2.0 * k::pi * g * 1e9;
      const Transmon t = make_transmon(cfg.device->transmon, mat, omega);
      double t1;
      if (cfg.tls->tan_delta_total || cfg.tls->q_total) {
        t1 = 1.0 / (omega * amp);
      } else {
        const double sp = tls_charge_noise(tls, t.capacitance, mat.temperature, omega);
        const double sm = tls_charge_noise(tls, t.capacitance, mat.temperature, -omega);
        t1 = t1_resonator(sp, sm, t.capacitance, omega);
      }
      c.rows.push_back({g * 1e9, t1});
    }
    c.meta = base_meta(cfg);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Curve> figure5(const RunConfig& cfg, Exec mode) {
  if (!cfg.device || cfg.device->kind != "flux_qubit")
    throw ConfigError("device.kind", "figure 5 requires a flux_qubit device");
  const Material mat = make_material(cfg.material);
  const FluxQubit fq = make_flux_qubit(cfg.device->flux_qubit, mat);
  const std::vector<double> mhz = grid_values(cfg);
  std::vector<Curve> out;

  std::vector<double> omegas(mhz.size());
  for (std::size_t i = 0; i < mhz.size(); ++i) omegas[i] = 2.0 * k::pi * mhz[i] * 1e6;

  auto spectrum_curve = [&](double x, bool ge, const std::string& name) {
    FluxQubit dev = fq;
    dev.junction.gap_engineered = ge;
    const QpDistribution dist = make_distribution(cfg.distribution, x);
    NoiseSpectrum spec;
    try {
      spec = sample_spectrum(
          NoiseKind::flux,
          [&](double w) {
            return qp_flux_noise_flux_qubit(dev, sigma1_exact(dist, mat, w), mat, w);
          },
          omegas, mat.temperature, "Wb^2 s",
          name + (ge ? " (gap-engineered)" : " (non-gap-engineered)"), mode);
    } catch (const std::exception& e) {
      throw std::runtime_error("curve '" + name + "': " + e.what());
    }
    Curve c;
    c.name = name;
    c.columns = {"omega_rad_s", "frequency_Hz", "S_value", "units"};
    c.rows.assign(omegas.size(), {});
    for (std::size_t i = 0; i < omegas.size(); ++i)
      c.rows[i] = {spec.omega[i], spec.omega[i] / (2.0 * k::pi),
                   flux_to_phi0sq_per_hz(spec.value[i]), 0.0};
    c.meta = base_meta(cfg);
    c.meta.emplace_back("x_qp_res", fmt(x));
    c.meta.emplace_back("units", "Phi0^2/Hz");
    c.meta.emplace_back("junction", ge ? "gap-engineered" : "non-gap-engineered");
    return c;
  };

  for (double x : cfg.distribution.x_qp_res)
    out.push_back(spectrum_curve(x, false, "fig5_sphi_nge_xres" + xres_tag(x)));
  const double x_max =
      *std::max_element(cfg.distribution.x_qp_res.begin(), cfg.distribution.x_qp_res.end());
  out.push_back(spectrum_curve(x_max, true, "fig5_sphi_ge_xres" + xres_tag(x_max)));

  const double l_total = flux_qubit_total_inductance(fq, mat);
  if (cfg.tls) {
    const double amp = tls_amplitude(*cfg.tls);
    Curve c;
    c.name = "fig5_sphi_tls";
    c.columns = {"omega_rad_s", "frequency_Hz", "S_value", "units"};
    for (double m : mhz) {
      const double omega = 2.0 * k::pi * m * 1e6;
      const double tan_delta = amp * std::tanh(k::hbar * omega / (2.0 * mat.kT()));
      const double sq = 2.0 * k::hbar * fq.capacitance * tan_delta *
                        bose_occupation_plus_one(omega, mat.temperature);
      const double s = flux_noise_from_charge(sq, l_total, omega);
      c.rows.push_back({omega, m * 1e6, flux_to_phi0sq_per_hz(s), 0.0});
    }
    c.meta = base_meta(cfg);
    c.meta.emplace_back("units", "Phi0^2/Hz");
    out.push_back(std::move(c));
  }
  {
    Curve c;
    c.name = "fig5_sphi_spins";
    c.columns = {"omega_rad_s", "frequency_Hz", "S_value", "units"};
    for (double m : mhz) {
      const double omega = 2.0 * k::pi * m * 1e6;
      c.rows.push_back({omega, m * 1e6, spin_flux_noise_phi0sq_per_hz(omega), 0.0});
    }
    c.meta = base_meta(cfg);
    c.meta.emplace_back("units", "Phi0^2/Hz");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Curve> figure6(const RunConfig& cfg, Exec mode) {
  if (!cfg.device || cfg.device->kind != "split_transmon")
    throw ConfigError("device.kind", "figure 6 requires a split_transmon device");
  const Material mat = make_material(cfg.material);
  const std::vector<double> phis = grid_values(cfg);
  std::vector<Curve> out;

  // The default op bracket [1 ns, 10 s] clips gap-engineered curves; the
  // figure solves on a wider window so the plotted range is not artificial.
  const Bracket figure_bracket{1e-9, 1e4};

  auto t2_curve = [&](double x, bool ge, const std::string& name) {
    const QpDistribution dist = make_distribution(cfg.distribution, x);
    Curve c;
    c.name = name;
    c.columns = {"phi_over_phi0", "omega_over_2pi_Hz", "t2star_s", "within_validity"};
    c.rows.assign(phis.size(), {});
    build_rows(c, phis.size(), mode, [&](std::size_t i) {
      SplitTransmon st = make_split_transmon(cfg.device->split_transmon, mat, phis[i]);
      st.junction.gap_engineered = ge;
      const double omega = device_frequency(DeviceSpec(st));
      const T2StarResult r = t2_star(st, dist, mat, figure_bracket);
      c.rows[i] = {phis[i], omega / (2.0 * k::pi), r.seconds, r.within_validity ? 1.0 : 0.0};
    });
    c.meta = base_meta(cfg);
    c.meta.emplace_back("x_qp_res", fmt(x));
    c.meta.emplace_back("junction", ge ? "gap-engineered" : "non-gap-engineered");
    return c;
  };

  for (double x : cfg.distribution.x_qp_res) {
    out.push_back(t2_curve(x, false, "fig6_t2star_nge_xres" + xres_tag(x)));
    out.push_back(t2_curve(x, true, "fig6_t2star_ge_xres" + xres_tag(x)));
  }
  return out;
}

}  // namespace

std::string format_csv(const Curve& curve) {
  std::ostringstream os;
  for (const auto& [key, value] : curve.meta) os << "# " << key << ": " << value << "\n";
  for (std::size_t i = 0; i < curve.columns.size(); ++i)
    os << curve.columns[i] << (i + 1 < curve.columns.size() ? "," : "\n");
  const bool units_col = !curve.columns.empty() && curve.columns.back() == "units";
  std::string units = "";
  if (units_col)
    for (const auto& [key, value] : curve.meta)
      if (key == "units") units = value;
  for (const auto& row : curve.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const bool last = i + 1 == row.size();
      if (last && units_col)
        os << units;
      else
        os << fmt(row[i]);
      os << (last ? "\n" : ",");
    }
  }
  return os.str();
}

std::string format_json(const Curve& curve) {
  nlohmann::json j;
  j["name"] = curve.name;
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : curve.meta) meta[key] = value;
  j["provenance"] = meta;
  j["columns"] = curve.columns;
  j["rows"] = curve.rows;
  return j.dump(2) + "\n";
}

std::string write_curve(const Curve& curve, const std::string& dir, const std::string& format) {
  fs::create_directories(dir);
  const std::string path = dir + "/" + curve.name + (format == "json" ? ".json" : ".csv");
  std::ofstream out(path, std::ios::binary);
  out << (format == "json" ? format_json(curve) : format_csv(curve));
  return path;
}

std::vector<Curve> run_figure(int id, const RunConfig& cfg, Exec mode) {
  switch (id) {
    case 2: return figure2(cfg, mode);
    case 3: return figure3(cfg, mode);
    case 4: return figure4(cfg, mode);
    case 5: return figure5(cfg, mode);
    case 6: return figure6(cfg, mode);
    default: throw ConfigError("figure", "id must be in {2, 3, 4, 5, 6}");
  }
}

Curve run_sweep(const RunConfig& cfg, Exec mode) {
  if (!cfg.sweep) throw ConfigError("sweep", "required");
  const Material mat = make_material(cfg.material);
  const std::vector<double> grid = cfg.sweep->grid.values();
  const std::vector<double>& xs = cfg.distribution.x_qp_res;
  const std::string& q = cfg.sweep->quantity;

  Curve c;
  c.name = "sweep_" + q;
  c.meta = base_meta(cfg);
  c.meta.emplace_back("quantity", q);

  struct Point {
    double x;
    double g;
  };
  std::vector<Point> points;
  for (double x : xs)
    for (double g : grid) points.push_back({x, g});
  c.rows.assign(points.size(), {});

  if (q == "conductivity") {
    c.columns = {"x_qp_res", "omega_rad_s", "sigma1_over_sigman", "sigma2_over_sigman",
                 "sigma1_approx_over_sigman", "approx_valid"};
    build_rows(c, points.size(), mode, [&](std::size_t i) {
      const QpDistribution dist = make_distribution(cfg.distribution, points[i].x);
      const double omega = grid_point_to_omega(cfg.sweep->grid, points[i].g, mat);
      const ComplexConductivity s = conductivity(dist, mat, omega);
      const Validated ap = sigma1_approx(xqp_total(dist, mat), mat, omega);
      c.rows[i] = {points[i].x, omega, s.sigma1_over_sigman, s.sigma2_over_sigman, ap.value,
                   ap.valid ? 1.0 : 0.0};
    });
  } else if (q == "quality-factor") {
    if (!cfg.device || cfg.device->kind != "cpw")
      throw ConfigError("device.kind", "quality-factor sweep requires a cpw device");
    c.columns = {"x_qp_res", "omega_over_2pi_Hz", "q_qp"};
    build_rows(c, points.size(), mode, [&](std::size_t i) {
      const QpDistribution dist = make_distribution(cfg.distribution, points[i].x);
      const double omega = grid_point_to_omega(cfg.sweep->grid, points[i].g, mat);
      const CpwResonator cpw = make_cpw(cfg.device->cpw, mat, omega);
      c.rows[i] = {points[i].x, omega / (2.0 * k::pi), quality_factor_cpw(cpw, dist, mat)};
    });
  } else if (q == "t1") {
    if (!cfg.device || cfg.device->kind != "transmon")
      throw ConfigError("device.kind", "t1 sweep requires a transmon device");
    c.columns = {"x_qp_res", "omega_over_2pi_Hz", "t1_s", "rate_junction_per_s",
                 "rate_wire_per_s"};
    build_rows(c, points.size(), mode, [&](std::size_t i) {
      const QpDistribution dist = make_distribution(cfg.distribution, points[i].x);
      const double omega = grid_point_to_omega(cfg.sweep->grid, points[i].g, mat);
      const Transmon t = make_transmon(cfg.device->transmon, mat, omega);
      const TransmonT1 r = t1_transmon(t, dist, mat);
      c.rows[i] = {points[i].x, omega / (2.0 * k::pi), r.t1, r.rate_junction, r.rate_wire};
    });
  } else if (q == "flux-noise") {
    if (!cfg.device || (cfg.device->kind != "flux_qubit" && cfg.device->kind != "split_transmon"))
      throw ConfigError("device.kind",
                        "flux-noise sweep requires a flux_qubit or split_transmon device");
    c.columns = {"x_qp_res", "omega_rad_s", "frequency_Hz", "s_phi_phi0sq_per_hz"};
    build_rows(c, points.size(), mode, [&](std::size_t i) {
      const QpDistribution dist = make_distribution(cfg.distribution, points[i].x);
      const double omega = grid_point_to_omega(cfg.sweep->grid, points[i].g, mat);
      const double s1 = sigma1_exact(dist, mat, omega);
      double s;
      if (cfg.device->kind == "flux_qubit") {
        const FluxQubit fq = make_flux_qubit(cfg.device->flux_qubit, mat);
        s = qp_flux_noise_flux_qubit(fq, s1, mat, omega);
      } else {
        const SplitTransmon st = make_split_transmon(
            cfg.device->split_transmon, mat, cfg.device->split_transmon.phi_over_phi0);
        s = qp_flux_noise_split_transmon(st, s1, mat, omega);
      }
      c.rows[i] = {points[i].x, omega, omega / (2.0 * k::pi), flux_to_phi0sq_per_hz(s)};
    });
  } else if (q == "t2star") {
    if (!cfg.device || cfg.device->kind != "split_transmon")
      throw ConfigError("device.kind", "t2star sweep requires a split_transmon device");
    if (cfg.sweep->grid.variable != "phi_over_phi0")
      throw ConfigError("sweep.grid.variable", "t2star sweeps phi_over_phi0");
    c.columns = {"x_qp_res", "phi_over_phi0", "omega_over_2pi_Hz", "t2star_s",
                 "within_validity"};
    build_rows(c, points.size(), mode, [&](std::size_t i) {
      const QpDistribution dist = make_distribution(cfg.distribution, points[i].x);
      const SplitTransmon st =
          make_split_transmon(cfg.device->split_transmon, mat, points[i].g);
      const double omega = device_frequency(DeviceSpec(st));
      const T2StarResult r = t2_star(st, dist, mat, Bracket{1e-9, 1e4});
      c.rows[i] = {points[i].x, points[i].g, omega / (2.0 * k::pi), r.seconds,
                   r.within_validity ? 1.0 : 0.0};
    });
  } else {
    throw ConfigError("sweep.quantity", "unknown quantity '" + q + "'");
  }
  return c;
}

int write_sweep_resumable(const Curve& curve, const std::string& dir) {
  fs::create_directories(dir);
  const std::string path = dir + "/" + curve.name + ".csv";
  std::size_t existing = 0;
  if (fs::exists(path)) {
    std::ifstream in(path);
    std::string line;
    bool past_header = false;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (!past_header) {
        past_header = true;  // column header
        continue;
      }
      ++existing;
    }
  }
  if (existing >= curve.rows.size()) return 0;

  std::ofstream out;
  if (existing == 0) {
    out.open(path, std::ios::binary);
    Curve header = curve;
    header.rows.clear();
    out << format_csv(header);
  } else {
    out.open(path, std::ios::binary | std::ios::app);
  }
  int appended = 0;
  for (std::size_t i = existing; i < curve.rows.size(); ++i) {
    Curve one;
    one.columns = curve.columns;
    one.rows = {curve.rows[i]};
    const std::string block = format_csv(one);
    out << block.substr(block.find('\n') + 1);  // strip the header line
    ++appended;
  }
  return appended;
}

std::string write_config_echo(const RunConfig& cfg, const std::string& dir) {
  fs::create_directories(dir);
  const std::string path = dir + "/config_echo.json";
  std::ofstream out(path, std::ios::binary);
  out << config_to_json(cfg).dump(2) << "\n";
  return path;
}

}  // namespace qpn
