#include "qpn/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "qpn/constants.hpp"
#include "qpn/errors.hpp"

namespace qpn {

namespace k = constants;
using nlohmann::json;

namespace {

void reject_unknown(const json& j, const std::string& where,
                    const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError(where, "must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) throw ConfigError(where + "." + it.key(), "unknown key");
}

double get_positive(const json& j, const std::string& where, const std::string& key,
                    double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key, "must be a number");
  const double d = v.get<double>();
  if (!(d > 0.0)) throw ConfigError(where + "." + key, "must be > 0");
  return d;
}

double get_number(const json& j, const std::string& where, const std::string& key,
                  double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ConfigError(where + "." + key, "must be a number");
  return j.at(key).get<double>();
}

bool get_bool(const json& j, const std::string& where, const std::string& key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ConfigError(where + "." + key, "must be a boolean");
  return j.at(key).get<bool>();
}

std::string get_string(const json& j, const std::string& where, const std::string& key,
                       const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw ConfigError(where + "." + key, "must be a string");
  return j.at(key).get<std::string>();
}

MaterialConfig parse_material(const json& j) {
  reject_unknown(j, "material", {"gap_GHz", "lambda_nm", "tc_K", "temperature_mK", "name"});
  MaterialConfig m;
  m.gap_GHz = get_positive(j, "material", "gap_GHz", m.gap_GHz);
  m.lambda_nm = get_positive(j, "material", "lambda_nm", m.lambda_nm);
  m.tc_K = get_positive(j, "material", "tc_K", m.tc_K);
  m.temperature_mK = get_positive(j, "material", "temperature_mK", m.temperature_mK);
  m.name = get_string(j, "material", "name", m.name);
  return m;
}

DistributionConfig parse_distribution(const json& j) {
  reject_unknown(j, "distribution", {"x_qp_res", "mode"});
  DistributionConfig d;
  if (j.contains("x_qp_res")) {
    if (!j.at("x_qp_res").is_array() || j.at("x_qp_res").empty())
      throw ConfigError("distribution.x_qp_res", "must be a non-empty array");
    d.x_qp_res.clear();
    for (const auto& v : j.at("x_qp_res")) {
      if (!v.is_number() || v.get<double>() < 0.0)
        throw ConfigError("distribution.x_qp_res", "entries must be numbers >= 0");
      d.x_qp_res.push_back(v.get<double>());
    }
  }
  d.mode = get_string(j, "distribution", "mode", d.mode);
  if (d.mode != "quasithermal" && d.mode != "thermal")
    throw ConfigError("distribution.mode", "must be 'quasithermal' or 'thermal'");
  return d;
}

TlsConfig parse_tls(const json& j) {
  reject_unknown(j, "tls",
                 {"p_surface", "p_bulk", "tan_delta_surface", "tan_delta_bulk",
                  "tan_delta_total", "q_total"});
  TlsConfig t;
  t.p_surface = get_number(j, "tls", "p_surface", t.p_surface);
  t.p_bulk = get_number(j, "tls", "p_bulk", t.p_bulk);
  t.tan_delta_surface = get_number(j, "tls", "tan_delta_surface", t.tan_delta_surface);
  t.tan_delta_bulk = get_number(j, "tls", "tan_delta_bulk", t.tan_delta_bulk);
  if (j.contains("tan_delta_total"))
    t.tan_delta_total = get_positive(j, "tls", "tan_delta_total", 0.0);
  if (j.contains("q_total")) t.q_total = get_positive(j, "tls", "q_total", 0.0);
  if (t.p_surface < 0.0 || t.p_surface > 1.0)
    throw ConfigError("tls.p_surface", "must be in [0, 1]");
  if (t.p_bulk < 0.0 || t.p_bulk > 1.0) throw ConfigError("tls.p_bulk", "must be in [0, 1]");
  return t;
}

DeviceConfig parse_device(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw ConfigError("device", "requires keys: kind (cpw | transmon | flux_qubit | "
                                "split_transmon) plus its geometry");
  DeviceConfig d;
  d.kind = get_string(j, "device", "kind", "");
  if (d.kind == "cpw") {
    reject_unknown(j, "device", {"kind", "z0_ohm", "area_um2", "substrate_index", "length_mm"});
    d.cpw.z0_ohm = get_positive(j, "device", "z0_ohm", d.cpw.z0_ohm);
    d.cpw.area_um2 = get_positive(j, "device", "area_um2", d.cpw.area_um2);
    d.cpw.substrate_index = get_positive(j, "device", "substrate_index", d.cpw.substrate_index);
    if (j.contains("length_mm")) d.cpw.length_mm = get_positive(j, "device", "length_mm", 0.0);
  } else if (d.kind == "transmon") {
    reject_unknown(j, "device",
                   {"kind", "ej_over_ec", "lead_length_um", "lead_area_um2", "pad_lg_nH",
                    "gap_engineered", "lj_nH"});
    auto& t = d.transmon;
    t.ej_over_ec = get_positive(j, "device", "ej_over_ec", t.ej_over_ec);
    if (!(t.ej_over_ec > 1.0)) throw ConfigError("device.ej_over_ec", "must be > 1");
    t.lead_length_um = get_positive(j, "device", "lead_length_um", t.lead_length_um);
    t.lead_area_um2 = get_positive(j, "device", "lead_area_um2", t.lead_area_um2);
    t.pad_lg_nH = get_positive(j, "device", "pad_lg_nH", t.pad_lg_nH);
    t.gap_engineered = get_bool(j, "device", "gap_engineered", t.gap_engineered);
    if (j.contains("lj_nH")) t.lj_nH = get_positive(j, "device", "lj_nH", 0.0);
  } else if (d.kind == "flux_qubit") {
    reject_unknown(j, "device",
                   {"kind", "loop_length_mm", "loop_area_um2", "lg_nH", "lj_nH", "beta",
                    "c_pF", "gap_engineered", "phase_rad"});
    auto& f = d.flux_qubit;
    f.loop_length_mm = get_positive(j, "device", "loop_length_mm", f.loop_length_mm);
    f.loop_area_um2 = get_positive(j, "device", "loop_area_um2", f.loop_area_um2);
    f.lg_nH = get_positive(j, "device", "lg_nH", f.lg_nH);
    f.lj_nH = get_positive(j, "device", "lj_nH", f.lj_nH);
    f.beta = get_positive(j, "device", "beta", f.beta);
    if (!(f.beta > 1.0)) throw ConfigError("device.beta", "must be > 1");
    f.c_pF = get_positive(j, "device", "c_pF", f.c_pF);
    f.gap_engineered = get_bool(j, "device", "gap_engineered", f.gap_engineered);
    if (j.contains("phase_rad")) f.phase_rad = get_number(j, "device", "phase_rad", 0.0);
  } else if (d.kind == "split_transmon") {
    reject_unknown(j, "device",
                   {"kind", "lj_nH", "ej_over_ec", "loop_length_um", "loop_area_um2", "lk_nH",
                    "pad_lg_nH", "pad_lk_nH", "phi_over_phi0", "gap_engineered"});
    auto& s = d.split_transmon;
    s.lj_nH = get_positive(j, "device", "lj_nH", s.lj_nH);
    s.ej_over_ec = get_positive(j, "device", "ej_over_ec", s.ej_over_ec);
    if (!(s.ej_over_ec > 1.0)) throw ConfigError("device.ej_over_ec", "must be > 1");
    s.loop_length_um = get_positive(j, "device", "loop_length_um", s.loop_length_um);
    s.loop_area_um2 = get_positive(j, "device", "loop_area_um2", s.loop_area_um2);
    if (j.contains("lk_nH")) s.lk_nH = get_positive(j, "device", "lk_nH", 0.0);
    s.pad_lg_nH = get_positive(j, "device", "pad_lg_nH", s.pad_lg_nH);
    s.pad_lk_nH = get_number(j, "device", "pad_lk_nH", s.pad_lk_nH);
    s.phi_over_phi0 = get_number(j, "device", "phi_over_phi0", s.phi_over_phi0);
    s.gap_engineered = get_bool(j, "device", "gap_engineered", s.gap_engineered);
  } else {
    throw ConfigError("device.kind", "unknown device kind '" + d.kind + "'");
  }
  return d;
}

GridSpec parse_grid(const json& j) {
  reject_unknown(j, "sweep.grid", {"variable", "min", "max", "points", "spacing"});
  GridSpec g;
  g.variable = get_string(j, "sweep.grid", "variable", "");
  static const std::set<std::string> vars = {"omega_over_2pi_GHz", "omega_over_2pi_MHz",
                                             "phi_over_phi0", "hbar_omega_over_kT"};
  if (!vars.count(g.variable)) throw ConfigError("sweep.grid.variable", "unknown grid variable");
  g.min = get_number(j, "sweep.grid", "min", 0.0);
  g.max = get_number(j, "sweep.grid", "max", 0.0);
  if (!(g.min < g.max)) throw ConfigError("sweep.grid", "requires min < max (monotone grid)");
  if (!j.contains("points")) throw ConfigError("sweep.grid.points", "required");
  if (!j.at("points").is_number_integer() || j.at("points").get<int>() < 2)
    throw ConfigError("sweep.grid.points", "must be an integer >= 2 (empty grid rejected)");
  g.points = j.at("points").get<int>();
  g.spacing = get_string(j, "sweep.grid", "spacing", g.spacing);
  if (g.spacing != "log" && g.spacing != "linear")
    throw ConfigError("sweep.grid.spacing", "must be 'log' or 'linear'");
  if (g.spacing == "log" && !(g.min > 0.0))
    throw ConfigError("sweep.grid.min", "must be > 0 for log spacing");
  return g;
}

SweepSpec parse_sweep(const json& j) {
  reject_unknown(j, "sweep", {"quantity", "grid"});
  SweepSpec s;
  s.quantity = get_string(j, "sweep", "quantity", "");
  static const std::set<std::string> quantities = {"conductivity", "quality-factor", "t1",
                                                   "flux-noise", "t2star"};
  if (!quantities.count(s.quantity)) throw ConfigError("sweep.quantity", "unknown quantity");
  if (!j.contains("grid")) throw ConfigError("sweep.grid", "required");
  s.grid = parse_grid(j.at("grid"));
  return s;
}

OutputSpec parse_output(const json& j) {
  reject_unknown(j, "output", {"directory", "format"});
  OutputSpec o;
  o.directory = get_string(j, "output", "directory", o.directory);
  o.format = get_string(j, "output", "format", o.format);
  if (o.format != "csv" && o.format != "json")
    throw ConfigError("output.format", "must be 'csv' or 'json'");
  return o;
}

void merge_into(json& base, const json& overlay) {
  if (!overlay.is_object()) {
    base = overlay;
    return;
  }
  if (!base.is_object()) base = json::object();
  for (auto it = overlay.begin(); it != overlay.end(); ++it) {
    if (it->is_object() && base.contains(it.key()))
      merge_into(base[it.key()], *it);
    else
      base[it.key()] = *it;
  }
}

}  // namespace

std::vector<double> GridSpec::values() const {
  std::vector<double> v(points);
  if (spacing == "log") {
    const double l0 = std::log10(min), l1 = std::log10(max);
    for (int i = 0; i < points; ++i)
      v[i] = std::pow(10.0, l0 + (l1 - l0) * i / (points - 1));
  } else {
    for (int i = 0; i < points; ++i) v[i] = min + (max - min) * i / (points - 1);
  }
  return v;
}

RunConfig parse_config(const json& j) {
  reject_unknown(j, "config", {"material", "distribution", "device", "tls", "sweep", "output"});
  RunConfig cfg;
  if (j.contains("material")) cfg.material = parse_material(j.at("material"));
  if (j.contains("distribution")) cfg.distribution = parse_distribution(j.at("distribution"));
  if (j.contains("device")) cfg.device = parse_device(j.at("device"));
  if (j.contains("tls")) cfg.tls = parse_tls(j.at("tls"));
  if (j.contains("sweep")) cfg.sweep = parse_sweep(j.at("sweep"));
  if (j.contains("output")) cfg.output = parse_output(j.at("output"));
  // cross-checks that need the assembled material
  make_material(cfg.material);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config", "cannot open file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config", std::string("JSON parse error: ") + e.what());
  }
  return parse_config(j);
}

json config_to_json(const RunConfig& cfg) {
  json j;
  j["material"] = {{"gap_GHz", cfg.material.gap_GHz},
                   {"lambda_nm", cfg.material.lambda_nm},
                   {"tc_K", cfg.material.tc_K},
                   {"temperature_mK", cfg.material.temperature_mK},
                   {"name", cfg.material.name}};
  j["distribution"] = {{"x_qp_res", cfg.distribution.x_qp_res},
                       {"mode", cfg.distribution.mode}};
  if (cfg.device) {
    json d;
    d["kind"] = cfg.device->kind;
    if (cfg.device->kind == "cpw") {
      const auto& c = cfg.device->cpw;
      d["z0_ohm"] = c.z0_ohm;
      d["area_um2"] = c.area_um2;
      d["substrate_index"] = c.substrate_index;
      if (c.length_mm) d["length_mm"] = *c.length_mm;
    } else if (cfg.device->kind == "transmon") {
      const auto& t = cfg.device->transmon;
      d["ej_over_ec"] = t.ej_over_ec;
      d["lead_length_um"] = t.lead_length_um;
      d["lead_area_um2"] = t.lead_area_um2;
      d["pad_lg_nH"] = t.pad_lg_nH;
      d["gap_engineered"] = t.gap_engineered;
      if (t.lj_nH) d["lj_nH"] = *t.lj_nH;
    } else if (cfg.device->kind == "flux_qubit") {
      const auto& f = cfg.device->flux_qubit;
      d["loop_length_mm"] = f.loop_length_mm;
      d["loop_area_um2"] = f.loop_area_um2;
      d["lg_nH"] = f.lg_nH;
      d["lj_nH"] = f.lj_nH;
      d["beta"] = f.beta;
      d["c_pF"] = f.c_pF;
      d["gap_engineered"] = f.gap_engineered;
      if (f.phase_rad) d["phase_rad"] = *f.phase_rad;
    } else {
      const auto& s = cfg.device->split_transmon;
      d["lj_nH"] = s.lj_nH;
      d["ej_over_ec"] = s.ej_over_ec;
      d["loop_length_um"] = s.loop_length_um;
      d["loop_area_um2"] = s.loop_area_um2;
      if (s.lk_nH) d["lk_nH"] = *s.lk_nH;
      d["pad_lg_nH"] = s.pad_lg_nH;
      d["pad_lk_nH"] = s.pad_lk_nH;
      d["phi_over_phi0"] = s.phi_over_phi0;
      d["gap_engineered"] = s.gap_engineered;
    }
    j["device"] = d;
  }
  if (cfg.tls) {
    json t;
    t["p_surface"] = cfg.tls->p_surface;
    t["p_bulk"] = cfg.tls->p_bulk;
    t["tan_delta_surface"] = cfg.tls->tan_delta_surface;
    t["tan_delta_bulk"] = cfg.tls->tan_delta_bulk;
    if (cfg.tls->tan_delta_total) t["tan_delta_total"] = *cfg.tls->tan_delta_total;
    if (cfg.tls->q_total) t["q_total"] = *cfg.tls->q_total;
    j["tls"] = t;
  }
  if (cfg.sweep) {
    j["sweep"] = {{"quantity", cfg.sweep->quantity},
                  {"grid",
                   {{"variable", cfg.sweep->grid.variable},
                    {"min", cfg.sweep->grid.min},
                    {"max", cfg.sweep->grid.max},
                    {"points", cfg.sweep->grid.points},
                    {"spacing", cfg.sweep->grid.spacing}}}};
  }
  j["output"] = {{"directory", cfg.output.directory}, {"format", cfg.output.format}};
  return j;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return config_to_json(a) == config_to_json(b);
}

json preset_json(const std::string& name) {
  // Shared material row: T = 30 mK, Tc = 1.2 K, gap 44 GHz, lambda 50 nm (aluminum).
  json base = {
      {"material",
       {{"gap_GHz", 44.0}, {"lambda_nm", 50.0}, {"tc_K", 1.2}, {"temperature_mK", 30.0},
        {"name", "aluminum"}}},
      {"output", {{"directory", "."}, {"format", "csv"}}},
  };
  if (name == "fig2") {
    // Conductivity comparison at kT = 0.1 gap: T = 0.1 h (44 GHz) / kB.
    base["material"]["temperature_mK"] = 211.16669522811372;
    base["distribution"] = {{"x_qp_res", {1e-5}}, {"mode", "quasithermal"}};
    base["sweep"] = {{"quantity", "conductivity"},
                     {"grid",
                      {{"variable", "hbar_omega_over_kT"}, {"min", 1e-2}, {"max", 10.0},
                       {"points", 40}, {"spacing", "log"}}}};
    return base;
  }
  if (name == "fig3") {
    base["distribution"] = {{"x_qp_res", {1e-9, 1e-7, 1e-5}}, {"mode", "quasithermal"}};
    base["device"] = {{"kind", "cpw"}, {"z0_ohm", 50.0}, {"area_um2", 1.0},
                      {"substrate_index", 3.4205262752974143}};
    base["tls"] = {{"p_surface", 23e-4}, {"p_bulk", 0.9}, {"tan_delta_surface", 1e-3},
                   {"tan_delta_bulk", 1e-6}, {"q_total", 3e5}};
    base["sweep"] = {{"quantity", "quality-factor"},
                     {"grid",
                      {{"variable", "omega_over_2pi_GHz"}, {"min", 2.0}, {"max", 10.0},
                       {"points", 33}, {"spacing", "log"}}}};
    return base;
  }
  if (name == "fig4") {
    base["distribution"] = {{"x_qp_res", {1e-9, 1e-7, 1e-5}}, {"mode", "quasithermal"}};
    base["device"] = {{"kind", "transmon"}, {"ej_over_ec", 70.0}, {"lead_length_um", 15.0},
                      {"lead_area_um2", 0.1}, {"pad_lg_nH", 0.02}, {"gap_engineered", false}};
    base["tls"] = {{"p_surface", 2.4e-4}, {"p_bulk", 0.9}, {"tan_delta_surface", 1e-3},
                   {"tan_delta_bulk", 1e-6}};
    base["sweep"] = {{"quantity", "t1"},
                     {"grid",
                      {{"variable", "omega_over_2pi_GHz"}, {"min", 4.0}, {"max", 8.0},
                       {"points", 33}, {"spacing", "linear"}}}};
    return base;
  }
  if (name == "fig5") {
    base["distribution"] = {{"x_qp_res", {1e-9, 1e-7, 1e-5}}, {"mode", "quasithermal"}};
    // phase_rad = 0 pins cos^2(phi/2) = 1 (the double-well minimum gives 0.995).
    base["device"] = {{"kind", "flux_qubit"}, {"loop_length_mm", 1.2}, {"loop_area_um2", 1.0},
                      {"lg_nH", 0.6}, {"lj_nH", 0.24}, {"beta", 2.5}, {"c_pF", 0.1},
                      {"gap_engineered", false}, {"phase_rad", 0.0}};
    base["tls"] = {{"tan_delta_total", 2e-4}};
    base["sweep"] = {{"quantity", "flux-noise"},
                     {"grid",
                      {{"variable", "omega_over_2pi_MHz"}, {"min", 1.0}, {"max", 1e4},
                       {"points", 81}, {"spacing", "log"}}}};
    return base;
  }
  if (name == "fig6") {
    base["distribution"] = {{"x_qp_res", {1e-9, 1e-7, 1e-5}}, {"mode", "quasithermal"}};
    // pad_lg carried over from the transmon pad row; the table leaves it blank.
    base["device"] = {{"kind", "split_transmon"}, {"lj_nH", 10.0}, {"ej_over_ec", 70.0},
                      {"loop_length_um", 1.0}, {"loop_area_um2", 0.01}, {"lk_nH", 1.6e-4},
                      {"pad_lg_nH", 0.02}, {"pad_lk_nH", 0.0}, {"phi_over_phi0", 0.25},
                      {"gap_engineered", false}};
    base["sweep"] = {{"quantity", "t2star"},
                     {"grid",
                      {{"variable", "phi_over_phi0"}, {"min", 0.1}, {"max", 0.4},
                       {"points", 31}, {"spacing", "linear"}}}};
    return base;
  }
  if (name == "nbtin") {
    // Gap from Tc via 1.764 kB Tc; lambda is a placeholder (it cancels in the
    // junction-dominated flux noise).  Order-of-magnitude estimate only.
    base["material"] = {{"gap_GHz", 532.996}, {"lambda_nm", 275.0}, {"tc_K", 14.5},
                        {"temperature_mK", 30.0}, {"name", "NbTiN"}};
    base["distribution"] = {{"x_qp_res", {3e-4}}, {"mode", "quasithermal"}};
    base["device"] = {{"kind", "flux_qubit"}, {"loop_length_mm", 1.2}, {"loop_area_um2", 1.0},
                      {"lg_nH", 600.0}, {"lj_nH", 5.0}, {"beta", 2.0}, {"c_pF", 0.1},
                      {"gap_engineered", false}, {"phase_rad", 0.0}};
    base["sweep"] = {{"quantity", "flux-noise"},
                     {"grid",
                      {{"variable", "omega_over_2pi_MHz"}, {"min", 1.0}, {"max", 1e4},
                       {"points", 81}, {"spacing", "log"}}}};
    return base;
  }
  throw ConfigError("preset", "unknown preset '" + name + "'");
}

RunConfig config_from_preset(const std::string& name, const json& overrides) {
  json j = preset_json(name);
  if (!overrides.is_null() && !overrides.empty()) merge_into(j, overrides);
  return parse_config(j);
}

Material make_material(const MaterialConfig& mc) {
  return Material::from_lab_units(mc.gap_GHz, mc.lambda_nm, mc.tc_K, mc.temperature_mK);
}

QpDistribution make_distribution(const DistributionConfig& dc, double x_qp_res) {
  QpDistribution d;
  d.x_qp_res = x_qp_res;
  d.mode = dc.mode == "thermal" ? QpDistribution::Mode::thermal_equilibrium
                                : QpDistribution::Mode::quasithermal;
  return d;
}

TlsParameters make_tls(const TlsConfig& tc) {
  TlsParameters t;
  t.p_surface = tc.p_surface;
  t.p_bulk = tc.p_bulk;
  t.tan_delta_surface = tc.tan_delta_surface;
  t.tan_delta_bulk = tc.tan_delta_bulk;
  return t;
}

double tls_amplitude(const TlsConfig& tc) {
  if (tc.tan_delta_total) return *tc.tan_delta_total;
  if (tc.q_total) return 1.0 / *tc.q_total;
  return make_tls(tc).amplitude();
}

CpwResonator make_cpw(const CpwConfig& cc, const Material& mat, double omega0) {
  CpwResonator c;
  const double ell = cc.length_mm
                         ? *cc.length_mm * 1e-3
                         : k::speed_of_light * k::pi / (cc.substrate_index * omega0);
  c.wire.length = ell;
  c.wire.cross_section = cc.area_um2 * 1e-12;
  const double l_total = k::pi * cc.z0_ohm / omega0;  // Lk + Lg of the half-wave mode
  const double lk = kinetic_inductance(c.wire.length, c.wire.cross_section, mat);
  if (lk >= l_total)
    throw ConfigError("device", "CPW kinetic inductance exceeds pi Z0/Omega");
  c.wire.geometric_inductance = l_total - lk;
  c.z0 = cc.z0_ohm;
  c.omega0 = omega0;
  return c;
}

Transmon make_transmon(const TransmonConfig& tc, const Material& mat, double omega0) {
  Transmon t;
  t.lead.length = tc.lead_length_um * 1e-6;
  t.lead.cross_section = tc.lead_area_um2 * 1e-12;
  t.lead.geometric_inductance = 0.0;
  t.pad_lg = tc.pad_lg_nH * 1e-9;
  t.ej_over_ec = tc.ej_over_ec;
  (void)mat;
  const double e2 = k::elementary_charge * k::elementary_charge;
  if (tc.lj_nH) {
    t.junction.lj = *tc.lj_nH * 1e-9;
    const double ej = (k::flux_quantum / (2.0 * k::pi)) * (k::flux_quantum / (2.0 * k::pi)) /
                      t.junction.lj;
    t.capacitance = 0.5 * e2 * tc.ej_over_ec / ej;
  } else {
    // hbar Omega = sqrt(8 EJ EC) with EJ/EC fixed pins both EJ and C.
    const double ej = k::hbar * omega0 * std::sqrt(tc.ej_over_ec / 8.0);
    t.junction.lj = (k::flux_quantum / (2.0 * k::pi)) * (k::flux_quantum / (2.0 * k::pi)) / ej;
    t.capacitance = 0.5 * e2 * tc.ej_over_ec / ej;
  }
  t.junction.phase = 0.0;
  t.junction.gap_engineered = false;
  return t;
}

FluxQubit make_flux_qubit(const FluxQubitConfig& fc, const Material& mat) {
  FluxQubit f;
  f.loop.length = fc.loop_length_mm * 1e-3;
  f.loop.cross_section = fc.loop_area_um2 * 1e-12;
  f.loop.geometric_inductance = fc.lg_nH * 1e-9;
  f.junction.lj = fc.lj_nH * 1e-9;
  f.junction.gap_engineered = fc.gap_engineered;
  f.beta = fc.beta;
  f.capacitance = fc.c_pF * 1e-12;
  if (fc.phase_rad) {
    f.junction.phase = *fc.phase_rad;
    f.use_potential_minimum = false;
  }
  (void)mat;
  return f;
}

SplitTransmon make_split_transmon(const SplitTransmonConfig& sc, const Material& mat,
                                  double phi_over_phi0) {
  SplitTransmon s;
  s.loop_half.length = sc.loop_length_um * 1e-6;
  s.loop_half.cross_section = sc.loop_area_um2 * 1e-12;
  s.loop_half.geometric_inductance = 0.0;
  if (sc.lk_nH) {
    // Composite Lk given directly: fold it into pad_lk so the half-loop rule
    // still applies to the stored geometry.
    s.pad_lk = 0.5 * (*sc.lk_nH * 1e-9 -
                      0.5 * kinetic_inductance(s.loop_half.length, s.loop_half.cross_section,
                                               mat));
  } else {
    s.pad_lk = sc.pad_lk_nH * 1e-9;
  }
  s.pad_lg = sc.pad_lg_nH * 1e-9;
  s.junction.lj = sc.lj_nH * 1e-9;
  s.junction.gap_engineered = sc.gap_engineered;
  s.ej_over_ec = sc.ej_over_ec;
  const double ej = (k::flux_quantum / (2.0 * k::pi)) * (k::flux_quantum / (2.0 * k::pi)) /
                    s.junction.lj;
  s.capacitance = 0.5 * k::elementary_charge * k::elementary_charge * sc.ej_over_ec / ej;
  s.flux_ratio = phi_over_phi0;
  return s;
}

}  // namespace qpn
