#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qpn/circuit.hpp"
#include "qpn/noise.hpp"

namespace qpn {

struct MaterialConfig {
  double gap_GHz = 44.0;        // Delta/(2 pi hbar)
  double lambda_nm = 50.0;
  double tc_K = 1.2;
  double temperature_mK = 30.0;
  std::string name = "aluminum";
};

struct DistributionConfig {
  std::vector<double> x_qp_res = {1e-5};
  std::string mode = "quasithermal";  // or "thermal"
};

struct TlsConfig {
  double p_surface = 0.0;
  double p_bulk = 0.0;
  double tan_delta_surface = 0.0;
  double tan_delta_bulk = 0.0;
  std::optional<double> tan_delta_total;  // direct amplitude override
  std::optional<double> q_total;          // direct low-power Q_TLS override (1/amplitude)
};

struct CpwConfig {
  double z0_ohm = 50.0;
  double area_um2 = 1.0;
  double substrate_index = 3.4205262752974143;  // sqrt(11.7), silicon
  std::optional<double> length_mm;  // absent: half-wave rule l = c pi/(n Omega)
};

struct TransmonConfig {
  double ej_over_ec = 70.0;
  double lead_length_um = 15.0;
  double lead_area_um2 = 0.1;
  double pad_lg_nH = 0.02;
  bool gap_engineered = false;
  std::optional<double> lj_nH;  // absent: LJ from the sweep frequency
};

struct FluxQubitConfig {
  double loop_length_mm = 1.2;
  double loop_area_um2 = 1.0;
  double lg_nH = 0.6;
  double lj_nH = 0.24;
  double beta = 2.5;
  double c_pF = 0.1;
  bool gap_engineered = false;
  std::optional<double> phase_rad;  // absent: potential-minimum phase pi + sqrt(6(beta-1))
};

struct SplitTransmonConfig {
  double lj_nH = 10.0;
  double ej_over_ec = 70.0;
  double loop_length_um = 1.0;
  double loop_area_um2 = 0.01;
  std::optional<double> lk_nH;  // composite override; absent: half-loop geometry
  double pad_lg_nH = 0.02;      // pad-dominated; documented default when unmeasured
  double pad_lk_nH = 0.0;
  double phi_over_phi0 = 0.25;
  bool gap_engineered = false;
};

struct DeviceConfig {
  std::string kind;  // "cpw" | "transmon" | "flux_qubit" | "split_transmon"
  CpwConfig cpw;
  TransmonConfig transmon;
  FluxQubitConfig flux_qubit;
  SplitTransmonConfig split_transmon;
};

struct GridSpec {
  std::string variable;  // omega_over_2pi_GHz | omega_over_2pi_MHz | phi_over_phi0 | hbar_omega_over_kT
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  std::string spacing = "log";  // or "linear"

  std::vector<double> values() const;
};

struct SweepSpec {
  std::string quantity;  // conductivity | quality-factor | t1 | flux-noise | t2star
  GridSpec grid;
};

struct OutputSpec {
  std::string directory = ".";
  std::string format = "csv";  // or "json"
};

struct RunConfig {
  MaterialConfig material;
  DistributionConfig distribution;
  std::optional<DeviceConfig> device;
  std::optional<TlsConfig> tls;
  std::optional<SweepSpec> sweep;
  OutputSpec output;
};

// Parse and validate; rejects unknown keys, non-positive physical values and
// non-monotone grids, naming the offending key.  Throws ConfigError.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

// Canonical serialization (alphabetical keys); reparses to an equal config.
nlohmann::json config_to_json(const RunConfig& cfg);

// Figure presets carrying the device-parameter table defaults:
// "fig2".."fig6" plus "nbtin" (the order-of-magnitude NbTiN estimate).
nlohmann::json preset_json(const std::string& name);
// Preset with a deep-merged override object applied on top.
RunConfig config_from_preset(const std::string& name, const nlohmann::json& overrides = {});

bool operator==(const RunConfig& a, const RunConfig& b);

// ---- assembly into physics types (SI) ----
Material make_material(const MaterialConfig& mc);
QpDistribution make_distribution(const DistributionConfig& dc, double x_qp_res);
TlsParameters make_tls(const TlsConfig& tc);
// Effective <tan delta> amplitude honoring the overrides (tan_delta_total, q_total).
double tls_amplitude(const TlsConfig& tc);
CpwResonator make_cpw(const CpwConfig& cc, const Material& mat, double omega0);
Transmon make_transmon(const TransmonConfig& tc, const Material& mat, double omega0);
FluxQubit make_flux_qubit(const FluxQubitConfig& fc, const Material& mat);
SplitTransmon make_split_transmon(const SplitTransmonConfig& sc, const Material& mat,
                                  double phi_over_phi0);

}  // namespace qpn
