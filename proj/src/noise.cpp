#include "qpn/noise.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qpn/constants.hpp"
#include "qpn/errors.hpp"

namespace qpn {

namespace k = constants;

NoiseSpectrum sample_spectrum(NoiseKind kind, const std::function<double(double)>& s_of_omega,
                              const std::vector<double>& omegas, double temperature,
                              std::string units, std::string provenance, Exec mode) {
  NoiseSpectrum s;
  s.kind = kind;
  s.omega = omegas;
  s.value.assign(omegas.size(), 0.0);
  s.units = std::move(units);
  s.temperature = temperature;
  s.provenance = std::move(provenance);
  parallel_for(omegas.size(), mode, [&](std::size_t i) { s.value[i] = s_of_omega(omegas[i]); });
  return s;
}

double bose_occupation_plus_one(double omega, double temperature_K) {
  const double x = k::hbar * omega / (k::k_boltzmann * temperature_K);
  return 1.0 / std::expm1(x) + 1.0;
}

double charge_noise_from_admittance(const Admittance& adm, double temperature_K, double omega) {
  if (omega == 0.0)
    throw std::domain_error("charge noise diverges (logarithmically) at omega = 0");
  // Im chi_Q(w) = (1/w) Re{1/Z(|w|)} is odd in w; the Bose factor supplies the
  // other sign so the spectrum stays positive on both sides.
  return 2.0 * k::hbar * (1.0 / omega) * adm.real * bose_occupation_plus_one(omega, temperature_K);
}

double flux_noise_from_charge(double s_q, double total_inductance, double omega) {
  if (!(total_inductance > 0.0))
    throw std::invalid_argument("flux_noise_from_charge: L must be > 0");
  return total_inductance * total_inductance * omega * omega * s_q;
}

double qp_flux_noise_flux_qubit(const FluxQubit& f, double sigma1_over_sigman,
                                const Material& mat, double omega) {
  const double lk = kinetic_inductance(f.loop, mat);
  const double lsum = lk + f.loop.geometric_inductance;
  const double phi = flux_qubit_phase(f);
  const double half = std::cos(0.5 * phi);
  double bracket = lk / (lsum * lsum);
  if (!f.junction.gap_engineered) bracket += half * half / f.junction.lj;
  const double l = flux_qubit_total_inductance(f, mat);
  return sigma1_over_sigman * 2.0 * k::hbar * k::hbar * omega * l * l / (k::pi * mat.gap) *
         bracket * bose_occupation_plus_one(omega, mat.temperature);
}

double qp_flux_noise_split_transmon(const SplitTransmon& s, double sigma1_over_sigman,
                                    const Material& mat, double omega) {
  const double phi = split_transmon_phase(s.flux_ratio);
  const double cosp = std::cos(phi);
  const double half2 = std::cos(0.5 * phi) * std::cos(0.5 * phi);
  // same validity guard as the junction-impedance inversion this form rests on
  const double loss_scale =
      sigma1_over_sigman * k::hbar * std::abs(omega) / (k::pi * mat.gap);
  if (!s.junction.gap_engineered && !(std::abs(cosp) > 100.0 * half2 * loss_scale))
    throw ApproximationError("split-transmon flux noise invalid near phi = " +
                             std::to_string(phi));
  double bracket = split_transmon_lk(s, mat);
  if (!s.junction.gap_engineered) bracket += s.junction.lj * half2 / (2.0 * cosp * cosp);
  return sigma1_over_sigman * 2.0 * k::hbar * k::hbar * omega / (k::pi * mat.gap) * bracket *
         bose_occupation_plus_one(omega, mat.temperature);
}

void TlsParameters::validate() const {
  if (p_surface < 0.0 || p_surface > 1.0 || p_bulk < 0.0 || p_bulk > 1.0)
    throw std::invalid_argument("TlsParameters: participation ratios must be in [0,1]");
  if (tan_delta_surface < 0.0 || tan_delta_bulk < 0.0)
    throw std::invalid_argument("TlsParameters: loss-tangent amplitudes must be >= 0");
}

double TlsParameters::amplitude() const {
  return p_surface * tan_delta_surface + p_bulk * tan_delta_bulk;
}

double tls_loss_tangent(const TlsParameters& tls, double temperature_K, double omega) {
  tls.validate();
  return tls.amplitude() *
         std::tanh(k::hbar * omega / (2.0 * k::k_boltzmann * temperature_K));
}

double tls_charge_noise(const TlsParameters& tls, double capacitance, double temperature_K,
                        double omega) {
  return 2.0 * k::hbar * capacitance * tls_loss_tangent(tls, temperature_K, omega) *
         bose_occupation_plus_one(omega, temperature_K);
}

double tls_flux_noise(const TlsParameters& tls, double total_inductance, double capacitance,
                      double temperature_K, double omega) {
  return total_inductance * total_inductance * omega * omega *
         tls_charge_noise(tls, capacitance, temperature_K, omega);
}

double spin_flux_noise_phi0sq_per_hz(double omega) {
  if (omega == 0.0) throw std::domain_error("spin flux noise diverges at omega = 0");
  return 16.0 * k::pi * 1e-11 / omega;
}

double spin_flux_noise(double omega) {
  return spin_flux_noise_phi0sq_per_hz(omega) * k::flux_quantum * k::flux_quantum /
         (2.0 * k::pi);
}

double flux_to_phi0sq_per_hz(double s_wb2_s) {
  return s_wb2_s * 2.0 * k::pi / (k::flux_quantum * k::flux_quantum);
}

}  // namespace qpn
