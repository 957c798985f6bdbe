#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qpn/circuit.hpp"
#include "qpn/parallel.hpp"

namespace qpn {

enum class NoiseKind { charge, flux };

// Sampled two-sided spectral density S(omega).
struct NoiseSpectrum {
  NoiseKind kind;
  std::vector<double> omega;   // rad/s
  std::vector<double> value;   // C^2 s (charge) or Wb^2 s (flux)
  std::string units;
  double temperature;          // K
  std::string provenance;      // device + mechanism tag
};

// Evaluate a scalar spectral density over a frequency grid (points are
// independent; parallel evaluation gives identical results).
NoiseSpectrum sample_spectrum(NoiseKind kind, const std::function<double(double)>& s_of_omega,
                              const std::vector<double>& omegas, double temperature,
                              std::string units, std::string provenance,
                              Exec mode = Exec::Serial);

// n_B(omega) + 1 evaluated stably for either sign of omega
// (n_B(-w) + 1 = -n_B(w)).
double bose_occupation_plus_one(double omega, double temperature_K);

// Charge noise from a dissipative admittance via the fluctuation-dissipation
// relation: S_Q(w) = 2 hbar (1/w) Re{1/Z(|w|)} [n_B(w) + 1].  Throws
// std::domain_error at w = 0 where the spectrum diverges logarithmically.
double charge_noise_from_admittance(const Admittance& adm, double temperature_K, double omega);

// S_Phi(w) = (L w)^2 S_Q(w).
double flux_noise_from_charge(double s_q, double total_inductance, double omega);

// Closed-form flux noise of a flux qubit due to quasithermal QPs
// (junction + wire channels; GE junctions keep only the wire channel):
//   (sigma1/sigmaN) (2 hbar^2 w L^2 / pi Delta) [Lk/(Lk+Lg)^2 + cos^2(phi/2)/LJ] [nB+1].
double qp_flux_noise_flux_qubit(const FluxQubit& f, double sigma1_over_sigman,
                                const Material& mat, double omega);

// Closed-form flux noise of a split transmon:
//   (sigma1/sigmaN) (2 hbar^2 w / pi Delta) [LJ cos^2(phi/2)/(2 cos^2 phi) + Lk] [nB+1],
// with phi from the flux-quantization branch rule; GE keeps only Lk.
double qp_flux_noise_split_transmon(const SplitTransmon& s, double sigma1_over_sigman,
                                    const Material& mat, double omega);

// Dielectric (two-level-system) loss.
struct TlsParameters {
  double p_surface = 0.0;          // participation ratios, in [0,1]
  double p_bulk = 0.0;
  double tan_delta_surface = 0.0;  // low-power loss-tangent amplitudes
  double tan_delta_bulk = 0.0;

  void validate() const;
  // Participation-weighted amplitude pS*tanS + pB*tanB (before the tanh factor).
  double amplitude() const;
};

// <tan delta>(w) = amplitude * tanh(hbar w / 2 kT).
double tls_loss_tangent(const TlsParameters& tls, double temperature_K, double omega);

// S_Q^TLS(w) = 2 hbar C <tan delta> [n_B + 1].
double tls_charge_noise(const TlsParameters& tls, double capacitance, double temperature_K,
                        double omega);

// S_Phi^TLS(w) = (L w)^2 S_Q^TLS(w); superOhmic (w^2) at low temperature.
double tls_flux_noise(const TlsParameters& tls, double total_inductance, double capacitance,
                      double temperature_K, double omega);

// Empirical spin-impurity flux noise, quoted directly in Phi0^2/Hz:
// S = 16 pi x 1e-11 / omega[rad/s].  Throws at omega = 0.
double spin_flux_noise_phi0sq_per_hz(double omega);
// Same in internal units (Wb^2 s).
double spin_flux_noise(double omega);

// Reporting conversion: Wb^2 s (per rad/s) -> Phi0^2/Hz is S * 2 pi / Phi0^2.
double flux_to_phi0sq_per_hz(double s_wb2_s);

}  // namespace qpn
