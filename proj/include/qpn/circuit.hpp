#pragma once

#include <complex>
#include <variant>

#include "qpn/conductivity.hpp"

namespace qpn {

// Sign convention e^{-i omega t}: an inductor contributes -i omega L to the
// impedance and +i/(omega L) to the admittance.

// Uniform superconducting wire segment.  Kinetic inductance follows from the
// penetration depth: Lk = mu0 lambda^2 l / A.
struct WireSegment {
  double length;                // m
  double cross_section;         // m^2
  double geometric_inductance;  // H

  void validate() const;
};

double kinetic_inductance(const WireSegment& wire, const Material& mat);
double kinetic_inductance(double length, double cross_section, const Material& mat);

struct Junction {
  double lj;                   // Josephson inductance, H
  double phase = 0.0;          // phase difference across the junction, rad
  bool gap_engineered = false;  // suppresses the dissipative (QP tunneling) channel

  void validate() const;
};

// Re/Im of 1/Z at one frequency.  Real part >= 0 (passivity).
struct Admittance {
  double real;   // S
  double imag;   // S
  double omega;  // rad/s
};

// ---- devices ----

struct CpwResonator {
  WireSegment wire;   // total center-strip wire of the half-wave resonator
  double z0;          // characteristic impedance, Ohm
  double omega0;      // lowest-mode angular frequency, rad/s
};

struct Transmon {
  WireSegment lead;   // one electrode lead (dominates Lk); counted twice
  double pad_lg;      // geometric inductance of one pad electrode, H; counted twice
  Junction junction;
  double ej_over_ec;  // > 1
  double capacitance; // F
};

struct FluxQubit {
  WireSegment loop;   // SC loop acting as the inductor
  Junction junction;
  double beta;        // EJ/EL > 1
  double capacitance; // F
  // Junction phase defaults to the double-well minimum pi + sqrt(6(beta-1));
  // callers may override via junction.phase (set use_potential_minimum=false).
  bool use_potential_minimum = true;
};

struct SplitTransmon {
  WireSegment loop_half;  // one half of the loop wire
  double pad_lk;          // kinetic inductance of one pad, H (usually negligible)
  double pad_lg;          // geometric inductance of one pad, H
  Junction junction;      // each of the two identical junctions (lj per junction)
  double ej_over_ec;      // > 1
  double capacitance;     // F
  double flux_ratio;      // Phi/Phi0, the control variable
};

using DeviceSpec = std::variant<CpwResonator, Transmon, FluxQubit, SplitTransmon>;

// Flux-qubit double-well minimum phase, pi + sqrt(6(beta-1)) ('+' branch).
double flux_qubit_minimum_phase(double beta);

// Effective junction phase of the split transmon under the flux-quantization
// branch rule: phi = pi*Phi/Phi0 when cos(pi*Phi/Phi0) > 0, else pi + pi*Phi/Phi0.
double split_transmon_phase(double flux_ratio);

// Composite inductances of the split transmon: Lk = 2 Lkp + Lkl/2, Lg = 2 Lgp + Lgl/2.
double split_transmon_lk(const SplitTransmon& st, const Material& mat);
double split_transmon_lg(const SplitTransmon& st);
// Total inductance LJ/|2cos(pi Phi/Phi0)| + Lk + Lg.
double split_transmon_total_inductance(const SplitTransmon& st, const Material& mat);

// ---- impedance / admittance operations ----

// Two-fluid wire impedance Z = l/(sigma A) - i omega Lg (sigma in S/m).
std::complex<double> wire_impedance(const WireSegment& wire, const ComplexConductivity& sigma,
                                    const Material& mat, double omega);

// Wire admittance in the inductance form:
//   Re = (sigma1/sigmaN) (hbar/pi Delta) Lk/(Lk+Lg)^2,  Im = 1/(omega (Lk+Lg)).
Admittance wire_admittance(const WireSegment& wire, double sigma1_over_sigman,
                           const Material& mat, double omega);

// Junction admittance:
//   Re = (sigma1/sigmaN) (hbar/pi Delta) cos^2(phi/2)/LJ,  Im = |cos phi|/(omega LJ).
// A gap-engineered junction has Re = 0.
Admittance junction_admittance(const Junction& j, double sigma1_over_sigman,
                               const Material& mat, double omega);

// First-order inversion of the junction admittance,
//   Z ~ (sigma1/sigmaN)(hbar/pi Delta) omega^2 LJ cos^2(phi/2)/cos^2(phi) - i omega LJ/|cos phi|.
// Guarded: requires |cos phi|/cos^2(phi/2) > 100 (sigma1/sigmaN)(hbar omega/pi Delta),
// which fails near phi = pi/2, 3pi/2; throws ApproximationError naming phi.
std::complex<double> junction_impedance_approx(const Junction& j, double sigma1_over_sigman,
                                               const Material& mat, double omega, double phase);

// Lumped RLC map of the lowest CPW mode plus the wire resistance per length.
struct CpwRlc {
  double r;                 // Ohm
  double l;                 // H
  double c;                 // F
  double r_per_length;      // Ohm/m at omega0
  double lk_total;          // H
  double lg_total;          // H
};
CpwRlc cpw_rlc_map(const CpwResonator& cpw, double sigma1_over_sigman, const Material& mat);

// NGE/GE transmon admittance (two electrodes in series with the junction):
//   Re = (sigma1/sigmaN)(hbar/pi Delta) (LJ + 2Lk)/[LJ + 2(Lk+Lg)]^2  (NGE)
//        with LJ + 2Lk -> 2Lk when gap engineered,
//   Im = 1/(omega [LJ + 2(Lk+Lg)]).
Admittance transmon_admittance(const Transmon& t, double sigma1_over_sigman,
                               const Material& mat, double omega);

// Real part of the flux-qubit admittance (loop wire in parallel with junction):
//   (sigma1/sigmaN)(hbar/pi Delta) [Lk/(Lk+Lg)^2 + cos^2(phi/2)/LJ]; GE drops the LJ term.
double flux_qubit_admittance(const FluxQubit& f, double sigma1_over_sigman,
                             const Material& mat, double omega, double phase);
double flux_qubit_phase(const FluxQubit& f);
// Total inductance [1/LJ + 1/(Lk+Lg)]^{-1}.
double flux_qubit_total_inductance(const FluxQubit& f, const Material& mat);

// Split-transmon admittance with the branch rule applied:
//   Re = (sigma1/sigmaN)(hbar/pi Delta) [LJ cos^2(phi/2)/(2 cos^2 phi) + Lk] / Ltot^2
//   Im = 1/(omega Ltot),   Ltot = LJ/|2 cos phi| + Lk + Lg.
// GE junctions drop the LJ term in the numerator.
Admittance split_transmon_admittance(const SplitTransmon& s, double sigma1_over_sigman,
                                     const Material& mat, double omega);

// Resonance frequency of a device (rad/s).  CPW: pi/(l sqrt(LC)) per unit
// length == stored omega0; transmon: 1/sqrt(LJ C); split transmon:
// sqrt(2|cos(pi Phi/Phi0)|/(LJ C)).  Flux qubits have no harmonic mode here.
double device_frequency(const DeviceSpec& d);

// d Omega / d Phi for the split transmon, -(pi/(2 Phi0)) Omega tan(pi Phi/Phi0).
double split_transmon_domega_dphi(const SplitTransmon& s);

}  // namespace qpn
