#pragma once

#include <functional>

#include "qpn/constants.hpp"
#include "qpn/noise.hpp"

namespace qpn {

// Energy relaxation time of a harmonic mode from the two-sided charge noise at
// its frequency: 1/T1 = (Omega / 2 hbar C) [S_Q(Omega) + S_Q(-Omega)].
// Returns +infinity for zero dissipation.
double t1_resonator(double s_q_plus, double s_q_minus, double capacitance, double omega0);

// CPW quality factor limited by QP dissipation:
//   1/Q = (sigma1(Omega)/sigmaN) (Lk/L) (hbar Omega / pi Delta).
double quality_factor_cpw(const CpwResonator& cpw, const QpDistribution& dist,
                          const Material& mat);

// High-frequency closed form 1/Q ~ x_qp (Lk/L) sqrt(2 Delta/(pi^2 hbar Omega)).
double quality_factor_cpw_highfreq(const CpwResonator& cpw, const QpDistribution& dist,
                                   const Material& mat);

// Transmon T1 with the per-mechanism split of the dissipative numerator:
// junction channel ~ LJ (absent when gap engineered), wire channel ~ 2 Lk.
struct TransmonT1 {
  double t1;             // seconds (may be +inf)
  double rate_total;     // 1/s
  double rate_junction;  // QP tunneling across the junction
  double rate_wire;      // QP Ohmic loss in the leads
  double omega0;         // rad/s
};
TransmonT1 t1_transmon(const Transmon& t, const QpDistribution& dist, const Material& mat);

// High-frequency junction-only limit 1/T1 = x_qp sqrt(2 Delta Omega / (hbar pi^2)),
// scaled by 2Lk/LJ for gap-engineered junctions.
double t1_transmon_highfreq_rate(const Transmon& t, const QpDistribution& dist,
                                 const Material& mat);

// Free-induction-decay (Ramsey) filter function F(w,t) = (1/2)(sin(wt/2)/(w/2))^2.
double fid_filter(double omega, double t);

// Dephasing exponent alpha(t) = int dw (dOmega/dPhi)^2 S_Phi(w) F(w,t) over the
// real line, evaluated on a symmetric grid that is logarithmic at low |w| and
// phase-resolved where the filter oscillates.  spectrum(w) must accept both signs.
struct AlphaGrid {
  double omega_min = 2.0 * constants::pi * 1e-3;  // rad/s
  double omega_max = 0.0;      // rad/s; 0 -> 10 max(kT/hbar, 2 pi/t), needs temperature_K
  double temperature_K = 0.0;  // used only to size the default omega_max
  int points_per_decade = 64;
  double phase_step = constants::pi / 8.0;  // node spacing in w*t/2 in the oscillatory region
};
double alpha_numeric(const std::function<double(double)>& spectrum, double domega_dphi,
                     double t, const AlphaGrid& grid);

// Closed-form alpha(t) for a split transmon with quasithermal QPs, valid for
// t >> hbar/kT (flagged below 10 hbar/kT).  GE junctions drop the LJ term.
Validated alpha_analytic_st(const SplitTransmon& s, const QpDistribution& dist,
                            const Material& mat, double t);

// Ramsey time from alpha(T2*) = 1 by bisection on [bracket.lo, bracket.hi].
struct T2StarResult {
  double seconds;
  enum class Kind { root, lower_bound, upper_bound } kind;
  bool within_validity;  // false when the root sits below 10 hbar/kT
};
T2StarResult t2_star(const SplitTransmon& s, const QpDistribution& dist, const Material& mat,
                     Bracket bracket = {1e-9, 10.0}, double tol = 1e-9);

// Combined Ramsey estimate 1/T2 = 1/(2 T1) + 1/T_phi, offered separately from
// the pure-dephasing T2*.
double t2_combined(double t1_seconds, double t_phi_seconds);

}  // namespace qpn
