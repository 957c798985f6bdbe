#pragma once

#include <functional>

#include "qpn/numerics.hpp"

namespace qpn {

// Superconductor parameters.  Constructed from the lab-unit convention
// (gap as Delta/(2 pi hbar) in GHz, penetration depth in nm, T in mK);
// stored in SI.
struct Material {
  double gap;          // Delta, J
  double lambda;       // penetration depth, m
  double tc;           // critical temperature, K (metadata only)
  double temperature;  // K

  static Material from_lab_units(double gap_GHz, double lambda_nm, double tc_K,
                                 double temperature_mK);

  double kT() const;                  // J
  double gap_frequency_GHz() const;   // Delta/(2 pi hbar) in GHz
  void validate() const;              // gap, lambda, T > 0 and kT < gap
};

// Normal-state conductivity sigma_N = hbar / (mu0 lambda^2 pi Delta), S/m.
double sigma_n(const Material& mat);

// Quasiparticle occupation law.  The quasithermal mode is a Maxwell-Boltzmann
// tail pinned at the gap edge; thermal equilibrium is plain Fermi-Dirac.
struct QpDistribution {
  enum class Mode { quasithermal, thermal_equilibrium };

  double x_qp_res = 0.0;  // resident (nonthermal) normalized QP fraction, >= 0
  Mode mode = Mode::quasithermal;

  void validate() const;
};

// Total normalized QP fraction: x_res plus the thermally activated part
// sqrt(2 pi kT / Delta) exp(-Delta/kT).
double xqp_total(const QpDistribution& dist, const Material& mat);

// n(E) for E >= Delta.  Quasithermal: x_qp sqrt(Delta/(2 pi kT)) e^{-(E-Delta)/kT}.
// Thermal: 1/(e^{E/kT} + 1).  Throws std::domain_error for E < Delta.
double occupation(const QpDistribution& dist, const Material& mat, double energy);

// Normalized QP fraction recovered from an arbitrary occupation function by
// integrating it against the BCS density of states (quadrature over E >= Delta
// with the gap-edge singularity removed by substitution).
double xqp_from_occupation(const std::function<double(double)>& n, const Material& mat,
                           const QuadratureSpec& spec = {});

}  // namespace qpn
