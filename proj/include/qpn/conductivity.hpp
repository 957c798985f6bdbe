#pragma once

#include "qpn/material.hpp"

namespace qpn {

// (sigma1, sigma2) normalized by the normal-state conductivity, at one frequency.
struct ComplexConductivity {
  double sigma1_over_sigman;
  double sigma2_over_sigman;
  double omega;  // rad/s
};

// Value plus a validity flag; flagged false when evaluated outside the stated
// window of the approximation instead of refusing (figure sweeps cross regime
// boundaries).
struct Validated {
  double value;
  bool valid;
};

// Dissipative part of the generalized Mattis-Bardeen conductivity for an
// arbitrary occupation n(E), subgap only (0 < hbar omega < 2 Delta).
// The gap-edge singularity is removed analytically by E = Delta cosh(u) before
// the double-exponential quadrature; the upper limit is truncated where the
// occupation tail is below e^{-60}.
double sigma1_exact(const QpDistribution& dist, const Material& mat, double omega,
                    const QuadratureSpec& spec = {});
// Same kernel for an arbitrary occupation function n(E), E >= Delta.
double sigma1_exact(const std::function<double(double)>& n, const Material& mat, double omega,
                    const QuadratureSpec& spec = {});

// Reactive part: quadrature over [Delta - hbar omega, Delta] with both
// endpoint singularities regularized by the tanh-sinh transform.
double sigma2_exact(const QpDistribution& dist, const Material& mat, double omega,
                    const QuadratureSpec& spec = {});
double sigma2_exact(const std::function<double(double)>& n, const Material& mat, double omega,
                    const QuadratureSpec& spec = {});

// Closed-form sigma1 for the quasithermal law,
//   x (2 Delta/kT)^{3/2} (1/sqrt(pi)) (kT/hw) sinh(hw/2kT) K0(hw/2kT),
// valid for hbar omega, kT <~ 0.1 Delta (flagged outside).
Validated sigma1_approx(double x_qp, const Material& mat, double omega);

// Low-frequency (hbar omega << kT) logarithmic form.
double sigma1_lowfreq(double x_qp, const Material& mat, double omega);

// High-frequency (hbar omega >> kT) power-law form, (1/2) x (2 Delta/hw)^{3/2}.
double sigma1_highfreq(double x_qp, const Material& mat, double omega);

// Both components at once.
ComplexConductivity conductivity(const QpDistribution& dist, const Material& mat, double omega,
                                 const QuadratureSpec& spec = {});

}  // namespace qpn
