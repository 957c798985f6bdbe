#include "qpn/circuit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qpn/constants.hpp"
#include "qpn/conductivity.hpp"

namespace qpn {

namespace k = constants;

void WireSegment::validate() const {
  if (!(length > 0.0) || !(cross_section > 0.0))
    throw std::invalid_argument("WireSegment: length and cross_section must be > 0");
  if (geometric_inductance < 0.0)
    throw std::invalid_argument("WireSegment: geometric inductance must be >= 0");
}

void Junction::validate() const {
  if (!(lj > 0.0)) throw std::invalid_argument("Junction: LJ must be > 0");
}

double kinetic_inductance(double length, double cross_section, const Material& mat) {
  return k::mu0 * mat.lambda * mat.lambda * length / cross_section;
}

double kinetic_inductance(const WireSegment& wire, const Material& mat) {
  wire.validate();
  return kinetic_inductance(wire.length, wire.cross_section, mat);
}

double flux_qubit_minimum_phase(double beta) {
  if (!(beta > 1.0)) throw std::invalid_argument("flux qubit requires beta = EJ/EL > 1");
  return k::pi + std::sqrt(6.0 * (beta - 1.0));
}

double split_transmon_phase(double flux_ratio) {
  const double x = k::pi * flux_ratio;
  return std::cos(x) > 0.0 ? x : k::pi + x;
}

double split_transmon_lk(const SplitTransmon& st, const Material& mat) {
  return 2.0 * st.pad_lk + 0.5 * kinetic_inductance(st.loop_half, mat);
}

double split_transmon_lg(const SplitTransmon& st) {
  return 2.0 * st.pad_lg + 0.5 * st.loop_half.geometric_inductance;
}

double split_transmon_total_inductance(const SplitTransmon& st, const Material& mat) {
  const double cosx = std::cos(k::pi * st.flux_ratio);
  if (cosx == 0.0) throw std::domain_error("split transmon: cos(pi Phi/Phi0) = 0");
  return st.junction.lj / (2.0 * std::abs(cosx)) + split_transmon_lk(st, mat) +
         split_transmon_lg(st);
}

std::complex<double> wire_impedance(const WireSegment& wire, const ComplexConductivity& sigma,
                                    const Material& mat, double omega) {
  wire.validate();
  if (!(sigma.sigma2_over_sigman > 0.0))
    throw std::domain_error("wire_impedance: sigma2 must be > 0 (degenerate superconductor)");
  const double sn = sigma_n(mat);
  const std::complex<double> s(sigma.sigma1_over_sigman * sn, sigma.sigma2_over_sigman * sn);
  return wire.length / (s * wire.cross_section) -
         std::complex<double>(0.0, omega * wire.geometric_inductance);
}

Admittance wire_admittance(const WireSegment& wire, double sigma1_over_sigman,
                           const Material& mat, double omega) {
  const double lk = kinetic_inductance(wire, mat);
  const double ltot = lk + wire.geometric_inductance;
  const double re = sigma1_over_sigman * k::hbar / (k::pi * mat.gap) * lk / (ltot * ltot);
  return {re, 1.0 / (omega * ltot), omega};
}

Admittance junction_admittance(const Junction& j, double sigma1_over_sigman,
                               const Material& mat, double omega) {
  j.validate();
  const double half = std::cos(0.5 * j.phase);
  const double re = j.gap_engineered
                        ? 0.0
                        : sigma1_over_sigman * k::hbar / (k::pi * mat.gap) * half * half / j.lj;
  return {re, std::abs(std::cos(j.phase)) / (omega * j.lj), omega};
}

std::complex<double> junction_impedance_approx(const Junction& j, double sigma1_over_sigman,
                                               const Material& mat, double omega, double phase) {
  j.validate();
  const double cosp = std::cos(phase);
  const double half2 = std::cos(0.5 * phase) * std::cos(0.5 * phase);
  const double loss_scale = sigma1_over_sigman * k::hbar * omega / (k::pi * mat.gap);
  if (!(std::abs(cosp) > 100.0 * half2 * loss_scale)) {
    std::ostringstream msg;
    msg << "junction_impedance_approx: invalid near phi = " << phase
        << " (|cos phi| too small against the dissipative channel)";
    throw ApproximationError(msg.str());
  }
  const double re = j.gap_engineered ? 0.0
                                     : sigma1_over_sigman * k::hbar / (k::pi * mat.gap) *
                                           omega * omega * j.lj * half2 / (cosp * cosp);
  return {re, -omega * j.lj / std::abs(cosp)};
}

CpwRlc cpw_rlc_map(const CpwResonator& cpw, double sigma1_over_sigman, const Material& mat) {
  cpw.wire.validate();
  if (!(cpw.z0 > 0.0)) throw std::invalid_argument("CpwResonator: Z0 must be > 0");
  if (!(cpw.omega0 > 0.0)) throw std::invalid_argument("CpwResonator: omega0 must be > 0");
  const double ell = cpw.wire.length;
  const double lk = kinetic_inductance(cpw.wire, mat);
  const double l_per = (lk + cpw.wire.geometric_inductance) / ell;  // L' = pi Z0/(omega0 l)
  const double c_per = l_per / (cpw.z0 * cpw.z0);
  const double r_per = sigma1_over_sigman * k::hbar * cpw.omega0 * cpw.omega0 * lk /
                       (k::pi * mat.gap * ell);
  CpwRlc out;
  out.r = 2.0 * l_per / (ell * r_per * c_per);
  out.l = 2.0 * ell * l_per / (k::pi * k::pi);
  out.c = 0.5 * ell * c_per;
  out.r_per_length = r_per;
  out.lk_total = lk;
  out.lg_total = cpw.wire.geometric_inductance;
  return out;
}

Admittance transmon_admittance(const Transmon& t, double sigma1_over_sigman,
                               const Material& mat, double omega) {
  t.junction.validate();
  if (!(t.ej_over_ec > 1.0)) throw std::invalid_argument("Transmon: EJ/EC must be > 1");
  const double lk = kinetic_inductance(t.lead, mat);
  const double denom = t.junction.lj + 2.0 * (lk + t.pad_lg);
  const double numer = t.junction.gap_engineered ? 2.0 * lk : t.junction.lj + 2.0 * lk;
  const double re =
      sigma1_over_sigman * k::hbar / (k::pi * mat.gap) * numer / (denom * denom);
  return {re, 1.0 / (omega * denom), omega};
}

double flux_qubit_phase(const FluxQubit& f) {
  return f.use_potential_minimum ? flux_qubit_minimum_phase(f.beta) : f.junction.phase;
}

double flux_qubit_total_inductance(const FluxQubit& f, const Material& mat) {
  const double lsum = kinetic_inductance(f.loop, mat) + f.loop.geometric_inductance;
  return 1.0 / (1.0 / f.junction.lj + 1.0 / lsum);
}

double flux_qubit_admittance(const FluxQubit& f, double sigma1_over_sigman,
                             const Material& mat, double omega, double phase) {
  f.junction.validate();
  if (!(f.beta > 1.0)) throw std::invalid_argument("FluxQubit: beta must be > 1");
  (void)omega;
  const double lk = kinetic_inductance(f.loop, mat);
  const double lsum = lk + f.loop.geometric_inductance;
  const double half = std::cos(0.5 * phase);
  double bracket = lk / (lsum * lsum);
  if (!f.junction.gap_engineered) bracket += half * half / f.junction.lj;
  return sigma1_over_sigman * k::hbar / (k::pi * mat.gap) * bracket;
}

Admittance split_transmon_admittance(const SplitTransmon& s, double sigma1_over_sigman,
                                     const Material& mat, double omega) {
  s.junction.validate();
  const double phi = split_transmon_phase(s.flux_ratio);
  const double cosp = std::cos(phi);  // |cos phi| == |cos(pi Phi/Phi0)| on both branches
  const double half2 = std::cos(0.5 * phi) * std::cos(0.5 * phi);
  const double loss_scale = sigma1_over_sigman * k::hbar * omega / (k::pi * mat.gap);
  if (!(std::abs(cosp) > 100.0 * half2 * loss_scale)) {
    std::ostringstream msg;
    msg << "split_transmon_admittance: junction inversion invalid near phi = " << phi;
    throw ApproximationError(msg.str());
  }
  const double lk = split_transmon_lk(s, mat);
  const double lg = split_transmon_lg(s);
  const double ltot = s.junction.lj / (2.0 * std::abs(cosp)) + lk + lg;
  double numer = lk;
  if (!s.junction.gap_engineered) numer += s.junction.lj * half2 / (2.0 * cosp * cosp);
  const double re = sigma1_over_sigman * k::hbar / (k::pi * mat.gap) * numer / (ltot * ltot);
  return {re, 1.0 / (omega * ltot), omega};
}

double device_frequency(const DeviceSpec& d) {
  struct Visitor {
    double operator()(const CpwResonator& c) const { return c.omega0; }
    double operator()(const Transmon& t) const {
      return 1.0 / std::sqrt(t.junction.lj * t.capacitance);
    }
    double operator()(const FluxQubit&) const {
      throw std::domain_error("device_frequency: flux qubit has no harmonic mode frequency");
    }
    double operator()(const SplitTransmon& s) const {
      const double cosx = std::abs(std::cos(k::pi * s.flux_ratio));
      if (cosx == 0.0) throw std::domain_error("split transmon at cos(pi Phi/Phi0) = 0");
      return std::sqrt(2.0 * cosx / (s.junction.lj * s.capacitance));
    }
  };
  return std::visit(Visitor{}, d);
}

double split_transmon_domega_dphi(const SplitTransmon& s) {
  const double omega = device_frequency(DeviceSpec(s));
  return -(k::pi / (2.0 * k::flux_quantum)) * omega * std::tan(k::pi * s.flux_ratio);
}

}  // namespace qpn
