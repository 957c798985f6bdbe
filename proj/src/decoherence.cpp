#include "qpn/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qpn/conductivity.hpp"
#include "qpn/constants.hpp"

namespace qpn {

namespace k = constants;

double t1_resonator(double s_q_plus, double s_q_minus, double capacitance, double omega0) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("t1_resonator: omega0 must be > 0");
  const double rate = omega0 / (2.0 * k::hbar * capacitance) * (s_q_plus + s_q_minus);
  return rate > 0.0 ? 1.0 / rate : infinity;
}

double quality_factor_cpw(const CpwResonator& cpw, const QpDistribution& dist,
                          const Material& mat) {
  const double s1 = sigma1_exact(dist, mat, cpw.omega0);
  const double lk = kinetic_inductance(cpw.wire, mat);
  const double l = lk + cpw.wire.geometric_inductance;
  const double inv_q = s1 * (lk / l) * k::hbar * cpw.omega0 / (k::pi * mat.gap);
  return inv_q > 0.0 ? 1.0 / inv_q : infinity;
}

double quality_factor_cpw_highfreq(const CpwResonator& cpw, const QpDistribution& dist,
                                   const Material& mat) {
  const double lk = kinetic_inductance(cpw.wire, mat);
  const double l = lk + cpw.wire.geometric_inductance;
  const double inv_q = xqp_total(dist, mat) * (lk / l) *
                       std::sqrt(2.0 * mat.gap / (k::pi * k::pi * k::hbar * cpw.omega0));
  return inv_q > 0.0 ? 1.0 / inv_q : infinity;
}

TransmonT1 t1_transmon(const Transmon& t, const QpDistribution& dist, const Material& mat) {
  const double omega0 = device_frequency(DeviceSpec(t));
  const double s1 = sigma1_exact(dist, mat, omega0);
  const double lk = kinetic_inductance(t.lead, mat);
  const double denom = t.junction.lj + 2.0 * (lk + t.pad_lg);
  const double coth = 1.0 / std::tanh(k::hbar * omega0 / (2.0 * mat.kT()));
  const double scale = s1 * k::hbar / (t.capacitance * k::pi * mat.gap) / (denom * denom) * coth;
  TransmonT1 out;
  out.omega0 = omega0;
  out.rate_junction = t.junction.gap_engineered ? 0.0 : scale * t.junction.lj;
  out.rate_wire = scale * 2.0 * lk;
  out.rate_total = out.rate_junction + out.rate_wire;
  out.t1 = out.rate_total > 0.0 ? 1.0 / out.rate_total : infinity;
  return out;
}

double t1_transmon_highfreq_rate(const Transmon& t, const QpDistribution& dist,
                                 const Material& mat) {
  const double omega0 = device_frequency(DeviceSpec(t));
  const double base =
      xqp_total(dist, mat) * std::sqrt(2.0 * mat.gap * omega0 / (k::hbar * k::pi * k::pi));
  if (!t.junction.gap_engineered) return base;
  return 2.0 * kinetic_inductance(t.lead, mat) / t.junction.lj * base;
}

double fid_filter(double omega, double t) {
  const double x = 0.5 * omega * t;
  if (std::abs(x) < 1e-8) return 0.5 * t * t;  // sinc limit
  const double s = std::sin(x) / (0.5 * omega);
  return 0.5 * s * s;
}

double alpha_numeric(const std::function<double(double)>& spectrum, double domega_dphi,
                     double t, const AlphaGrid& grid) {
  if (!(t > 0.0)) throw std::invalid_argument("alpha_numeric: t must be > 0");
  double omega_max = grid.omega_max;
  if (omega_max <= 0.0) {
    if (!(grid.temperature_K > 0.0))
      throw std::invalid_argument("alpha_numeric: omega_max or temperature_K required");
    omega_max = 10.0 * std::max(k::k_boltzmann * grid.temperature_K / k::hbar,
                                2.0 * k::pi / t);
  }

  // Build the positive-frequency node set: log-spaced overall, refined to a
  // fixed phase step of the filter where w t/2 > pi so the sin^2 oscillations
  // are resolved.
  std::vector<double> nodes;
  const double ld = std::log10(omega_max / grid.omega_min);
  const int nlog = std::max(2, static_cast<int>(ld * grid.points_per_decade) + 1);
  nodes.reserve(nlog + 64);
  for (int i = 0; i < nlog; ++i)
    nodes.push_back(grid.omega_min * std::pow(10.0, ld * i / (nlog - 1)));
  const double osc_start = 2.0 * k::pi / t;
  if (osc_start < omega_max) {
    const double dw = 2.0 * grid.phase_step / t;
    for (double w = osc_start; w < omega_max; w += dw) nodes.push_back(w);
  }
  nodes.push_back(omega_max);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  // Trapezoid over the merged grid, both signs of omega.
  auto f = [&](double w) {
    return (spectrum(w) + spectrum(-w)) * fid_filter(w, t);
  };
  double integral = 0.0;
  double fprev = f(nodes.front());
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double fcur = f(nodes[i]);
    integral += 0.5 * (fprev + fcur) * (nodes[i] - nodes[i - 1]);
    fprev = fcur;
  }
  return domega_dphi * domega_dphi * integral;
}

Validated alpha_analytic_st(const SplitTransmon& s, const QpDistribution& dist,
                            const Material& mat, double t) {
  const double kt = mat.kT();
  const double x_qp = xqp_total(dist, mat);
  const double phi = split_transmon_phase(s.flux_ratio);
  const double cosp = std::cos(phi);
  const double half2 = std::cos(0.5 * phi) * std::cos(0.5 * phi);
  double bracket = split_transmon_lk(s, mat);
  if (!s.junction.gap_engineered) bracket += s.junction.lj * half2 / (2.0 * cosp * cosp);
  const double omega0 = device_frequency(DeviceSpec(s));
  const double tanx = std::tan(k::pi * s.flux_ratio);
  const double tau = kt * t / k::hbar;
  const double logfac = std::log(4.0 * tau * tau * tau) + 1.0 - k::euler_gamma;
  const double value = x_qp * tanx * tanx * (omega0 / k::flux_quantum) *
                       (omega0 / k::flux_quantum) *
                       std::sqrt(2.0 * k::pi * k::hbar * k::hbar * mat.gap / kt) * bracket * t *
                       logfac;
  return {value, tau >= 10.0};
}

T2StarResult t2_star(const SplitTransmon& s, const QpDistribution& dist, const Material& mat,
                     Bracket bracket, double tol) {
  // Bisect in log-time so the tolerance is relative across the many decades
  // the bracket spans.
  auto objective = [&](double u) {
    return alpha_analytic_st(s, dist, mat, std::exp(u)).value - 1.0;
  };
  const double validity_floor = 10.0 * k::hbar / mat.kT();
  const double u_lo = std::log(bracket.lo), u_hi = std::log(bracket.hi);
  if (objective(u_hi) < 0.0)  // dephasing too weak to reach alpha = 1 inside the bracket
    return {bracket.hi, T2StarResult::Kind::lower_bound, true};
  if (objective(u_lo) > 0.0)
    return {bracket.lo, T2StarResult::Kind::upper_bound, bracket.lo >= validity_floor};
  const double root = std::exp(find_root(objective, {u_lo, u_hi}, tol));
  return {root, T2StarResult::Kind::root, root >= validity_floor};
}

double t2_combined(double t1_seconds, double t_phi_seconds) {
  const double rate = 0.5 / t1_seconds + 1.0 / t_phi_seconds;
  return rate > 0.0 ? 1.0 / rate : infinity;
}

}  // namespace qpn
