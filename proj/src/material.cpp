#include "qpn/material.hpp"

#include <cmath>
#include <stdexcept>

#include "qpn/constants.hpp"

namespace qpn {

namespace k = constants;

Material Material::from_lab_units(double gap_GHz, double lambda_nm, double tc_K,
                                  double temperature_mK) {
  Material m;
  m.gap = k::planck_h * gap_GHz * 1e9;  // h f == 2 pi hbar f
  m.lambda = lambda_nm * 1e-9;
  m.tc = tc_K;
  m.temperature = temperature_mK * 1e-3;
  m.validate();
  return m;
}

double Material::kT() const { return k::k_boltzmann * temperature; }

double Material::gap_frequency_GHz() const { return gap / k::planck_h / 1e9; }

void Material::validate() const {
  if (!(gap > 0.0)) throw std::invalid_argument("Material: gap must be > 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("Material: lambda must be > 0");
  if (!(temperature > 0.0)) throw std::invalid_argument("Material: temperature must be > 0");
  if (!(kT() < gap))
    throw std::invalid_argument("Material: kT must be below the gap (theory regime)");
}

double sigma_n(const Material& mat) {
  return k::hbar / (k::mu0 * mat.lambda * mat.lambda * k::pi * mat.gap);
}

void QpDistribution::validate() const {
  if (!(x_qp_res >= 0.0)) throw std::invalid_argument("QpDistribution: x_qp_res must be >= 0");
}

double xqp_total(const QpDistribution& dist, const Material& mat) {
  dist.validate();
  const double kt = mat.kT();
  const double thermal = std::sqrt(2.0 * k::pi * kt / mat.gap) * std::exp(-mat.gap / kt);
  return dist.x_qp_res + thermal;
}

double occupation(const QpDistribution& dist, const Material& mat, double energy) {
  if (energy < mat.gap) throw std::domain_error("occupation: E must be >= gap");
  const double kt = mat.kT();
  if (dist.mode == QpDistribution::Mode::thermal_equilibrium)
    return 1.0 / (std::exp(energy / kt) + 1.0);
  const double x = xqp_total(dist, mat);
  if (x == 0.0) return 0.0;
  return x * std::sqrt(mat.gap / (2.0 * k::pi * kt)) * std::exp(-(energy - mat.gap) / kt);
}

double xqp_from_occupation(const std::function<double(double)>& n, const Material& mat,
                           const QuadratureSpec& spec) {
  // x = (2/Delta) int_Delta^inf E n(E) / sqrt(E^2 - Delta^2) dE, with E = Delta cosh(u)
  // collapsing the density-of-states edge:  x = 2 int_0^umax cosh(u) n(Delta cosh u) du.
  const double kt = mat.kT();
  const double umax = std::acosh(1.0 + 60.0 * kt / mat.gap);
  auto integrand = [&](double u) { return 2.0 * std::cosh(u) * n(mat.gap * std::cosh(u)); };
  return integrate_singular(integrand, 0.0, umax, spec);
}

}  // namespace qpn
