#include "qpn/conductivity.hpp"

#include <cmath>
#include <stdexcept>

#include "qpn/bessel.hpp"
#include "qpn/constants.hpp"

namespace qpn {

namespace k = constants;

namespace {

void require_subgap(const Material& mat, double omega) {
  const double hw = k::hbar * omega;
  if (!(omega > 0.0) || !(hw < 2.0 * mat.gap))
    throw std::domain_error("conductivity: need 0 < hbar*omega < 2*gap (subgap regime)");
}

}  // namespace

double sigma1_exact(const std::function<double(double)>& n, const Material& mat, double omega,
                    const QuadratureSpec& spec) {
  require_subgap(mat, omega);
  const double gap = mat.gap;
  const double hw = k::hbar * omega;
  const double kt = mat.kT();

  // E = gap*cosh(u): dE/sqrt(E^2-gap^2) = du, leaving only the smooth
  // photon-assisted factor 1/sqrt((E+hw)^2-gap^2) in the kernel.
  auto integrand = [&](double u) {
    const double E = gap * std::cosh(u);
    const double kernel = (E * (E + hw) + gap * gap) /
                          std::sqrt((E + hw) * (E + hw) - gap * gap);
    return (2.0 / hw) * kernel * (n(E) - n(E + hw));
  };
  const double umax = std::acosh(1.0 + 60.0 * kt / gap);
  return integrate_singular(integrand, 0.0, umax, spec);
}

double sigma1_exact(const QpDistribution& dist, const Material& mat, double omega,
                    const QuadratureSpec& spec) {
  if (dist.mode == QpDistribution::Mode::quasithermal && xqp_total(dist, mat) == 0.0) {
    require_subgap(mat, omega);
    return 0.0;
  }
  return sigma1_exact([&](double E) { return occupation(dist, mat, E); }, mat, omega, spec);
}

double sigma2_exact(const std::function<double(double)>& n, const Material& mat, double omega,
                    const QuadratureSpec& spec) {
  require_subgap(mat, omega);
  const double gap = mat.gap;
  const double hw = k::hbar * omega;

  auto integrand = [&](double E) {
    const double kernel = (E * (E + hw) + gap * gap) /
                          (std::sqrt(gap * gap - E * E) *
                           std::sqrt((E + hw) * (E + hw) - gap * gap));
    return (1.0 / hw) * kernel * (1.0 - 2.0 * n(E + hw));
  };
  return integrate_singular(integrand, gap - hw, gap, spec);
}

double sigma2_exact(const QpDistribution& dist, const Material& mat, double omega,
                    const QuadratureSpec& spec) {
  return sigma2_exact([&](double E) { return occupation(dist, mat, E); }, mat, omega, spec);
}

Validated sigma1_approx(double x_qp, const Material& mat, double omega) {
  require_subgap(mat, omega);
  const double kt = mat.kT();
  const double hw = k::hbar * omega;
  const double y = hw / (2.0 * kt);
  // sinh(y) K0(y) assembled from the scaled Bessel function so large y cannot
  // overflow: sinh(y) K0(y) = (1 - e^{-2y})/2 * e^y K0(y).
  const double sinh_k0 = 0.5 * (1.0 - std::exp(-2.0 * y)) * bessel_k0_scaled(y);
  const double value = x_qp * std::pow(2.0 * mat.gap / kt, 1.5) / std::sqrt(k::pi) *
                       (kt / hw) * sinh_k0;
  const bool valid = hw <= 0.1 * mat.gap && kt <= 0.1 * mat.gap;
  return {value, valid};
}

double sigma1_lowfreq(double x_qp, const Material& mat, double omega) {
  const double kt = mat.kT();
  const double hw = k::hbar * omega;
  return 0.5 / std::sqrt(k::pi) * x_qp * std::pow(2.0 * mat.gap / kt, 1.5) *
         (std::log(4.0 * kt / hw) - k::euler_gamma);
}

double sigma1_highfreq(double x_qp, const Material& mat, double omega) {
  const double hw = k::hbar * omega;
  return 0.5 * x_qp * std::pow(2.0 * mat.gap / hw, 1.5);
}

ComplexConductivity conductivity(const QpDistribution& dist, const Material& mat, double omega,
                                 const QuadratureSpec& spec) {
  return {sigma1_exact(dist, mat, omega, spec), sigma2_exact(dist, mat, omega, spec), omega};
}

}  // namespace qpn
