#include "qpn/bessel.hpp"

#include <cmath>
#include <stdexcept>

#include "qpn/constants.hpp"

namespace qpn {

namespace {

// Chebyshev coefficients for f(s) = exp(y) sqrt(y) K0(y).
// Range 1: y in [2, 8], s = 1/y in [0.125, 0.5].
constexpr double kCheb1[] = {
    2.4235605209667206e+00, -2.2356526056998151e-02, 7.7341811546922695e-04,
    -4.2810066888739520e-05, 3.0817001734536236e-06, -2.6393672225566434e-07,
    2.5637129826468669e-08, -2.7427056181750231e-09, 3.1694341711315427e-10,
    -3.9023562159457015e-11, 5.0676453774064117e-12, -6.8852331243836785e-13,
    9.6811447747313650e-14, -1.5247062871518814e-14, 1.9729588333442885e-15,
};
// Range 2: y in [8, inf), s = 8/y in (0, 1].
constexpr double kCheb2[] = {
    2.4879813017369239e+00, -9.1748526910255812e-03, 1.4445509317743502e-04,
    -4.0136141753466248e-06, 1.5678318070662850e-07, -7.7701105549721206e-09,
    4.6111773658689492e-10, -3.1586141110058933e-11, 2.4354878646234051e-12,
    -2.0750068330244176e-13, 1.8825219161300311e-14, -1.4802973661668753e-15,
};

template <int N>
double clenshaw(const double (&c)[N], double lo, double hi, double s) {
  const double u = (2.0 * s - lo - hi) / (hi - lo);
  double d = 0.0, dd = 0.0;
  for (int j = N - 1; j >= 1; --j) {
    const double tmp = d;
    d = 2.0 * u * d - dd + c[j];
    dd = tmp;
  }
  return u * d - dd + 0.5 * c[0];
}

// Ascending series, adequate through y < 2:
//   K0 = -(ln(y/2) + gamma) I0(y) + sum_{k>=1} (y^2/4)^k / (k!)^2 * H_k
double k0_series(double y) {
  const double t = 0.25 * y * y;
  double i0 = 1.0, term = 1.0, sum = 0.0, harmonic = 0.0;
  for (int k = 1; k < 40; ++k) {
    term *= t / (static_cast<double>(k) * k);
    i0 += term;
    harmonic += 1.0 / k;
    sum += term * harmonic;
    if (k > 4 && term * harmonic < 1e-19 * i0) break;
  }
  return -(std::log(0.5 * y) + constants::euler_gamma) * i0 + sum;
}

double scaled_k0_impl(double y) {
  if (y < 2.0) return k0_series(y) * std::exp(y);
  if (y <= 8.0) return clenshaw(kCheb1, 0.125, 0.5, 1.0 / y) / std::sqrt(y);
  return clenshaw(kCheb2, 0.0, 1.0, 8.0 / y) / std::sqrt(y);
}

}  // namespace

double bessel_k0_scaled(double y) {
  if (!(y > 0.0)) throw std::domain_error("bessel_k0: argument must be > 0");
  return scaled_k0_impl(y);
}

K0Result bessel_k0_checked(double y) {
  if (!(y > 0.0)) throw std::domain_error("bessel_k0: argument must be > 0");
  if (y < 2.0) return {k0_series(y), false};
  const double scaled = scaled_k0_impl(y);
  const double ey = std::exp(-y);
  if (ey == 0.0) return {0.0, true};
  const double v = scaled * ey;
  return {v, v == 0.0};
}

double bessel_k0(double y) { return bessel_k0_checked(y).value; }

}  // namespace qpn
