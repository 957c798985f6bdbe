#pragma once

namespace qpn {

struct K0Result {
  double value;
  bool underflow;  // true when exp(-y) underflowed and 0 was returned
};

// Modified Bessel function of the second kind, order zero.
//
// y < 2 uses the ascending series; y >= 2 evaluates Chebyshev fits of the
// scaled function exp(y)*sqrt(y)*K0(y) (two subranges, coefficients derived
// from 40-digit reference values; max relative error ~5e-15 on [2, 705]).
// Throws std::domain_error for y <= 0.
double bessel_k0(double y);

// Same, but reports underflow explicitly instead of silently returning 0.
K0Result bessel_k0_checked(double y);

// exp(y) * K0(y).  Finite for all y > 0; use this in products with sinh/cosh
// factors that would otherwise overflow.
double bessel_k0_scaled(double y);

}  // namespace qpn
