#pragma once

#include <functional>
#include <limits>

#include "qpn/errors.hpp"

namespace qpn {

// Tolerance and refinement control for integrate_singular.
struct QuadratureSpec {
  double rel_tol = 1e-9;       // in (0, 1e-3]
  double abs_floor = 0.0;      // absolute acceptance floor for near-zero integrals
  int max_levels = 12;         // >= 6

  void validate() const;
};

// Sign-changing interval for find_root.
struct Bracket {
  double lo;
  double hi;
};

// Integrate f over (a, b), where b may be +infinity.  Uses a double-exponential
// (tanh-sinh) transformation on finite intervals and its exp-sinh variant on
// semi-infinite ones, so inverse-square-root endpoint singularities are
// handled without special casing.  For infinite b the integrand must decay
// exponentially.  Deterministic for fixed inputs.
//
// Throws QuadratureError (carrying the last estimate and error bound) if the
// requested tolerance is not reached within spec.max_levels refinements.
double integrate_singular(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec = {});

// Bisection root finder.  The objective must be continuous and change sign on
// the bracket.  Terminates when the bracket width is <= tol*max(1, |mid|).
double find_root(const std::function<double(double)>& objective, Bracket bracket, double tol);

inline constexpr double infinity = std::numeric_limits<double>::infinity();

}  // namespace qpn
