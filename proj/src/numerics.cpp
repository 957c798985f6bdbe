#include "qpn/numerics.hpp"

#include <cmath>
#include <vector>

#include "qpn/constants.hpp"

namespace qpn {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || rel_tol > 1e-3)
    throw std::invalid_argument("QuadratureSpec: rel_tol must be in (0, 1e-3]");
  if (max_levels < 6) throw std::invalid_argument("QuadratureSpec: max_levels must be >= 6");
  if (abs_floor < 0.0) throw std::invalid_argument("QuadratureSpec: abs_floor must be >= 0");
}

namespace {

constexpr double kHalfPi = constants::pi / 2.0;

// Finite-interval tanh-sinh node at parameter u (u >= 0 gives the node near b,
// the caller mirrors for u < 0).  Distances to the endpoints are computed from
// exp(-2s) directly so integrands stay accurate next to their singularities.
struct TanhSinhNode {
  double x;       // abscissa
  double weight;  // du-weight including the interval scaling
};

bool tanh_sinh_node(double a, double b, double u, TanhSinhNode& node) {
  const double s = kHalfPi * std::sinh(u);
  const double e2 = std::exp(-2.0 * std::abs(s));
  // 1 - tanh|s| and sech^2(s), both exact as e2 -> 0
  const double one_minus_tanh = 2.0 * e2 / (1.0 + e2);
  const double sech2 = 4.0 * e2 / ((1.0 + e2) * (1.0 + e2));
  const double half_width = 0.5 * (b - a);
  const double delta = half_width * one_minus_tanh;  // distance to the near endpoint
  node.x = (u >= 0.0) ? b - delta : a + delta;
  node.weight = half_width * kHalfPi * std::cosh(u) * sech2;
  if (!(node.weight > 0.0) || !std::isfinite(node.weight)) return false;
  // Clamped into the open interval: skip nodes that round onto an endpoint.
  return node.x > a && node.x < b;
}

// Semi-infinite exp-sinh node: x = a + exp(s), s = (pi/2) sinh(u).
bool exp_sinh_node(double a, double u, TanhSinhNode& node) {
  const double s = kHalfPi * std::sinh(u);
  if (s > 690.0) return false;  // exp would overflow; exponential decay makes the tail moot
  const double es = std::exp(s);
  node.x = a + es;
  node.weight = es * kHalfPi * std::cosh(u);
  return node.x > a && std::isfinite(node.weight) && node.weight > 0.0;
}

}  // namespace

double integrate_singular(const std::function<double(double)>& f, double a, double b,
                          const QuadratureSpec& spec) {
  spec.validate();
  const bool semi_infinite = std::isinf(b);
  if (!semi_infinite && !(b > a)) throw std::invalid_argument("integrate_singular: need b > a");

  const double u_max = semi_infinite ? 6.8 : 4.0;

  auto eval = [&](double u) -> double {
    TanhSinhNode node;
    bool ok = semi_infinite ? exp_sinh_node(a, u, node) : tanh_sinh_node(a, b, u, node);
    if (!ok) return 0.0;
    const double fx = f(node.x);
    if (!std::isfinite(fx)) return 0.0;  // integrable endpoint singularity rounded onto the edge
    return fx * node.weight;
  };

  // Level 0: step h = 1.
  double h = 1.0;
  double sum = eval(0.0);
  for (int j = 1; j * h <= u_max; ++j) sum += eval(j * h) + eval(-j * h);
  double estimate = sum * h;
  double prev = estimate;
  double err = std::numeric_limits<double>::infinity();

  for (int level = 1; level <= spec.max_levels; ++level) {
    h *= 0.5;
    // New nodes are the odd multiples of the refined step.
    double add = 0.0;
    for (int j = 1; j * h <= u_max; j += 2) add += eval(j * h) + eval(-j * h);
    estimate = 0.5 * prev + add * h;
    err = std::abs(estimate - prev);
    prev = estimate;
    if (level >= 2 && err <= std::max(spec.rel_tol * std::abs(estimate), spec.abs_floor))
      return estimate;
  }
  throw QuadratureError("integrate_singular: no convergence after max refinement levels",
                        estimate, err);
}

double find_root(const std::function<double(double)>& objective, Bracket bracket, double tol) {
  double lo = bracket.lo, hi = bracket.hi;
  if (!(lo < hi)) throw BracketError("find_root: bracket requires lo < hi");
  if (!(tol > 0.0)) throw std::invalid_argument("find_root: tol must be > 0");

  double flo = objective(lo);
  double fhi = objective(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw BracketError("find_root: objective does not change sign on the bracket");

  double mid = lo;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    if (hi - lo <= tol * std::max(1.0, std::abs(mid))) return mid;
    if (mid == lo || mid == hi) break;  // bracket exhausted at double precision
    const double fmid = objective(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid)))
    return mid;  // tighter than double precision allows; accept
  throw BracketError("find_root: tolerance unreachable", mid);
}

}  // namespace qpn
