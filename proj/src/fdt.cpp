#include "qpn/fdt.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qpn/constants.hpp"
#include "qpn/parallel.hpp"

namespace qpn::fdt {

namespace k = constants;

void ToySystem::validate() const {
  const std::size_t d = dim();
  if (d < 2 || d > 16) throw std::invalid_argument("ToySystem: dimension must be in [2, 16]");
  if (observable.size() != d * d || rho.size() != d)
    throw std::invalid_argument("ToySystem: inconsistent sizes");
  for (std::size_t i = 1; i < d; ++i)
    if (!(energies[i] > energies[i - 1]))
      throw std::invalid_argument("ToySystem: energies must be ascending and distinct");
  for (double r : rho)
    if (r < 0.0) throw std::invalid_argument("ToySystem: rho weights must be >= 0");
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n)
      if (std::abs(o(m, n) - std::conj(o(n, m))) > 1e-12)
        throw std::invalid_argument("ToySystem: observable must be Hermitian");
}

namespace {

// |<m|O - <O>|n>|^2 for m != n equals |O_mn|^2 (the shift is diagonal).
double line_strength(const ToySystem& sys, std::size_t m, std::size_t n) {
  return std::norm(sys.o(m, n));
}

template <class WeightFn>
SpectralLines build_lines(const ToySystem& sys, WeightFn&& weight) {
  sys.validate();
  SpectralLines out;
  const std::size_t d = sys.dim();
  out.lines.reserve(d * (d - 1));
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      if (m == n) continue;
      SpectralLine line;
      line.omega = (sys.energies[m] - sys.energies[n]) / k::hbar;
      line.weight = weight(m, n);
      line.m = static_cast<std::uint32_t>(m);
      line.n = static_cast<std::uint32_t>(n);
      out.lines.push_back(line);
    }
  return out;
}

}  // namespace

SpectralLines correlation_spectrum(const ToySystem& sys) {
  return build_lines(sys, [&](std::size_t m, std::size_t n) {
    return 2.0 * k::pi * sys.rho[n] * line_strength(sys, m, n);
  });
}

SpectralLines shifted_correlation_spectrum(const ToySystem& sys) {
  // rho(E_n + hbar w_mn) = rho(E_m): the shifted energy lands back on the
  // spectrum, so no interpolation is ever needed.
  return build_lines(sys, [&](std::size_t m, std::size_t n) {
    return 2.0 * k::pi * sys.rho[m] * line_strength(sys, m, n);
  });
}

SpectralLines susceptibility_spectrum(const ToySystem& sys) {
  return build_lines(sys, [&](std::size_t m, std::size_t n) {
    return k::pi / k::hbar * (sys.rho[n] - sys.rho[m]) * line_strength(sys, m, n);
  });
}

double verify_gfdt(const ToySystem& sys) {
  const SpectralLines s = correlation_spectrum(sys);
  const SpectralLines s_shift = shifted_correlation_spectrum(sys);
  const SpectralLines chi = susceptibility_spectrum(sys);
  double wmax = 0.0;
  for (const auto& l : s.lines) wmax = std::max(wmax, std::abs(l.weight));
  if (wmax == 0.0) return 0.0;  // constant observable: all spectra vanish
  double residual = 0.0;
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    const double lhs = 2.0 * k::hbar * chi.lines[i].weight;
    const double rhs = s.lines[i].weight - s_shift.lines[i].weight;
    residual = std::max(residual, std::abs(lhs - rhs));
  }
  return residual / wmax;
}

double verify_fdt_reduction(const ToySystem& sys) {
  const SpectralLines s = correlation_spectrum(sys);
  const SpectralLines chi = susceptibility_spectrum(sys);
  const double kt = k::k_boltzmann * sys.temperature;
  double wmax = 0.0;
  for (const auto& l : s.lines) wmax = std::max(wmax, std::abs(l.weight));
  if (wmax == 0.0) return 0.0;
  double residual = 0.0;
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    const double x = k::hbar * s.lines[i].omega / kt;
    const double bose_plus_one = 1.0 / std::expm1(x) + 1.0;
    const double rhs = 2.0 * k::hbar * chi.lines[i].weight * bose_plus_one;
    residual = std::max(residual, std::abs(s.lines[i].weight - rhs));
  }
  return residual / wmax;
}

void set_quasithermal_rho(ToySystem& sys, double n0) {
  const double kt = k::k_boltzmann * sys.temperature;
  for (std::size_t n = 0; n < sys.dim(); ++n)
    sys.rho[n] = n0 * std::exp(-sys.energies[n] / kt);
}

ToySystem random_toy_system(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  ToySystem sys;
  sys.energies.resize(dim);
  // k_B-scale spacings with a guaranteed minimum gap
  double e = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    e += (0.05 + uni(rng)) * k::k_boltzmann;
    sys.energies[i] = e;
  }
  sys.observable.assign(dim * dim, {0.0, 0.0});
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t m = 0; m < dim; ++m) {
    sys.observable[m * dim + m] = {gauss(rng), 0.0};
    for (std::size_t n = m + 1; n < dim; ++n) {
      const std::complex<double> v(gauss(rng), gauss(rng));
      sys.observable[m * dim + n] = v;
      sys.observable[n * dim + m] = std::conj(v);
    }
  }
  sys.rho.resize(dim);
  double total = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    sys.rho[i] = 0.01 + uni(rng);
    total += sys.rho[i];
  }
  for (double& r : sys.rho) r /= total;
  sys.temperature = 0.5 + uni(rng);
  return sys;
}

std::vector<BatchResult> run_batch(std::size_t count, std::size_t dim_lo, std::size_t dim_hi,
                                   std::uint64_t base_seed, bool parallel) {
  std::vector<BatchResult> results(count);
  parallel_for(count, parallel ? Exec::Par : Exec::Serial, [&](std::size_t i) {
    const std::uint64_t seed = base_seed + i;
    std::mt19937_64 pick(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::size_t dim = dim_lo + pick() % (dim_hi - dim_lo + 1);
    ToySystem sys = random_toy_system(dim, seed);
    BatchResult r;
    r.seed = seed;
    r.dim = dim;
    r.gfdt_residual = verify_gfdt(sys);
    set_quasithermal_rho(sys, 1.0 + 0.5 * (seed % 3));  // prefactor n0 must drop out
    r.fdt_residual = verify_fdt_reduction(sys);
    results[i] = r;
  });
  return results;
}

}  // namespace qpn::fdt
