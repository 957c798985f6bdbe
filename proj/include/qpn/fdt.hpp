#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace qpn::fdt {

// Finite-dimensional system: nondegenerate energy levels, a Hermitian
// observable given in the energy eigenbasis, and diagonal density weights.
// Delta-function spectra become exact finite sums of (frequency, weight) lines,
// so the fluctuation-dissipation identities can be checked to rounding error.
struct ToySystem {
  std::vector<double> energies;                 // ascending, distinct, J (or any unit)
  std::vector<std::complex<double>> observable; // row-major d x d, Hermitian
  std::vector<double> rho;                      // diagonal weights, >= 0
  double temperature = 1.0;                     // K-equivalent for thermal helpers

  std::size_t dim() const { return energies.size(); }
  const std::complex<double>& o(std::size_t m, std::size_t n) const {
    return observable[m * dim() + n];
  }
  void validate() const;
};

// One delta line of a spectrum: weight at transition frequency w_mn = (E_m - E_n)/hbar.
struct SpectralLine {
  double omega;
  double weight;
  std::uint32_t m, n;
};

struct SpectralLines {
  std::vector<SpectralLine> lines;
};

// Correlation spectrum <S_O(w)>_rho: weight 2 pi rho_n |<m|O - <O>|n>|^2 at w_mn.
SpectralLines correlation_spectrum(const ToySystem& sys);

// The same lines reweighted by rho at the shifted energy E_n + hbar w_mn = E_m.
SpectralLines shifted_correlation_spectrum(const ToySystem& sys);

// Imaginary part of the averaged susceptibility from its own spectral
// representation: weight (pi/hbar) (rho_n - rho_m) |<m|O - <O>|n>|^2 at w_mn.
SpectralLines susceptibility_spectrum(const ToySystem& sys);

// Max residual of 2 hbar Im<chi(w)> - [<S(w)>_rho(E) - <S(w)>_rho(E+hbar w)]
// across all lines, relative to the largest correlation weight.
double verify_gfdt(const ToySystem& sys);

// Max line-wise residual of <S(w)> - 2 hbar Im<chi(w)> [n_B(w) + 1], valid when
// rho follows the (quasi)thermal law rho(E) ~ e^{-E/kT}; relative units as above.
double verify_fdt_reduction(const ToySystem& sys);

// Assign rho(E) = n0 e^{-E/kT}; n0 != 1 leaves the FDT reduction intact
// (only ratios of rho enter).
void set_quasithermal_rho(ToySystem& sys, double n0 = 1.0);

// Reproducible random system: levels with a minimum gap, Hermitian observable,
// normalized random diagonal rho.
ToySystem random_toy_system(std::size_t dim, std::uint64_t seed);

// Batch report for the CLI.
struct BatchResult {
  std::uint64_t seed;
  std::size_t dim;
  double gfdt_residual;
  double fdt_residual;  // after resetting rho to thermal
};
std::vector<BatchResult> run_batch(std::size_t count, std::size_t dim_lo, std::size_t dim_hi,
                                   std::uint64_t base_seed, bool parallel = true);

}  // namespace qpn::fdt
