#pragma once

// Physical constants (SI, 2018/2019 exact values where defined).
namespace qpn::constants {

inline constexpr double planck_h = 6.62607015e-34;    // J s (exact)
inline constexpr double hbar = 1.0545718176461565e-34;  // h/(2 pi), kept exactly consistent
inline constexpr double k_boltzmann = 1.380649e-23;   // J/K (exact)
inline constexpr double elementary_charge = 1.602176634e-19;  // C (exact)
inline constexpr double mu0 = 1.25663706143591729539e-6;      // H/m (4*pi*1e-7)
inline constexpr double speed_of_light = 299792458.0;         // m/s (exact)
inline constexpr double flux_quantum = planck_h / (2.0 * elementary_charge);  // Wb
inline constexpr double euler_gamma = 0.5772156649015329;
inline constexpr double pi = 3.14159265358979323846;

}  // namespace qpn::constants
