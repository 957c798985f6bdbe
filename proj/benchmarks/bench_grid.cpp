// Compares the serial reference path against the OpenMP kernels on the three
// grid workloads that dominate real runs.  Prints timings and verifies the
// outputs are identical.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qpn/figures.hpp"

using namespace qpn;

namespace {

double time_run(const std::function<std::string()>& fn, std::string& digest) {
  const auto t0 = std::chrono::steady_clock::now();
  digest = fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string digest_curves(const std::vector<Curve>& curves) {
  std::string all;
  for (const auto& c : curves) all += format_csv(c);
  return all;
}

void bench_figure(const char* label, int id, const RunConfig& cfg) {
  std::string serial_digest, par_digest;
  const double t_serial =
      time_run([&] { return digest_curves(run_figure(id, cfg, Exec::Serial)); },
               serial_digest);
  const double t_par = time_run(
      [&] { return digest_curves(run_figure(id, cfg, Exec::Par)); }, par_digest);
  std::printf("%-28s serial %8.1f ms   openmp %8.1f ms   speedup %.2fx   outputs %s\n",
              label, t_serial, t_par, t_serial / t_par,
              serial_digest == par_digest ? "identical" : "DIFFER");
}

}  // namespace

int main() {
  std::printf("openmp compiled in: %s\n", openmp_enabled ? "yes" : "no");

  bench_figure("cpw quality factors", 3,
               config_from_preset("fig3", nlohmann::json{{"sweep", {{"grid", {{"points", 96}}}}}}));
  bench_figure("flux noise spectra", 5,
               config_from_preset("fig5", nlohmann::json{{"sweep", {{"grid", {{"points", 161}}}}}}));
  bench_figure("split-transmon T2*", 6,
               config_from_preset("fig6", nlohmann::json{{"sweep", {{"grid", {{"points", 61}}}}}}));
  return 0;
}
