#include <filesystem>
#include <fstream>

#include <doctest.h>

#include "qpn/figures.hpp"
#include "qpn/hash.hpp"

using namespace qpn;
namespace fs = std::filesystem;

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}
}  // namespace

TEST_CASE("sha1 known vectors") {
  CHECK(sha1_hex("") == "da39a3ee5e6b4b0d3255bfef95601890afd80709");
  CHECK(sha1_hex("abc") == "a9993e364706816aba3e25717850c26c9cd0d89d");
  CHECK(sha1_hex("The quick brown fox jumps over the lazy dog") ==
        "2fd4e1c67a2d28fced849ee1bb76e7391b93eb12");
}

TEST_CASE("figure 2 table shape and determinism") {
  const RunConfig cfg = config_from_preset("fig2");
  const auto curves = run_figure(2, cfg, Exec::Serial);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].rows.size() == 40);
  CHECK(curves[0].columns.size() == 3);
  const auto again = run_figure(2, cfg, Exec::Serial);
  CHECK(format_csv(curves[0]) == format_csv(again[0]));
}

TEST_CASE("serial and parallel grid evaluation agree bitwise") {
  const RunConfig cfg = config_from_preset("fig5");
  const auto serial = run_figure(5, cfg, Exec::Serial);
  const auto par = run_figure(5, cfg, Exec::Par);
  REQUIRE(serial.size() == par.size());
  for (std::size_t i = 0; i < serial.size(); ++i)
    CHECK(format_csv(serial[i]) == format_csv(par[i]));
}

TEST_CASE("csv format contract") {
  const RunConfig cfg = config_from_preset("fig2");
  const auto curves = run_figure(2, cfg, Exec::Serial);
  const std::string csv = format_csv(curves[0]);
  SUBCASE("provenance header present") {
    CHECK(csv.rfind("# config_hash: ", 0) == 0);
  }
  SUBCASE("scientific notation with 12 significant digits") {
    CHECK(csv.find("e-") != std::string::npos);
    // first data value is the grid start 1e-2
    CHECK(csv.find("1.00000000000e-02") != std::string::npos);
  }
  SUBCASE("no CR characters") {
    CHECK(csv.find('\r') == std::string::npos);
  }
}

TEST_CASE("figure 3 curve inventory") {
  const RunConfig cfg = config_from_preset("fig3");
  const auto curves = run_figure(3, cfg, Exec::Par);
  REQUIRE(curves.size() == 4);  // three QP curves + the dielectric comparison
  CHECK(curves[0].name == "fig3_qqp_xres1e-09");
  CHECK(curves[3].name == "fig3_qtls");
}

TEST_CASE("figure 4 and 6 inventories") {
  const RunConfig cfg4 = config_from_preset(
      "fig4", nlohmann::json{{"sweep", {{"grid", {{"points", 5}}}}}});
  const auto c4 = run_figure(4, cfg4, Exec::Par);
  CHECK(c4.size() == 5);  // NGE + 3 GE + TLS
  const RunConfig cfg6 = config_from_preset(
      "fig6", nlohmann::json{{"sweep", {{"grid", {{"points", 4}}}}}});
  const auto c6 = run_figure(6, cfg6, Exec::Par);
  CHECK(c6.size() == 6);  // NGE and GE per x value
}

TEST_CASE("sweep writing is resumable") {
  const fs::path dir = fs::temp_directory_path() / "qpn_test_sweep";
  fs::remove_all(dir);
  RunConfig cfg = config_from_preset("fig3", nlohmann::json{
      {"distribution", {{"x_qp_res", {1e-5}}}},
      {"sweep", {{"grid", {{"points", 6}}}}}});
  const Curve full = run_sweep(cfg, Exec::Serial);
  REQUIRE(full.rows.size() == 6);

  // write a truncated file first, then resume
  Curve partial = full;
  partial.rows.resize(2);
  CHECK(write_sweep_resumable(partial, dir.string()) == 2);
  CHECK(write_sweep_resumable(full, dir.string()) == 4);
  // resumed file equals a fresh full write
  const std::string resumed = read_file((dir / "sweep_quality-factor.csv").string());
  fs::remove_all(dir);
  fs::create_directories(dir);
  CHECK(write_sweep_resumable(full, dir.string()) == 6);
  CHECK(resumed == read_file((dir / "sweep_quality-factor.csv").string()));
  // a second run appends nothing
  CHECK(write_sweep_resumable(full, dir.string()) == 0);
  fs::remove_all(dir);
}

TEST_CASE("physics errors carry the curve identity") {
  // a flux sweep through the half-flux point trips the junction-inversion guard
  RunConfig cfg = config_from_preset(
      "fig6", nlohmann::json{{"sweep", {{"grid", {{"min", 0.1}, {"max", 0.9}, {"points", 5}}}}},
                             {"device", {{"phi_over_phi0", 0.5}}}});
  cfg.sweep->quantity = "flux-noise";
  cfg.sweep->grid.variable = "omega_over_2pi_MHz";
  cfg.sweep->grid.min = 1.0;
  cfg.sweep->grid.max = 10.0;
  try {
    run_sweep(cfg, Exec::Par);
    FAIL("expected a guarded failure");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("curve '") != std::string::npos);
  }
}

TEST_CASE("config echo reparses equal") {
  const fs::path dir = fs::temp_directory_path() / "qpn_test_echo";
  fs::remove_all(dir);
  const RunConfig cfg = config_from_preset("fig5");
  const std::string path = write_config_echo(cfg, dir.string());
  const RunConfig again = load_config(path);
  CHECK(cfg == again);
  fs::remove_all(dir);
}
