#include <cmath>

#include <doctest.h>

#include "qpn/config.hpp"
#include "qpn/constants.hpp"
#include "qpn/errors.hpp"

using namespace qpn;
namespace k = constants;
using nlohmann::json;

TEST_CASE("fig3 preset carries the device-table defaults") {
  const RunConfig cfg = config_from_preset("fig3");
  CHECK(cfg.material.temperature_mK == 30.0);
  CHECK(cfg.material.lambda_nm == 50.0);
  CHECK(cfg.material.gap_GHz == 44.0);
  REQUIRE(cfg.device);
  CHECK(cfg.device->kind == "cpw");
  CHECK(cfg.device->cpw.z0_ohm == 50.0);
  REQUIRE(cfg.tls);
  CHECK(cfg.tls->p_surface == doctest::Approx(23e-4));
  CHECK(cfg.tls->p_bulk == doctest::Approx(0.9));
}

TEST_CASE("schema violations name the key") {
  SUBCASE("empty device block") {
    json j = {{"device", json::object()}};
    try {
      parse_config(j);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("kind") != std::string::npos);
    }
  }
  SUBCASE("negative temperature") {
    json j = {{"material", {{"temperature_mK", -3.0}}}};
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
  SUBCASE("unknown key is rejected") {
    json j = {{"material", {{"temperature_mk", 30.0}}}};  // wrong case
    try {
      parse_config(j);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find("temperature_mk") != std::string::npos);
    }
  }
  SUBCASE("bad distribution mode") {
    json j = {{"distribution", {{"mode", "hot"}}}};
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
  SUBCASE("empty grid rejected") {
    json j = {{"sweep",
               {{"quantity", "conductivity"},
                {"grid",
                 {{"variable", "omega_over_2pi_GHz"}, {"min", 1.0}, {"max", 2.0},
                  {"points", 1}, {"spacing", "log"}}}}}};
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
  SUBCASE("non-monotone grid rejected") {
    json j = {{"sweep",
               {{"quantity", "conductivity"},
                {"grid",
                 {{"variable", "omega_over_2pi_GHz"}, {"min", 5.0}, {"max", 2.0},
                  {"points", 10}, {"spacing", "log"}}}}}};
    CHECK_THROWS_AS(parse_config(j), ConfigError);
  }
}

TEST_CASE("round trip through the canonical serialization") {
  for (const char* name : {"fig2", "fig3", "fig4", "fig5", "fig6", "nbtin"}) {
    const RunConfig cfg = config_from_preset(name);
    const RunConfig again = parse_config(config_to_json(cfg));
    CHECK(cfg == again);
  }
}

TEST_CASE("preset override merge") {
  const RunConfig cfg =
      config_from_preset("fig3", json{{"material", {{"temperature_mK", 100.0}}}});
  CHECK(cfg.material.temperature_mK == 100.0);
  CHECK(cfg.material.lambda_nm == 50.0);  // untouched sibling
  REQUIRE(cfg.device);
  CHECK(cfg.device->cpw.z0_ohm == 50.0);
}

TEST_CASE("grid values") {
  GridSpec g{"omega_over_2pi_GHz", 2.0, 10.0, 5, "log"};
  const auto v = g.values();
  REQUIRE(v.size() == 5);
  CHECK(v.front() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(v.back() == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(v[1] / v[0] == doctest::Approx(v[2] / v[1]).epsilon(1e-12));
  GridSpec lin{"phi_over_phi0", 0.1, 0.4, 4, "linear"};
  const auto w = lin.values();
  CHECK(w[1] - w[0] == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("transmon assembly closes on its frequency") {
  const Material m = make_material(MaterialConfig{});
  const double omega0 = 2.0 * k::pi * 5e9;
  const Transmon t = make_transmon(TransmonConfig{}, m, omega0);
  CHECK(1.0 / std::sqrt(t.junction.lj * t.capacitance) ==
        doctest::Approx(omega0).epsilon(1e-12));
}

TEST_CASE("split transmon assembly honors the composite Lk override") {
  const Material m = make_material(MaterialConfig{});
  SplitTransmonConfig sc;
  sc.lk_nH = 1.6e-4;
  const SplitTransmon s = make_split_transmon(sc, m, 0.25);
  CHECK(split_transmon_lk(s, m) == doctest::Approx(1.6e-13).epsilon(1e-10));
}

TEST_CASE("tls amplitude precedence") {
  TlsConfig tc;
  tc.p_surface = 23e-4;
  tc.p_bulk = 0.9;
  tc.tan_delta_surface = 1e-3;
  tc.tan_delta_bulk = 1e-6;
  CHECK(tls_amplitude(tc) == doctest::Approx(3.2e-6).epsilon(1e-12));
  tc.q_total = 3e5;
  CHECK(tls_amplitude(tc) == doctest::Approx(1.0 / 3e5).epsilon(1e-14));
  tc.tan_delta_total = 2e-4;
  CHECK(tls_amplitude(tc) == doctest::Approx(2e-4).epsilon(1e-14));
}

TEST_CASE("nbtin preset is junction dominated") {
  const RunConfig cfg = config_from_preset("nbtin");
  const Material m = make_material(cfg.material);
  REQUIRE(cfg.device);
  const FluxQubit f = make_flux_qubit(cfg.device->flux_qubit, m);
  const double l = flux_qubit_total_inductance(f, m);
  CHECK(l / f.junction.lj > 0.95);  // L ~ LJ
  CHECK(l / f.junction.lj < 1.0);
}
