#include <cmath>

#include <doctest.h>

#include "qpn/conductivity.hpp"
#include "qpn/constants.hpp"

using namespace qpn;
namespace k = constants;

namespace {
Material mat_kt(double kt_over_gap) {
  return Material::from_lab_units(44.0, 50.0, 1.2, 2111.6669522811372 * kt_over_gap);
}
Material mat_30mk() { return Material::from_lab_units(44.0, 50.0, 1.2, 30.0); }
QpDistribution quasi(double x) {
  QpDistribution d;
  d.x_qp_res = x;
  return d;
}
}  // namespace

TEST_CASE("sigma1 frozen value in SI units") {
  // 30 mK aluminum, x = 1e-5 (thermal part negligible), 5 GHz
  const Material m = mat_30mk();
  const double s1 = sigma1_exact(quasi(1e-5), m, 2.0 * k::pi * 5e9);
  CHECK(s1 == doctest::Approx(3.7017293816924253e-4).epsilon(1e-7));
}

TEST_CASE("sigma1 exact vs closed form at kT = 0.1 gap") {
  const Material m = mat_kt(0.1);
  const QpDistribution d = quasi(1e-5);
  const double x = xqp_total(d, m);
  SUBCASE("hbar omega = kT sits 4.44% off") {
    const double w = m.kT() / k::hbar;
    const double exact = sigma1_exact(d, m, w);
    const double approx = sigma1_approx(x, m, w).value;
    CHECK(std::abs(approx - exact) / exact == doctest::Approx(0.044448).epsilon(2e-3));
  }
  SUBCASE("monotone decreasing in frequency") {
    double prev = infinity;
    for (int i = 0; i < 15; ++i) {
      const double r = 1e-2 * std::pow(10.0 / 1e-2, i / 14.0);
      const double v = sigma1_exact(d, m, r * m.kT() / k::hbar);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("sigma1 vanishes with no quasiparticles") {
  const Material cold = Material::from_lab_units(44.0, 50.0, 1.2, 1.0);
  CHECK(sigma1_exact(quasi(0.0), cold, 2.0 * k::pi * 5e9) == 0.0);
}

TEST_CASE("closed form within 5% of quadrature at kT = 0.05 gap, hw = 0.01 gap") {
  const Material m = mat_kt(0.05);
  const QpDistribution d = quasi(1e-5);
  const double w = 0.01 * m.gap / k::hbar;
  const double exact = sigma1_exact(d, m, w);
  const double approx = sigma1_approx(xqp_total(d, m), m, w).value;
  CHECK(std::abs(approx - exact) / exact < 0.05);
}

TEST_CASE("validity flag tracks the stated window") {
  const Material m = mat_kt(0.05);
  CHECK(sigma1_approx(1e-5, m, 0.05 * m.gap / k::hbar).valid);
  CHECK(!sigma1_approx(1e-5, m, 0.5 * m.gap / k::hbar).valid);
  const Material hot = mat_kt(0.2);
  CHECK(!sigma1_approx(1e-5, hot, 0.01 * hot.gap / k::hbar).valid);
}

TEST_CASE("low-frequency logarithmic form") {
  const Material m = mat_kt(0.1);
  const double kt = m.kT();
  SUBCASE("zero crossing of the bracket") {
    const double w0 = 4.0 * kt * std::exp(-k::euler_gamma) / k::hbar;
    CHECK(std::abs(sigma1_lowfreq(1e-5, m, w0)) < 1e-12);
  }
  SUBCASE("doubling omega lowers the bracket by ln 2") {
    const double amp = 0.5 / std::sqrt(k::pi) * 1e-5 * std::pow(2.0 * m.gap / kt, 1.5);
    const double w = 1e-3 * kt / k::hbar;
    CHECK(sigma1_lowfreq(1e-5, m, w) - sigma1_lowfreq(1e-5, m, 2.0 * w) ==
          doctest::Approx(amp * std::log(2.0)).epsilon(1e-12));
  }
  SUBCASE("matches the full closed form deep in its regime") {
    const double w = 0.01 * kt / k::hbar;
    CHECK(sigma1_lowfreq(1e-5, m, w) ==
          doctest::Approx(sigma1_approx(1e-5, m, w).value).epsilon(0.01));
  }
}

TEST_CASE("high-frequency power law") {
  const Material m = mat_kt(0.01);
  SUBCASE("normalization point") {
    CHECK(sigma1_highfreq(1e-5, m, 2.0 * m.gap / k::hbar) ==
          doctest::Approx(0.5e-5).epsilon(1e-12));
  }
  SUBCASE("-3/2 exponent") {
    const double w = 0.05 * m.gap / k::hbar;
    CHECK(sigma1_highfreq(1e-5, m, 4.0 * w) ==
          doctest::Approx(sigma1_highfreq(1e-5, m, w) / 8.0).epsilon(1e-12));
  }
  SUBCASE("within a few percent of quadrature at hw = 20 kT") {
    const double w = 20.0 * m.kT() / k::hbar;  // hw = 0.2 gap
    const double exact = sigma1_exact(quasi(1e-5), m, w);
    CHECK(std::abs(sigma1_highfreq(1e-5, m, w) - exact) / exact < 0.05);
  }
}

TEST_CASE("sigma2 against the reactive limit") {
  SUBCASE("hw = kT = 0.01 gap") {
    const Material m = mat_kt(0.01);
    const double w = 0.01 * m.gap / k::hbar;
    const double s2 = sigma2_exact(quasi(1e-5), m, w);
    CHECK(s2 == doctest::Approx(100.0 * k::pi).epsilon(0.001));
    CHECK(s2 * k::hbar * w / (k::pi * m.gap) ==
          doctest::Approx(0.999942315122383).epsilon(1e-5));
  }
  SUBCASE("hw = 0.1 gap near zero temperature") {
    const Material m = mat_kt(0.001);
    const double w = 0.1 * m.gap / k::hbar;
    const double s2 = sigma2_exact(quasi(0.0), m, w);
    CHECK(s2 == doctest::Approx(10.0 * k::pi).epsilon(0.02));
    CHECK(s2 * k::hbar * w / (k::pi * m.gap) ==
          doctest::Approx(0.999374706729375).epsilon(1e-4));
  }
  SUBCASE("occupation pinned at 1/2 annihilates the integrand") {
    const Material m = mat_kt(0.01);
    const double w = 0.01 * m.gap / k::hbar;
    CHECK(std::abs(sigma2_exact([](double) { return 0.5; }, m, w)) < 1e-9);
  }
}

TEST_CASE("reactive ratio window") {
  // sigma2 * hw/(pi gap) stays in [0.97, 1] for hw, kT <= 0.05 gap
  for (double kt : {0.01, 0.03, 0.05}) {
    const Material m = mat_kt(kt);
    for (double hwf : {0.005, 0.02, 0.05}) {
      const double w = hwf * m.gap / k::hbar;
      const double ratio =
          sigma2_exact(quasi(1e-5), m, w) * k::hbar * w / (k::pi * m.gap);
      CHECK(ratio >= 0.97);
      CHECK(ratio <= 1.0);
    }
  }
}

TEST_CASE("approximation envelope on the validity grid") {
  // |approx - exact|/exact <= 5% for hw, kT <= 0.1 gap (20 x 10 grid)
  double max_dev = 0.0;
  for (int j = 0; j < 10; ++j) {
    const double ktf = 0.01 * std::pow(10.0, j / 9.0);
    const Material m = mat_kt(ktf);
    const QpDistribution d = quasi(1e-5);
    const double x = xqp_total(d, m);
    for (int i = 0; i < 20; ++i) {
      const double hwf = 1e-3 * std::pow(100.0, i / 19.0);
      const double w = hwf * m.gap / k::hbar;
      const double exact = sigma1_exact(d, m, w);
      const double approx = sigma1_approx(x, m, w).value;
      max_dev = std::max(max_dev, std::abs(approx - exact) / exact);
    }
  }
  CHECK(max_dev <= 0.05);
  CHECK(max_dev > 0.03);  // the corner of the window really is the worst case
}

TEST_CASE("linearity in the quasiparticle fraction") {
  const Material m = mat_30mk();
  const double w = 2.0 * k::pi * 5e9;
  const double s1 = sigma1_exact(quasi(1e-7), m, w);
  const double s2 = sigma1_exact(quasi(2e-7), m, w);
  CHECK(s2 == doctest::Approx(2.0 * s1).epsilon(1e-8));
}

TEST_CASE("integrand assembly regression: factorized occupation difference") {
  // for the quasithermal law, n(E) - n(E+hw) = n(E)(1 - e^{-hw/kT}) exactly,
  // so the pairwise-difference assembly must match the factorized integral
  const Material m = mat_30mk();
  const QpDistribution d = quasi(1e-5);
  const double w = 2.0 * k::pi * 5e9;
  const double hw = k::hbar * w;
  const double direct = sigma1_exact(d, m, w);
  const double decay = 1.0 - std::exp(-hw / m.kT());
  const double gap = m.gap;
  auto factored_integrand = [&](double u) {
    const double E = gap * std::cosh(u);
    const double kernel =
        (E * (E + hw) + gap * gap) / std::sqrt((E + hw) * (E + hw) - gap * gap);
    return (2.0 / hw) * kernel * occupation(d, m, E) * decay;
  };
  const double umax = std::acosh(1.0 + 60.0 * m.kT() / gap);
  const double expanded = integrate_singular(factored_integrand, 0.0, umax);
  CHECK(expanded == doctest::Approx(direct).epsilon(1e-8));
}

TEST_CASE("thermal mode tracks the quasithermal law with n0 = 1") {
  // Fermi-Dirac differs from the pinned-chemical-potential exponential only
  // at order e^{-gap/kT}
  const Material m = mat_kt(0.1);
  QpDistribution thermal;
  thermal.mode = QpDistribution::Mode::thermal_equilibrium;
  const QpDistribution qt = quasi(0.0);  // thermal occupation only
  const double w = 0.5 * m.kT() / k::hbar;
  CHECK(sigma1_exact(thermal, m, w) ==
        doctest::Approx(sigma1_exact(qt, m, w)).epsilon(1e-4));
}

TEST_CASE("sigma2 converges close to the pair-breaking edge") {
  const Material m = mat_kt(0.01);
  const double w = 1.9 * m.gap / k::hbar;  // both endpoint singularities steep
  const double s2 = sigma2_exact(quasi(1e-5), m, w);
  CHECK(s2 > 0.0);
  CHECK(std::isfinite(s2));
  // suppressed relative to the small-frequency law by a known amount
  CHECK(s2 * k::hbar * w / (k::pi * m.gap) ==
        doctest::Approx(0.7020136870170047).epsilon(1e-5));
}

TEST_CASE("subgap domain enforcement") {
  const Material m = mat_30mk();
  CHECK_THROWS_AS(sigma1_exact(quasi(1e-5), m, 2.1 * m.gap / k::hbar), std::domain_error);
  CHECK_THROWS_AS(sigma2_exact(quasi(1e-5), m, 0.0), std::domain_error);
}

TEST_CASE("two call paths agree") {
  const Material m = mat_30mk();
  const QpDistribution d = quasi(1e-6);
  const double w = 2.0 * k::pi * 3e9;
  const double via_dist = sigma1_exact(d, m, w);
  const double via_fn =
      sigma1_exact([&](double E) { return occupation(d, m, E); }, m, w);
  CHECK(via_dist == doctest::Approx(via_fn).epsilon(1e-12));
}
