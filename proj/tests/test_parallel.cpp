#include <vector>

#include <doctest.h>

#include "qpn/conductivity.hpp"
#include "qpn/constants.hpp"
#include "qpn/parallel.hpp"

using namespace qpn;

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(257, 0);
  parallel_for(hits.size(), Exec::Par, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("serial reference and parallel kernel agree bitwise") {
  const Material m = Material::from_lab_units(44.0, 50.0, 1.2, 30.0);
  QpDistribution d;
  d.x_qp_res = 1e-5;
  const std::size_t n = 24;
  std::vector<double> serial(n), par(n);
  auto body = [&](std::vector<double>& out) {
    return [&m, &d, &out](std::size_t i) {
      const double w = 2.0 * constants::pi * (1e9 + 4e8 * static_cast<double>(i));
      out[i] = sigma1_exact(d, m, w);
    };
  };
  parallel_for(n, Exec::Serial, body(serial));
  parallel_for(n, Exec::Par, body(par));
  for (std::size_t i = 0; i < n; ++i) CHECK(serial[i] == par[i]);
}
