#include <doctest.h>

#include <chrono>
#include <cmath>

#include "qcarpet/eigenbasis.hpp"
#include "qcarpet/errors.hpp"
#include "qcarpet/evolution.hpp"

using namespace qcarpet;

namespace {
const WellConfig kWell = make_well(1.0);
const GaussianPacket kWide = make_packet(kWell, 0.25, 1.0 / (5.0 * kPi), 25.0 * kPi);
const ModeExpansion& modes() {
  static const ModeExpansion m = coeffs_quadrature(kWell, kWide, 128);
  return m;
}
}  // namespace

TEST_CASE("initial state is reproduced at the packet centre") {
  CHECK(std::abs(wavefunction_at(kWell, modes(), kWide.xbar, 0.0) -
                 packet_value(kWide, kWide.xbar)) < 1e-6);
}

TEST_CASE("full and mirror revival pointwise") {
  for (double x : {0.01, 0.2, 0.25, 0.5, 0.77, 0.99}) {
    const complex psi0 = wavefunction_at(kWell, modes(), x, 0.0);
    CHECK(std::abs(wavefunction_at(kWell, modes(), x, kWell.T) - psi0) < 1e-10);
    const complex mirror = -wavefunction_at(kWell, modes(), kWell.L - x, 0.0);
    CHECK(std::abs(wavefunction_at(kWell, modes(), x, kWell.T / 2) - mirror) < 1e-6);
  }
}

TEST_CASE("wavefunction vanishes outside the well") {
  CHECK(wavefunction_at(kWell, modes(), -0.1, 0.3) == complex(0.0));
  CHECK(wavefunction_at(kWell, modes(), 1.2, 0.3) == complex(0.0));
}

TEST_CASE("sampled and pointwise evaluation agree") {
  const Axis xs(0.0, 1.0, 257);
  const auto s = sample_wavefunction(kWell, modes(), xs, 0.37);
  for (std::size_t i = 0; i < xs.n; i += 16) {
    CHECK(std::abs(s.values[i] - wavefunction_at(kWell, modes(), xs.at(i), 0.37)) < 1e-12);
  }
}

TEST_CASE("carpet closes over one period and stays normalised") {
  const auto grid = SpaceTimeGrid::over_well(kWell, 512, 0.0, kWell.T, 512);
  const auto t0 = std::chrono::steady_clock::now();
  const CarpetField f = carpet(kWell, modes(), grid);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 5.0);
  double worst = 0.0;
  for (std::size_t ix = 0; ix < f.nx(); ++ix) {
    worst = std::max(worst, std::abs(f.at(ix, 511) - f.at(ix, 0)));
  }
  CHECK(worst < 1e-8);
  for (std::size_t it : {0u, 100u, 333u}) {
    double s = 0.0;
    const auto col = f.column(it);
    for (std::size_t i = 0; i < col.size(); ++i) {
      s += col[i] * ((i == 0 || i + 1 == col.size()) ? 0.5 : 1.0);
    }
    CHECK(s * grid.x.step() == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("distance and fidelity") {
  const Axis xs(0.0, 1.0, 2048);
  const auto a = sample_wavefunction(kWell, modes(), xs, 0.0);
  const auto b = sample_wavefunction(kWell, modes(), xs, kWell.T);
  CHECK(l2_distance(a, b) < 1e-6);

  const auto half = sample_wavefunction(kWell, modes(), xs, kWell.T / 2);
  SampledState mirror{xs, {}};
  for (std::size_t i = 0; i < xs.n; ++i) {
    mirror.values.push_back(wavefunction_at(kWell, modes(), kWell.L - xs.at(i), 0.0));
  }
  CHECK(std::abs(fidelity(half, mirror) - 1.0) < 1e-8);

  SampledState phased = a;
  for (auto& v : phased.values) v *= std::polar(1.0, 0.7);
  CHECK(fidelity(a, phased) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::norm(inner_product(a, a)) == doctest::Approx(1.0).epsilon(1e-6));

  SampledState other{Axis(0.0, 1.0, 16), std::vector<complex>(16)};
  CHECK_THROWS_AS(l2_distance(a, other), InvalidParameter);
  SampledState zero{xs, std::vector<complex>(xs.n)};
  CHECK_THROWS_AS(fidelity(a, zero), InvalidParameter);
}
