#include <doctest.h>

#include <cmath>
#include <numeric>

#include "phaserqa/embedding.hpp"
#include "phaserqa/error.hpp"
#include "phaserqa/prng.hpp"
#include "phaserqa/signals.hpp"

using namespace phaserqa;
using namespace phaserqa::signals;

TEST_CASE("SplitMix64 reference vectors") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("uniform deviates lie in (0, 1]") {
  SplitMix64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.next_unit_open_closed();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
  }
}

TEST_CASE("gaussian noise moments") {
  const auto x = gen_gaussian_noise(1, 5000);
  const auto s = x.samples();
  const double mean = std::accumulate(s.begin(), s.end(), 0.0) / 5000.0;
  double ss = 0.0;
  for (double v : s) ss += (v - mean) * (v - mean);
  const double var = ss / 4999.0;
  CHECK(std::abs(mean) <= 0.05);
  CHECK(std::abs(var - 1.0) <= 0.1);
}

TEST_CASE("generators are deterministic") {
  CHECK(gen_gaussian_noise(1, 300).values() == gen_gaussian_noise(1, 300).values());
  CHECK(gen_gaussian_noise(1, 300).values() != gen_gaussian_noise(2, 300).values());
  CHECK(gen_brownian(9, 300).values() == gen_brownian(9, 300).values());
  CHECK(gen_lorenz_x({}, 500).values() == gen_lorenz_x({}, 500).values());
  CHECK(gen_logistic_drift(0.3, 100).values() == gen_logistic_drift(0.3, 100).values());
}

TEST_CASE("zero sample count is rejected") {
  CHECK_THROWS_AS(gen_gaussian_noise(1, 0), Error);
  CHECK_THROWS_AS(gen_harmonic(0), Error);
  CHECK_THROWS_AS(gen_brownian(1, 0), Error);
  CHECK_THROWS_AS(gen_lorenz_x({}, 0), Error);
  CHECK_THROWS_AS(gen_logistic_drift(0.5, 0), Error);
}

TEST_CASE("Lorenz with a zero vector field stays at the initial x") {
  LorenzParams p;
  p.rho = 0.0;
  p.sigma = 0.0;
  p.beta = 0.0;
  p.initial_state = {2.5, -1.0, 3.0};
  const auto x = gen_lorenz_x(p, 200);
  for (double v : x.samples()) CHECK(v == 2.5);
}

TEST_CASE("Lorenz sample rate is 1/dt and the series is not constant") {
  const auto x = gen_lorenz_x({}, 1000);
  CHECK(x.sample_rate_hz() == doctest::Approx(100.0));
  const auto [lo, hi] = std::minmax_element(x.samples().begin(), x.samples().end());
  CHECK(*hi - *lo > 10.0);
}

TEST_CASE("Lorenz divergence names the step") {
  LorenzParams p;
  p.dt = 10.0;
  try {
    gen_lorenz_x(p, 1000);
    FAIL("expected divergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIntegrationDivergence);
    CHECK(std::string(e.what()).find("step") != std::string::npos);
  }
}

TEST_CASE("harmonic oscillation") {
  const auto x = gen_harmonic(2000);
  CHECK(x[0] == 0.0);
  CHECK(x[7] == doctest::Approx(std::sin(7.0 / 5.0) * std::sin(0.35)));
  for (double v : x.samples()) {
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
  }
}

TEST_CASE("logistic drift") {
  const auto x = gen_logistic_drift(0.5, 4);
  CHECK(x[0] == 0.5);
  CHECK(x[1] == doctest::Approx(1.01).epsilon(1e-15));
  CHECK(x[2] == doctest::Approx(0.02).epsilon(1e-15));
  CHECK_THROWS_AS(gen_logistic_drift(0.0, 10), Error);
  CHECK_THROWS_AS(gen_logistic_drift(1.0, 10), Error);
  CHECK_THROWS_AS(gen_logistic_drift(-0.2, 10), Error);
}

TEST_CASE("brownian increments reproduce the normal stream") {
  const auto x = gen_brownian(17, 400);
  NormalStream normal(17);
  CHECK(x[0] == 0.0);
  for (std::size_t i = 1; i < x.size(); ++i) {
    CHECK((x[i] - x[i - 1]) / 2.0 == doctest::Approx(normal.next()).epsilon(1e-12));
  }
}

TEST_CASE("Lorenz deviates from E2 = 1 while noise stays near 1") {
  const auto lorenz = embedding::cao_curves(gen_lorenz_x({}, 3000), 5, 8);
  const auto noise = embedding::cao_curves(gen_gaussian_noise(1, 3000), 1, 8);
  double max_dev_lorenz = 0.0;
  for (double v : lorenz.e2) max_dev_lorenz = std::max(max_dev_lorenz, std::abs(v - 1.0));
  CHECK(max_dev_lorenz > 0.1);
  for (double v : noise.e2) {
    CHECK(v >= 0.9);
    CHECK(v <= 1.1);
  }
}
