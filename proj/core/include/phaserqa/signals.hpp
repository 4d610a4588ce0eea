#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "phaserqa/time_series.hpp"

// Deterministic reference signals. Every generator is a pure function of its
// arguments. Discrete-time generators use the sample index i = 0, 1, ... as
// time and report a nominal sample rate of 1 Hz.
namespace phaserqa::signals {

struct LorenzParams {
  double rho = 28.0;
  double sigma = 10.0;
  double beta = 8.0 / 3.0;
  double dt = 0.01;
  std::size_t transient_steps = 1000;
  std::array<double, 3> initial_state{1.0, 1.0, 1.0};
};

struct LorenzStates {
  TimeSeries x;
  TimeSeries y;
  TimeSeries z;
};

/// Integrates the Lorenz system with classical fixed-step RK4, discards
/// `transient_steps`, then records one sample per step. The sample rate is
/// 1/dt.
LorenzStates gen_lorenz(const LorenzParams& params, std::size_t n_samples);
TimeSeries gen_lorenz_x(const LorenzParams& params, std::size_t n_samples);

/// iid N(0, 1) samples from NormalStream(seed).
TimeSeries gen_gaussian_noise(std::uint64_t seed, std::size_t n_samples);

/// sin(t / 5) * sin(5 t / 100) with t = i.
TimeSeries gen_harmonic(std::size_t n_samples);

/// y_0 = x0, y_{i+1} = 4 y_i (1 - y_i); emits y_i + 0.01 i. Requires 0 < x0 < 1.
TimeSeries gen_logistic_drift(double x0, std::size_t n_samples);

/// x_0 = 0, x_{i+1} = x_i + 2 z_i where z is NormalStream(seed).
TimeSeries gen_brownian(std::uint64_t seed, std::size_t n_samples);

}  // namespace phaserqa::signals
