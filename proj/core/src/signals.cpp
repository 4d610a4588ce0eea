#include "phaserqa/signals.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "phaserqa/error.hpp"
#include "phaserqa/prng.hpp"

namespace phaserqa::signals {
namespace {

using State = std::array<double, 3>;

void require_samples(std::size_t n_samples) {
  if (n_samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "n_samples must be at least 1");
  }
}

State lorenz_rhs(const LorenzParams& p, const State& s) {
  return {p.sigma * (s[1] - s[0]), s[0] * (p.rho - s[2]) - s[1], s[0] * s[1] - p.beta * s[2]};
}

State axpy(const State& s, double h, const State& k) {
  return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2]};
}

State rk4_step(const LorenzParams& p, const State& s) {
  const double h = p.dt;
  const State k1 = lorenz_rhs(p, s);
  const State k2 = lorenz_rhs(p, axpy(s, 0.5 * h, k1));
  const State k3 = lorenz_rhs(p, axpy(s, 0.5 * h, k2));
  const State k4 = lorenz_rhs(p, axpy(s, h, k3));
  State next;
  for (std::size_t c = 0; c < 3; ++c) {
    next[c] = s[c] + (h / 6.0) * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
  }
  return next;
}

}  // namespace

LorenzStates gen_lorenz(const LorenzParams& params, std::size_t n_samples) {
  require_samples(n_samples);
  if (!(params.dt > 0.0) || !std::isfinite(params.dt)) {
    throw Error(ErrorCode::kInvalidArgument, "Lorenz dt must be positive");
  }

  State state = params.initial_state;
  std::vector<double> xs, ys, zs;
  xs.reserve(n_samples);
  ys.reserve(n_samples);
  zs.reserve(n_samples);

  const std::size_t total = params.transient_steps + n_samples;
  for (std::size_t step = 0; step < total; ++step) {
    if (step >= params.transient_steps) {
      xs.push_back(state[0]);
      ys.push_back(state[1]);
      zs.push_back(state[2]);
    }
    if (step + 1 == total) break;
    state = rk4_step(params, state);
    if (!std::isfinite(state[0]) || !std::isfinite(state[1]) || !std::isfinite(state[2])) {
      throw Error(ErrorCode::kIntegrationDivergence,
                  "non-finite Lorenz state at step " + std::to_string(step + 1));
    }
  }

  const double rate = 1.0 / params.dt;
  return {TimeSeries(std::move(xs), rate, "lorenz_x"), TimeSeries(std::move(ys), rate, "lorenz_y"),
          TimeSeries(std::move(zs), rate, "lorenz_z")};
}

TimeSeries gen_lorenz_x(const LorenzParams& params, std::size_t n_samples) {
  return gen_lorenz(params, n_samples).x;
}

TimeSeries gen_gaussian_noise(std::uint64_t seed, std::size_t n_samples) {
  require_samples(n_samples);
  NormalStream normal(seed);
  std::vector<double> out(n_samples);
  for (auto& v : out) v = normal.next();
  return TimeSeries(std::move(out), 1.0, "noise");
}

TimeSeries gen_harmonic(std::size_t n_samples) {
  require_samples(n_samples);
  std::vector<double> out(n_samples);
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double t = static_cast<double>(i);
    out[i] = std::sin(t / 5.0) * std::sin(5.0 * t / 100.0);
  }
  return TimeSeries(std::move(out), 1.0, "harmonic");
}

TimeSeries gen_logistic_drift(double x0, std::size_t n_samples) {
  require_samples(n_samples);
  if (!(x0 > 0.0 && x0 < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "logistic x0 must lie in the open interval (0, 1)");
  }
  std::vector<double> out(n_samples);
  double y = x0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    out[i] = y + 0.01 * static_cast<double>(i);
    y = 4.0 * y * (1.0 - y);
  }
  return TimeSeries(std::move(out), 1.0, "logistic");
}

TimeSeries gen_brownian(std::uint64_t seed, std::size_t n_samples) {
  require_samples(n_samples);
  NormalStream normal(seed);
  std::vector<double> out(n_samples);
  out[0] = 0.0;
  for (std::size_t i = 1; i < n_samples; ++i) out[i] = out[i - 1] + 2.0 * normal.next();
  return TimeSeries(std::move(out), 1.0, "brownian");
}

}  // namespace phaserqa::signals
