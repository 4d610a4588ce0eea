#include "phaserqa/preprocess.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "phaserqa/error.hpp"

namespace phaserqa::preprocess {
namespace {

// Pseudo-inverse of the Vandermonde design matrix on the scaled abscissa
// u = (k - half) / half, shape (p+1) x n. Row j maps samples to the j-th
// polynomial coefficient.
Eigen::MatrixXd design_pseudo_inverse(const SmoothingSpec& spec) {
  const auto n = static_cast<Eigen::Index>(spec.window_length);
  const auto cols = static_cast<Eigen::Index>(spec.poly_order + 1);
  const double half = static_cast<double>(spec.window_length / 2);
  const double scale = half > 0.0 ? half : 1.0;

  Eigen::MatrixXd design(n, cols);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double u = (static_cast<double>(k) - half) / scale;
    double power = 1.0;
    for (Eigen::Index j = 0; j < cols; ++j) {
      design(k, j) = power;
      power *= u;
    }
  }
  const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(n, n);
  return design.colPivHouseholderQr().solve(identity);
}

// d^deriv/du^deriv of u^j.
double monomial_derivative(std::size_t j, std::size_t deriv, double u) {
  if (deriv > j) return 0.0;
  double factor = 1.0;
  for (std::size_t k = 0; k < deriv; ++k) factor *= static_cast<double>(j - k);
  return factor * std::pow(u, static_cast<double>(j - deriv));
}

std::vector<double> weights_from(const Eigen::MatrixXd& pinv, const SmoothingSpec& spec,
                                 std::size_t position) {
  const double half = static_cast<double>(spec.window_length / 2);
  const double scale = half > 0.0 ? half : 1.0;
  const double u = (static_cast<double>(position) - half) / scale;
  // Chain rule from u back to sample units.
  const double chain = std::pow(scale, -static_cast<double>(spec.derivative_order));

  std::vector<double> w(spec.window_length, 0.0);
  for (std::size_t j = 0; j <= spec.poly_order; ++j) {
    const double basis = monomial_derivative(j, spec.derivative_order, u) * chain;
    if (basis == 0.0) continue;
    for (std::size_t k = 0; k < spec.window_length; ++k) {
      w[k] += basis * pinv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k));
    }
  }
  return w;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
  return acc;
}

}  // namespace

void SmoothingSpec::validate() const {
  if (poly_order < 1) {
    throw Error(ErrorCode::kInvalidArgument, "Savitzky-Golay polynomial order must be positive");
  }
  if (window_length % 2 == 0) {
    throw Error(ErrorCode::kInvalidArgument, "Savitzky-Golay window length must be odd");
  }
  if (window_length <= poly_order) {
    throw Error(ErrorCode::kInvalidArgument,
                "Savitzky-Golay window length must exceed the polynomial order");
  }
  if (derivative_order > poly_order) {
    throw Error(ErrorCode::kInvalidArgument,
                "Savitzky-Golay derivative order must not exceed the polynomial order");
  }
}

std::string_view to_string(SmoothnessLevel level) {
  switch (level) {
    case SmoothnessLevel::kSg0: return "sg0";
    case SmoothnessLevel::kSg1: return "sg1";
    case SmoothnessLevel::kSg2: return "sg2";
  }
  return "sg0";
}

SmoothnessLevel parse_smoothness(std::string_view text) {
  if (text == "sg0") return SmoothnessLevel::kSg0;
  if (text == "sg1") return SmoothnessLevel::kSg1;
  if (text == "sg2") return SmoothnessLevel::kSg2;
  throw Error(ErrorCode::kInvalidArgument, "unknown smoothness level '" + std::string(text) + "'");
}

std::optional<SmoothingSpec> smoothing_for(SmoothnessLevel level) {
  switch (level) {
    case SmoothnessLevel::kSg0: return std::nullopt;
    case SmoothnessLevel::kSg1: return SmoothingSpec{5, 29, 0};
    case SmoothnessLevel::kSg2: return SmoothingSpec{5, 159, 0};
  }
  return std::nullopt;
}

TimeSeries zmuv_normalize(const TimeSeries& x) {
  const auto s = x.samples();
  if (s.size() < 2) {
    throw Error(ErrorCode::kInsufficientLength, "normalisation needs at least 2 samples");
  }
  const double n = static_cast<double>(s.size());
  const double mean = std::accumulate(s.begin(), s.end(), 0.0) / n;
  double ss = 0.0;
  double magnitude = 0.0;
  for (double v : s) {
    ss += (v - mean) * (v - mean);
    magnitude = std::max(magnitude, std::abs(v));
  }
  const double sd = std::sqrt(ss / (n - 1.0));
  if (!(sd > 1e-14 * magnitude)) {
    throw Error(ErrorCode::kDegenerateVariance, "series has zero sample variance");
  }
  std::vector<double> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = (s[i] - mean) / sd;
  return x.with_samples(std::move(out));
}

std::vector<double> sg_coefficients(const SmoothingSpec& spec) {
  return sg_weights_at(spec, spec.window_length / 2);
}

std::vector<double> sg_weights_at(const SmoothingSpec& spec, std::size_t position) {
  spec.validate();
  if (position >= spec.window_length) {
    throw Error(ErrorCode::kOutOfBounds, "window position " + std::to_string(position) +
                                             " outside window of length " +
                                             std::to_string(spec.window_length));
  }
  return weights_from(design_pseudo_inverse(spec), spec, position);
}

TimeSeries sg_smooth(const TimeSeries& x, const SmoothingSpec& spec) {
  spec.validate();
  const auto s = x.samples();
  const std::size_t n = spec.window_length;
  if (s.size() < n) {
    throw Error(ErrorCode::kInsufficientLength, "series of length " + std::to_string(s.size()) +
                                                    " is shorter than the filter window " +
                                                    std::to_string(n));
  }
  const std::size_t half = n / 2;
  const Eigen::MatrixXd pinv = design_pseudo_inverse(spec);
  const std::vector<double> centre = weights_from(pinv, spec, half);

  std::vector<double> out(s.size());
  for (std::size_t i = half; i + half < s.size(); ++i) {
    out[i] = dot(centre, s.subspan(i - half, n));
  }
  const auto head = s.first(n);
  const auto tail = s.last(n);
  for (std::size_t pos = 0; pos < half; ++pos) {
    out[pos] = dot(weights_from(pinv, spec, pos), head);
    out[s.size() - n + half + 1 + pos] = dot(weights_from(pinv, spec, half + 1 + pos), tail);
  }
  return x.with_samples(std::move(out));
}

TimeSeries window_slice(const TimeSeries& x, const WindowSpec& w) {
  if (w.length_samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "window length must be positive");
  }
  if (w.offset_samples > x.size() || w.length_samples > x.size() - w.offset_samples) {
    throw Error(ErrorCode::kOutOfBounds,
                "window [" + std::to_string(w.offset_samples) + ", " +
                    std::to_string(w.offset_samples + w.length_samples) +
                    ") exceeds series length " + std::to_string(x.size()));
  }
  const auto first = x.values().begin() + static_cast<std::ptrdiff_t>(w.offset_samples);
  return x.with_samples(
      std::vector<double>(first, first + static_cast<std::ptrdiff_t>(w.length_samples)));
}

TimeSeries apply_smoothness(const TimeSeries& x, SmoothnessLevel level) {
  TimeSeries normalised = zmuv_normalize(x);
  if (const auto spec = smoothing_for(level)) return sg_smooth(normalised, *spec);
  return normalised;
}

}  // namespace phaserqa::preprocess
