#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "phaserqa/time_series.hpp"

namespace phaserqa::preprocess {

/// Savitzky-Golay filter parameters: polynomial order, odd window length and
/// derivative order. Invariants are checked by `validate`.
struct SmoothingSpec {
  std::size_t poly_order = 5;
  std::size_t window_length = 29;
  std::size_t derivative_order = 0;

  void validate() const;
};

struct WindowSpec {
  std::size_t length_samples = 0;
  std::size_t offset_samples = 0;
};

enum class SmoothnessLevel { kSg0, kSg1, kSg2 };

std::string_view to_string(SmoothnessLevel level);
SmoothnessLevel parse_smoothness(std::string_view text);

/// Filter used by each smoothness level; sg0 has none.
std::optional<SmoothingSpec> smoothing_for(SmoothnessLevel level);

/// (x - mean) / std with the N-1 sample standard deviation.
TimeSeries zmuv_normalize(const TimeSeries& x);

/// Convolution weights that evaluate the derivative_order-th derivative of the
/// least-squares polynomial at the window centre. Derivatives are per sample.
std::vector<double> sg_coefficients(const SmoothingSpec& spec);

/// Weights for evaluating the fitted polynomial at window position
/// `position` (0 .. window_length-1). Position window_length/2 gives
/// sg_coefficients.
std::vector<double> sg_weights_at(const SmoothingSpec& spec, std::size_t position);

/// Same-length Savitzky-Golay output. Interior samples use the centred
/// convolution; the first and last half-window samples are evaluated on the
/// polynomial fitted to the first or last full window.
TimeSeries sg_smooth(const TimeSeries& x, const SmoothingSpec& spec);

TimeSeries window_slice(const TimeSeries& x, const WindowSpec& w);

/// Normalisation first, then the level's filter (if any).
TimeSeries apply_smoothness(const TimeSeries& x, SmoothnessLevel level);

}  // namespace phaserqa::preprocess
