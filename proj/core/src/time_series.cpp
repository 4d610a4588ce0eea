#include "phaserqa/time_series.hpp"

#include <cmath>
#include <utility>

#include "phaserqa/error.hpp"

namespace phaserqa {

TimeSeries::TimeSeries(std::vector<double> samples, double sample_rate_hz, std::string label)
    : samples_(std::move(samples)), sample_rate_hz_(sample_rate_hz), label_(std::move(label)) {
  if (samples_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "time series must contain at least one sample");
  }
  if (!(sample_rate_hz_ > 0.0) || !std::isfinite(sample_rate_hz_)) {
    throw Error(ErrorCode::kInvalidArgument, "sample rate must be a positive finite number");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i])) {
      throw Error(ErrorCode::kData, "non-finite sample at index " + std::to_string(i));
    }
  }
}

TimeSeries TimeSeries::with_samples(std::vector<double> samples) const {
  return TimeSeries(std::move(samples), sample_rate_hz_, label_);
}

}  // namespace phaserqa
