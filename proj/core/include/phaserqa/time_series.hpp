#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace phaserqa {

/// Uniformly sampled scalar sequence. Construction validates that the
/// samples are non-empty and finite and that the sample rate is positive.
class TimeSeries {
 public:
  TimeSeries(std::vector<double> samples, double sample_rate_hz, std::string label = {});

  std::span<const double> samples() const noexcept { return samples_; }
  const std::vector<double>& values() const noexcept { return samples_; }
  double sample_rate_hz() const noexcept { return sample_rate_hz_; }
  const std::string& label() const noexcept { return label_; }

  std::size_t size() const noexcept { return samples_.size(); }
  double operator[](std::size_t i) const { return samples_[i]; }

  /// Same sample rate and label, new samples (validated again).
  TimeSeries with_samples(std::vector<double> samples) const;

 private:
  std::vector<double> samples_;
  double sample_rate_hz_;
  std::string label_;
};

}  // namespace phaserqa
