#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phaserqa/embedding.hpp"
#include "phaserqa/preprocess.hpp"
#include "phaserqa/rqa.hpp"
#include "phaserqa/time_series.hpp"

namespace phaserqa::pipeline {

enum class Channel { kAccX, kAccY, kAccZ, kGyroX, kGyroY, kGyroZ };

std::string_view to_string(Channel channel);
/// Accepts AccX..GyroZ (case-insensitive).
Channel parse_channel(std::string_view text);

/// CSV header names of the six channels.
struct ColumnSchema {
  std::string acc_x = "acc_x";
  std::string acc_y = "acc_y";
  std::string acc_z = "acc_z";
  std::string gyro_x = "gyro_x";
  std::string gyro_y = "gyro_y";
  std::string gyro_z = "gyro_z";

  const std::string& name_of(Channel channel) const;
};

/// Triaxial accelerometer and gyroscope channels of one sensor, all of one
/// length and one sample rate.
struct ImuRecording {
  std::array<TimeSeries, 3> accel;
  std::array<TimeSeries, 3> gyro;

  double sample_rate_hz() const noexcept { return accel[0].sample_rate_hz(); }
  std::size_t size() const noexcept { return accel[0].size(); }
  const TimeSeries& channel(Channel c) const;
};

ImuRecording load_recording(const std::filesystem::path& path, const ColumnSchema& schema = {},
                            double sample_rate_hz = 50.0);

enum class Activity { kHN, kHF, kVN, kVF };

std::string_view to_string(Activity activity);
Activity parse_activity(std::string_view text);

/// Horizontal movements use GyroZ, vertical movements GyroY.
Channel default_axis(Activity activity);

struct SessionMeta {
  std::string participant;
  std::string sensor;  // HS01, RS01, ...
  Activity activity = Activity::kHN;
  std::optional<Channel> axis;  // default_axis(activity) when unset
  preprocess::SmoothnessLevel smoothness = preprocess::SmoothnessLevel::kSg0;
  /// length 0 selects everything after the offset.
  preprocess::WindowSpec window;

  Channel effective_axis() const { return axis.value_or(default_axis(activity)); }
};

struct ManifestEntry {
  std::string path;  // as written in the manifest
  std::filesystem::path resolved;
  SessionMeta meta;
};

/// Columns: path, participant, sensor, activity, axis, smoothness,
/// window_offset, window_length. Relative paths resolve against the
/// manifest's directory.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

enum class Mode { kFixed, kEstimate };

struct AnalysisConfig {
  Mode mode = Mode::kFixed;
  embedding::EmbeddingParams params{6, 8};
  double epsilon = 1.0;
  rqa::Norm norm = rqa::Norm::kEuclidean;
  std::size_t d_min = 2;
  embedding::EstimateOptions estimate;
  double sample_rate_hz = 50.0;
  ColumnSchema schema;
  std::size_t threads = 0;  // 0: hardware concurrency
};

/// key=value lines; '#' starts a comment. Keys: m, tau, eps, norm, dmin,
/// bins, plateau, mode, m_max, tau_max, sample_rate, threads and the schema
/// keys col_acc_x .. col_gyro_z.
AnalysisConfig parse_config(std::string_view text);
AnalysisConfig read_config(const std::filesystem::path& path);

/// Axis selection, window, normalisation and smoothing for one entry.
TimeSeries prepare_series(const ImuRecording& recording, const SessionMeta& meta);

struct BatchRow {
  ManifestEntry entry;
  std::optional<embedding::EmbeddingParams> params;
  std::optional<rqa::RqaMetrics> metrics;
  std::string error;
};

struct BatchResult {
  std::vector<BatchRow> rows;  // manifest order
  std::optional<embedding::EmbeddingParams> consensus;
  std::size_t failures = 0;
};

BatchResult run_batch(std::span<const ManifestEntry> manifest, const AnalysisConfig& config);

void write_batch_csv(std::ostream& out, const BatchResult& result, const AnalysisConfig& config);

}  // namespace phaserqa::pipeline
