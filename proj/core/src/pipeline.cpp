#include "phaserqa/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "parallel.hpp"
#include "phaserqa/csv.hpp"
#include "phaserqa/error.hpp"

namespace phaserqa::pipeline {
namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string trim_copy(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  long long v = 0;
  try {
    v = csv::parse_integer(text);
  } catch (const Error&) {
    throw Error(ErrorCode::kParse, std::string(what) + " must be an integer, got '" +
                                       std::string(text) + "'");
  }
  if (v < 0) throw Error(ErrorCode::kParse, std::string(what) + " must not be negative");
  return static_cast<std::size_t>(v);
}

std::string csv_safe(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

}  // namespace

std::string_view to_string(Channel channel) {
  switch (channel) {
    case Channel::kAccX: return "AccX";
    case Channel::kAccY: return "AccY";
    case Channel::kAccZ: return "AccZ";
    case Channel::kGyroX: return "GyroX";
    case Channel::kGyroY: return "GyroY";
    case Channel::kGyroZ: return "GyroZ";
  }
  return "GyroZ";
}

Channel parse_channel(std::string_view text) {
  const auto t = lower(text);
  if (t == "accx") return Channel::kAccX;
  if (t == "accy") return Channel::kAccY;
  if (t == "accz") return Channel::kAccZ;
  if (t == "gyrox") return Channel::kGyroX;
  if (t == "gyroy") return Channel::kGyroY;
  if (t == "gyroz") return Channel::kGyroZ;
  throw Error(ErrorCode::kInvalidArgument, "unknown axis '" + std::string(text) + "'");
}

const std::string& ColumnSchema::name_of(Channel channel) const {
  switch (channel) {
    case Channel::kAccX: return acc_x;
    case Channel::kAccY: return acc_y;
    case Channel::kAccZ: return acc_z;
    case Channel::kGyroX: return gyro_x;
    case Channel::kGyroY: return gyro_y;
    case Channel::kGyroZ: return gyro_z;
  }
  return gyro_z;
}

const TimeSeries& ImuRecording::channel(Channel c) const {
  switch (c) {
    case Channel::kAccX: return accel[0];
    case Channel::kAccY: return accel[1];
    case Channel::kAccZ: return accel[2];
    case Channel::kGyroX: return gyro[0];
    case Channel::kGyroY: return gyro[1];
    case Channel::kGyroZ: return gyro[2];
  }
  return gyro[2];
}

ImuRecording load_recording(const std::filesystem::path& path, const ColumnSchema& schema,
                            double sample_rate_hz) {
  const auto table = csv::read_file(path);
  const auto source = path.string();
  if (table.rows.empty()) throw Error(ErrorCode::kParse, source + ": no data rows");
  auto load = [&](Channel c) {
    const auto& name = schema.name_of(c);
    return TimeSeries(csv::numeric_column(table, name, source), sample_rate_hz,
                      std::string(to_string(c)));
  };
  return ImuRecording{
      {load(Channel::kAccX), load(Channel::kAccY), load(Channel::kAccZ)},
      {load(Channel::kGyroX), load(Channel::kGyroY), load(Channel::kGyroZ)},
  };
}

std::string_view to_string(Activity activity) {
  switch (activity) {
    case Activity::kHN: return "HN";
    case Activity::kHF: return "HF";
    case Activity::kVN: return "VN";
    case Activity::kVF: return "VF";
  }
  return "HN";
}

Activity parse_activity(std::string_view text) {
  if (text == "HN") return Activity::kHN;
  if (text == "HF") return Activity::kHF;
  if (text == "VN") return Activity::kVN;
  if (text == "VF") return Activity::kVF;
  throw Error(ErrorCode::kInvalidArgument, "unknown activity '" + std::string(text) + "'");
}

Channel default_axis(Activity activity) {
  return activity == Activity::kHN || activity == Activity::kHF ? Channel::kGyroZ
                                                                : Channel::kGyroY;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  const auto table = csv::read_file(path);
  const auto base = path.parent_path();
  const auto c_path = table.column_index("path");
  const auto c_participant = table.column_index("participant");
  const auto c_sensor = table.column_index("sensor");
  const auto c_activity = table.column_index("activity");
  const auto c_axis = table.column_index("axis");
  const auto c_smooth = table.column_index("smoothness");
  const auto c_offset = table.column_index("window_offset");
  const auto c_length = table.column_index("window_length");

  std::vector<ManifestEntry> out;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    try {
      ManifestEntry e;
      e.path = row[c_path];
      const std::filesystem::path p(e.path);
      e.resolved = p.is_absolute() ? p : base / p;
      e.meta.participant = row[c_participant];
      e.meta.sensor = row[c_sensor];
      e.meta.activity = parse_activity(row[c_activity]);
      if (!row[c_axis].empty()) e.meta.axis = parse_channel(row[c_axis]);
      e.meta.smoothness = preprocess::parse_smoothness(row[c_smooth]);
      e.meta.window.offset_samples =
          row[c_offset].empty() ? 0 : parse_count(row[c_offset], "window_offset");
      e.meta.window.length_samples =
          row[c_length].empty() ? 0 : parse_count(row[c_length], "window_length");
      out.push_back(std::move(e));
    } catch (const Error& err) {
      throw Error(ErrorCode::kParse, path.string() + ":" + std::to_string(table.line_numbers[r]) +
                                         ": " + err.what());
    }
  }
  if (out.empty()) throw Error(ErrorCode::kParse, path.string() + ": manifest has no entries");
  return out;
}

AnalysisConfig parse_config(std::string_view text) {
  AnalysisConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto content = trim_copy(line);
    if (content.empty()) continue;
    const auto eq = content.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kParse,
                  "config line " + std::to_string(line_no) + ": expected key=value");
    }
    const auto key = trim_copy(std::string_view(content).substr(0, eq));
    const auto value = trim_copy(std::string_view(content).substr(eq + 1));
    try {
      if (key == "m") {
        cfg.params.dimension = parse_count(value, key);
      } else if (key == "tau") {
        cfg.params.delay = parse_count(value, key);
      } else if (key == "eps") {
        cfg.epsilon = csv::parse_double(value);
      } else if (key == "norm") {
        cfg.norm = rqa::parse_norm(value);
      } else if (key == "dmin") {
        cfg.d_min = parse_count(value, key);
      } else if (key == "bins") {
        cfg.estimate.bins = parse_count(value, key);
      } else if (key == "plateau") {
        cfg.estimate.plateau_band = csv::parse_double(value);
      } else if (key == "m_max") {
        cfg.estimate.m_max = parse_count(value, key);
      } else if (key == "tau_max") {
        cfg.estimate.tau_max = parse_count(value, key);
      } else if (key == "sample_rate") {
        cfg.sample_rate_hz = csv::parse_double(value);
      } else if (key == "threads") {
        cfg.threads = parse_count(value, key);
      } else if (key == "mode") {
        if (value == "fixed") {
          cfg.mode = Mode::kFixed;
        } else if (value == "estimate") {
          cfg.mode = Mode::kEstimate;
        } else {
          throw Error(ErrorCode::kParse, "mode must be 'fixed' or 'estimate'");
        }
      } else if (key == "col_acc_x") {
        cfg.schema.acc_x = value;
      } else if (key == "col_acc_y") {
        cfg.schema.acc_y = value;
      } else if (key == "col_acc_z") {
        cfg.schema.acc_z = value;
      } else if (key == "col_gyro_x") {
        cfg.schema.gyro_x = value;
      } else if (key == "col_gyro_y") {
        cfg.schema.gyro_y = value;
      } else if (key == "col_gyro_z") {
        cfg.schema.gyro_z = value;
      } else {
        throw Error(ErrorCode::kParse, "unknown key '" + key + "'");
      }
    } catch (const Error& err) {
      throw Error(ErrorCode::kParse,
                  "config line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  cfg.params.validate();
  if (!(cfg.epsilon > 0.0)) throw Error(ErrorCode::kParse, "config: eps must be positive");
  if (cfg.d_min < 1) throw Error(ErrorCode::kParse, "config: dmin must be at least 1");
  if (!(cfg.sample_rate_hz > 0.0)) {
    throw Error(ErrorCode::kParse, "config: sample_rate must be positive");
  }
  return cfg;
}

AnalysisConfig read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

TimeSeries prepare_series(const ImuRecording& recording, const SessionMeta& meta) {
  const auto& raw = recording.channel(meta.effective_axis());
  preprocess::WindowSpec window = meta.window;
  if (window.length_samples == 0) {
    if (window.offset_samples >= raw.size()) {
      throw Error(ErrorCode::kOutOfBounds, "window offset " +
                                               std::to_string(window.offset_samples) +
                                               " beyond series length " +
                                               std::to_string(raw.size()));
    }
    window.length_samples = raw.size() - window.offset_samples;
  }
  return preprocess::apply_smoothness(preprocess::window_slice(raw, window), meta.smoothness);
}

BatchResult run_batch(std::span<const ManifestEntry> manifest, const AnalysisConfig& config) {
  if (manifest.empty()) throw Error(ErrorCode::kInvalidArgument, "manifest is empty");
  BatchResult result;
  result.rows.resize(manifest.size());

  detail::parallel_for(manifest.size(), config.threads, [&](std::size_t i) {
    BatchRow& row = result.rows[i];
    row.entry = manifest[i];
    try {
      const auto recording =
          load_recording(manifest[i].resolved, config.schema, config.sample_rate_hz);
      const auto series = prepare_series(recording, manifest[i].meta);
      const auto params = config.mode == Mode::kFixed
                              ? config.params
                              : embedding::estimate_params(series, config.estimate);
      row.params = params;
      row.metrics = rqa::rqa_all(series, params, config.epsilon, config.norm, config.d_min);
    } catch (const std::exception& err) {
      row.metrics.reset();
      row.error = err.what();
    }
  });

  std::vector<embedding::EmbeddingParams> estimated;
  for (const auto& row : result.rows) {
    if (!row.error.empty()) ++result.failures;
    if (config.mode == Mode::kEstimate && row.params) estimated.push_back(*row.params);
  }
  if (!estimated.empty()) result.consensus = embedding::consensus_params(estimated);
  return result;
}

void write_batch_csv(std::ostream& out, const BatchResult& result, const AnalysisConfig& config) {
  out << "path,participant,sensor,activity,axis,smoothness,window_offset,window_length,"
         "m,tau,eps,norm,dmin,REC,DET,RATIO,ENT,error\n";
  const auto eps = csv::format_double(config.epsilon);
  const auto norm = std::string(rqa::to_string(config.norm));
  for (const auto& row : result.rows) {
    const auto& meta = row.entry.meta;
    out << row.entry.path << ',' << meta.participant << ',' << meta.sensor << ','
        << to_string(meta.activity) << ',' << to_string(meta.effective_axis()) << ','
        << preprocess::to_string(meta.smoothness) << ',' << meta.window.offset_samples << ','
        << meta.window.length_samples << ',';
    if (row.params) {
      out << row.params->dimension << ',' << row.params->delay << ',';
    } else {
      out << ",,";
    }
    out << eps << ',' << norm << ',' << config.d_min << ',';
    if (row.metrics) {
      const auto& m = *row.metrics;
      out << csv::format_double(m.rec) << ',' << csv::format_double(m.det) << ','
          << (m.ratio_defined ? csv::format_double(m.ratio) : std::string()) << ','
          << csv::format_double(m.ent) << ',';
    } else {
      out << ",,,,";
    }
    out << csv_safe(row.error) << '\n';
  }
  if (result.consensus) {
    out << "consensus,,,,,,,," << result.consensus->dimension << ',' << result.consensus->delay
        << ',' << eps << ',' << norm << ',' << config.d_min << ",,,,,\n";
  }
}

}  // namespace phaserqa::pipeline
