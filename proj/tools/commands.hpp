#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace phaserqa::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct GenerateOptions {
  std::string system;
  std::size_t n = 5000;
  std::uint64_t seed = 1;
  double x0 = 0.4;
  double dt = 0.01;
  std::size_t transient = 1000;
  bool states = false;
  std::string out;
};

struct PreprocessOptions {
  std::string in;
  std::string column = "value";
  std::string smooth = "sg0";
  std::size_t window_offset = 0;
  std::size_t window_length = 0;
  std::string out;
};

struct EmbedParamsOptions {
  std::string in;
  std::string column = "value";
  std::size_t m_max = 12;
  std::size_t tau_max = 40;
  std::size_t bins = 16;
  double plateau = 0.05;
  std::string cao_tau = "1:20";
  std::string out;
};

struct RqaOptions {
  std::vector<std::string> in;
  std::string column = "value";
  std::size_t m = 6;
  std::size_t tau = 8;
  double eps = 1.0;
  std::string norm = "euclidean";
  std::size_t dmin = 2;
  std::string out;
};

struct SweepOptions {
  std::string in;
  std::string column = "value";
  std::string m = "1:10";
  std::string tau = "1:10";
  std::string eps = "0.2:3.0:0.1";
  std::string norm = "euclidean";
  std::size_t dmin = 2;
  std::size_t threads = 0;
  std::string out;
};

struct RpExportOptions {
  std::string in;
  std::string column = "value";
  std::vector<std::string> columns;
  std::size_t m = 6;
  std::size_t tau = 8;
  double eps = 1.0;
  std::string norm = "euclidean";
  std::string out;
};

struct RssOptions {
  std::string in;
  std::string column = "value";
  std::size_t m = 6;
  std::size_t tau = 8;
  std::string out;
};

struct BatchOptions {
  std::string manifest;
  std::string config;
  std::string out;
  std::size_t threads = 0;
};

int run_generate(const GenerateOptions& o);
int run_preprocess(const PreprocessOptions& o);
int run_embed_params(const EmbedParamsOptions& o);
int run_rqa(const RqaOptions& o);
int run_sweep(const SweepOptions& o);
int run_rp_export(const RpExportOptions& o);
int run_rss(const RssOptions& o);
int run_batch(const BatchOptions& o);

/// "a:b" inclusive integer range (or a single value).
std::vector<std::size_t> parse_int_range(const std::string& text);
/// "start:stop:step" (or a single value).
std::vector<double> parse_real_range(const std::string& text);

}  // namespace phaserqa::cli
