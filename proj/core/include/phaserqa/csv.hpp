#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "phaserqa/time_series.hpp"

namespace phaserqa::csv {

// Plain comma-separated text: one header row, no quoting, '.' decimal point.
// Blank lines and lines starting with '#' are ignored.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row

  /// Index of a header column; throws kParse naming the column if absent.
  std::size_t column_index(std::string_view name) const;
  bool has_column(std::string_view name) const;
};

Table parse(std::istream& in, std::string_view source_name = "<input>");
Table read_file(const std::filesystem::path& path);

/// Parses a column as doubles; a bad cell throws kParse with its line number.
std::vector<double> numeric_column(const Table& table, std::string_view name,
                                   std::string_view source_name = "<input>");

double parse_double(std::string_view text);
long long parse_integer(std::string_view text);

TimeSeries load_series(const std::filesystem::path& path, std::string_view column,
                       double sample_rate_hz = 1.0);

/// Shortest text that round-trips to the same double.
std::string format_double(double value);

/// "index,value" rows.
void write_series(std::ostream& out, const TimeSeries& x);

std::vector<std::string> split(std::string_view line, char sep = ',');

}  // namespace phaserqa::csv
