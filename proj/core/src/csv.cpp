#include "phaserqa/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "phaserqa/error.hpp"

namespace phaserqa::csv {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t Table::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw Error(ErrorCode::kParse, "missing column '" + std::string(name) + "'");
}

bool Table::has_column(std::string_view name) const {
  for (const auto& h : header) {
    if (h == name) return true;
  }
  return false;
}

Table parse(std::istream& in, std::string_view source_name) {
  Table table;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    auto fields = split(content);
    if (!have_header) {
      table.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw Error(ErrorCode::kParse, std::string(source_name) + ":" + std::to_string(line_no) +
                                         ": expected " + std::to_string(table.header.size()) +
                                         " fields, found " + std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(line_no);
  }
  if (!have_header) {
    throw Error(ErrorCode::kParse, std::string(source_name) + ": no header row");
  }
  return table;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  return parse(in, path.string());
}

double parse_double(std::string_view text) {
  const auto t = trim(text);
  double value = 0.0;
  const char* first = t.data();
  if (!t.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::kParse, "not a finite number: '" + std::string(t) + "'");
  }
  return value;
}

long long parse_integer(std::string_view text) {
  const auto t = trim(text);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw Error(ErrorCode::kParse, "not an integer: '" + std::string(t) + "'");
  }
  return value;
}

std::vector<double> numeric_column(const Table& table, std::string_view name,
                                   std::string_view source_name) {
  std::size_t col = 0;
  try {
    col = table.column_index(name);
  } catch (const Error&) {
    throw Error(ErrorCode::kParse,
                std::string(source_name) + ": missing column '" + std::string(name) + "'");
  }
  std::vector<double> out;
  out.reserve(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    try {
      out.push_back(parse_double(table.rows[r][col]));
    } catch (const Error&) {
      throw Error(ErrorCode::kParse, std::string(source_name) + ":" +
                                         std::to_string(table.line_numbers[r]) + ": column '" +
                                         std::string(name) + "' holds non-numeric value '" +
                                         table.rows[r][col] + "'");
    }
  }
  return out;
}

TimeSeries load_series(const std::filesystem::path& path, std::string_view column,
                       double sample_rate_hz) {
  const auto table = read_file(path);
  auto values = numeric_column(table, column, path.string());
  if (values.empty()) throw Error(ErrorCode::kParse, path.string() + ": no data rows");
  return TimeSeries(std::move(values), sample_rate_hz, std::string(column));
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_series(std::ostream& out, const TimeSeries& x) {
  out << "index,value\n";
  for (std::size_t i = 0; i < x.size(); ++i) out << i << ',' << format_double(x[i]) << '\n';
}

}  // namespace phaserqa::csv
