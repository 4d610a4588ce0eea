#include "phaserqa/rqa.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

#include "parallel.hpp"
#include "phaserqa/error.hpp"

namespace phaserqa::rqa {

// Builds matrices from already-validated inputs without re-checking symmetry.
class RecurrenceBuilder {
 public:
  // `dist` is a full size x size distance table; only the upper triangle is read.
  static RecurrenceMatrix from_distances(std::size_t size, std::span<const double> dist,
                                         double epsilon, Norm norm) {
    std::vector<std::uint8_t> bits(size * size, 0);
    for (std::size_t i = 0; i < size; ++i) {
      bits[i * size + i] = 1;
      for (std::size_t j = i + 1; j < size; ++j) {
        const std::uint8_t b = dist[i * size + j] <= epsilon ? 1 : 0;
        bits[i * size + j] = b;
        bits[j * size + i] = b;
      }
    }
    return RecurrenceMatrix(size, std::move(bits), epsilon, norm);
  }
};

namespace {

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorCode::kInvalidArgument, "recurrence threshold must be positive and finite");
  }
}

std::vector<double> distance_table(const StateMatrix& states, Norm norm) {
  const std::size_t n = states.rows();
  for (double v : states.data()) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kData, "non-finite entry in state matrix");
  }
  std::vector<double> dist(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = states.row(i);
    for (std::size_t j = i + 1; j < n; ++j) dist[i * n + j] = distance(a, states.row(j), norm);
  }
  return dist;
}

}  // namespace

std::string_view to_string(Norm norm) {
  switch (norm) {
    case Norm::kEuclidean: return "euclidean";
    case Norm::kManhattan: return "manhattan";
    case Norm::kMaximum: return "maximum";
  }
  return "euclidean";
}

Norm parse_norm(std::string_view text) {
  if (text == "euclidean") return Norm::kEuclidean;
  if (text == "manhattan") return Norm::kManhattan;
  if (text == "maximum") return Norm::kMaximum;
  throw Error(ErrorCode::kInvalidArgument, "unknown norm '" + std::string(text) + "'");
}

double distance(std::span<const double> a, std::span<const double> b, Norm norm) {
  double acc = 0.0;
  switch (norm) {
    case Norm::kEuclidean:
      for (std::size_t k = 0; k < a.size(); ++k) acc += (a[k] - b[k]) * (a[k] - b[k]);
      return std::sqrt(acc);
    case Norm::kManhattan:
      for (std::size_t k = 0; k < a.size(); ++k) acc += std::abs(a[k] - b[k]);
      return acc;
    case Norm::kMaximum:
      for (std::size_t k = 0; k < a.size(); ++k) acc = std::max(acc, std::abs(a[k] - b[k]));
      return acc;
  }
  return acc;
}

RecurrenceMatrix RecurrenceMatrix::from_bits(std::size_t size, std::vector<std::uint8_t> bits,
                                             double epsilon, Norm norm) {
  require_epsilon(epsilon);
  if (bits.size() != size * size) {
    throw Error(ErrorCode::kInvalidArgument, "recurrence bits do not form a square matrix");
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (bits[i * size + i] == 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "line of identity not recurrent at " + std::to_string(i));
    }
    for (std::size_t j = i + 1; j < size; ++j) {
      if ((bits[i * size + j] != 0) != (bits[j * size + i] != 0)) {
        throw Error(ErrorCode::kInvalidArgument, "recurrence bits are not symmetric at (" +
                                                     std::to_string(i) + ", " +
                                                     std::to_string(j) + ")");
      }
    }
  }
  for (auto& b : bits) b = b != 0 ? 1 : 0;
  return RecurrenceMatrix(size, std::move(bits), epsilon, norm);
}

RecurrenceMatrix recurrence_matrix(const StateMatrix& states, double epsilon, Norm norm) {
  require_epsilon(epsilon);
  if (states.rows() < 2) {
    throw Error(ErrorCode::kInsufficientLength, "recurrence matrix needs at least 2 states");
  }
  const auto dist = distance_table(states, norm);
  return RecurrenceBuilder::from_distances(states.rows(), dist, epsilon, norm);
}

RecurrenceMatrix recurrence_matrix(const embedding::DelayEmbedding& emb, double epsilon,
                                   Norm norm) {
  return recurrence_matrix(emb.states, epsilon, norm);
}

std::size_t DiagonalHistogram::points_on_lines() const {
  std::size_t total = 0;
  for (auto it = counts.lower_bound(d_min); it != counts.end(); ++it) total += it->first * it->second;
  return total;
}

std::size_t DiagonalHistogram::line_count() const {
  std::size_t total = 0;
  for (auto it = counts.lower_bound(d_min); it != counts.end(); ++it) total += it->second;
  return total;
}

std::size_t recurrence_count(const RecurrenceMatrix& r) {
  std::size_t upper = 0;
  const std::size_t n = r.size();
  const auto bits = r.bits();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) upper += bits[i * n + j];
  }
  return 2 * upper;
}

double rec_rate(const RecurrenceMatrix& r) {
  const std::size_t n = r.size();
  if (n < 2) throw Error(ErrorCode::kInsufficientLength, "REC needs a matrix of size >= 2");
  return static_cast<double>(recurrence_count(r)) / static_cast<double>(n * n - n);
}

DiagonalHistogram diagonal_histogram(const RecurrenceMatrix& r, std::size_t d_min) {
  if (d_min < 1) throw Error(ErrorCode::kInvalidArgument, "d_min must be at least 1");
  const std::size_t n = r.size();
  if (n < 2) {
    throw Error(ErrorCode::kInsufficientLength, "diagonal histogram needs a matrix of size >= 2");
  }
  DiagonalHistogram hist;
  hist.d_min = d_min;
  const auto bits = r.bits();
  // Upper triangle only; the mirrored run in the lower triangle adds the
  // same length once more.
  for (std::size_t k = 1; k < n; ++k) {
    std::size_t run = 0;
    for (std::size_t i = 0; i + k < n; ++i) {
      if (bits[i * n + i + k]) {
        ++run;
      } else if (run > 0) {
        hist.counts[run] += 2;
        run = 0;
      }
    }
    if (run > 0) hist.counts[run] += 2;
  }
  return hist;
}

double det_rate(const RecurrenceMatrix& r, const DiagonalHistogram& hist) {
  const std::size_t points = recurrence_count(r);
  if (points == 0) return 0.0;
  return static_cast<double>(hist.points_on_lines()) / static_cast<double>(points);
}

double entropy(const DiagonalHistogram& hist) {
  const std::size_t lines = hist.line_count();
  if (lines == 0) return 0.0;
  const double total = static_cast<double>(lines);
  double ent = 0.0;
  for (auto it = hist.counts.lower_bound(hist.d_min); it != hist.counts.end(); ++it) {
    if (it->second == 0) continue;
    const double p = static_cast<double>(it->second) / total;
    ent -= p * std::log(p);
  }
  return ent;
}

double ratio(double rec, double det) {
  if (!(rec > 0.0)) throw Error(ErrorCode::kUndefinedRatio, "RATIO is undefined when REC is 0");
  return det / rec;
}

double ratio(const RqaMetrics& metrics) { return ratio(metrics.rec, metrics.det); }

RqaMetrics rqa_metrics(const RecurrenceMatrix& r, std::size_t d_min) {
  RqaMetrics m;
  m.rec = rec_rate(r);
  m.histogram = diagonal_histogram(r, d_min);
  m.no_lines = m.histogram.line_count() == 0;
  m.det = det_rate(r, m.histogram);
  m.ent = entropy(m.histogram);
  if (m.rec > 0.0) {
    m.ratio = m.det / m.rec;
  } else {
    m.ratio = std::numeric_limits<double>::quiet_NaN();
    m.ratio_defined = false;
  }
  return m;
}

RqaMetrics rqa_all(const TimeSeries& x, const embedding::EmbeddingParams& params, double epsilon,
                   Norm norm, std::size_t d_min) {
  params.validate();
  const std::size_t needed = embedding::min_length_for(params) + 1;
  if (x.size() < needed) {
    throw Error(ErrorCode::kInsufficientLength,
                "series of length " + std::to_string(x.size()) + " yields fewer than 2 states for m=" +
                    std::to_string(params.dimension) + ", tau=" + std::to_string(params.delay) +
                    "; need at least " + std::to_string(needed) + " samples");
  }
  const auto emb = embedding::utde_embed(x, params);
  return rqa_metrics(recurrence_matrix(emb, epsilon, norm), d_min);
}

std::vector<double> linear_range(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
    throw Error(ErrorCode::kInvalidArgument, "invalid range: need start <= stop and step > 0");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    // Snap to 12 significant digits so 0.2 + 3 * 0.1 reads back as 0.5.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.12g", start + static_cast<double>(k) * step);
    out[k] = std::strtod(buf, nullptr);
  }
  return out;
}

std::vector<std::size_t> integer_range(std::size_t first, std::size_t last) {
  if (last < first) throw Error(ErrorCode::kInvalidArgument, "invalid range: last < first");
  std::vector<std::size_t> out;
  for (std::size_t v = first; v <= last; ++v) out.push_back(v);
  return out;
}

SweepGrid sweep(const TimeSeries& x, std::span<const std::size_t> m_values,
                std::span<const std::size_t> tau_values, std::span<const double> eps_values,
                const SweepOptions& options) {
  if (m_values.empty() || tau_values.empty() || eps_values.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "sweep ranges must be non-empty");
  }
  for (auto m : m_values) {
    if (m < 1) throw Error(ErrorCode::kInvalidArgument, "sweep dimension must be >= 1");
  }
  for (auto t : tau_values) {
    if (t < 1) throw Error(ErrorCode::kInvalidArgument, "sweep delay must be >= 1");
  }
  for (double e : eps_values) require_epsilon(e);
  if (options.d_min < 1) throw Error(ErrorCode::kInvalidArgument, "d_min must be at least 1");

  SweepGrid grid;
  grid.m_values.assign(m_values.begin(), m_values.end());
  grid.tau_values.assign(tau_values.begin(), tau_values.end());
  grid.eps_values.assign(eps_values.begin(), eps_values.end());
  grid.cells.resize(m_values.size() * tau_values.size() * eps_values.size());

  const std::size_t jobs = m_values.size() * tau_values.size();
  auto run_job = [&](std::size_t job) {
    const std::size_t mi = job / tau_values.size();
    const std::size_t ti = job % tau_values.size();
    const embedding::EmbeddingParams params{m_values[mi], tau_values[ti]};
    if (x.size() < embedding::min_length_for(params) + 1) return;  // infeasible
    const auto emb = embedding::utde_embed(x, params);
    const auto dist = distance_table(emb.states, options.norm);
    for (std::size_t ei = 0; ei < eps_values.size(); ++ei) {
      const auto r =
          RecurrenceBuilder::from_distances(emb.rows(), dist, eps_values[ei], options.norm);
      grid.cells[job * eps_values.size() + ei] = rqa_metrics(r, options.d_min);
    }
  };

  detail::parallel_for(jobs, options.threads, run_job);
  return grid;
}

void write_pgm(const RecurrenceMatrix& r, std::ostream& out) {
  const std::size_t n = r.size();
  out << "P5\n" << n << ' ' << n << "\n255\n";
  std::vector<char> line(n);
  for (std::size_t row = n; row-- > 0;) {
    for (std::size_t col = 0; col < n; ++col) {
      line[col] = static_cast<char>(r(row, col) ? 0 : 255);
    }
    out.write(line.data(), static_cast<std::streamsize>(n));
  }
}

}  // namespace phaserqa::rqa
