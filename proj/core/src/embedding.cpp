#include "phaserqa/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "phaserqa/error.hpp"

namespace phaserqa {

StateMatrix::StateMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kInvalidArgument, "state matrix data size does not match its shape");
  }
}

StateMatrix StateMatrix::from_columns(std::span<const TimeSeries> columns) {
  if (columns.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "at least one state column is required");
  }
  const std::size_t rows = columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != rows) {
      throw Error(ErrorCode::kInvalidArgument, "state columns must share one length");
    }
  }
  const std::size_t cols = columns.size();
  std::vector<double> data(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) data[r * cols + c] = columns[c][r];
  }
  return StateMatrix(rows, cols, std::move(data));
}

}  // namespace phaserqa

namespace phaserqa::embedding {
namespace {

void require_tau(std::size_t tau) {
  if (tau < 1) throw Error(ErrorCode::kInvalidArgument, "embedding delay must be at least 1");
}

struct Neighbour {
  std::size_t index;
  double distance;
};

// Exact nearest neighbour of every point i in [0, count) under the max norm
// over `dim` delay coordinates. Candidates are visited outward from i in the
// order of the first coordinate; the scan in one direction stops once the
// first-coordinate gap alone exceeds the best distance, which cannot discard
// a closer or equally close neighbour. Ties resolve to the smaller index.
std::vector<Neighbour> nearest_neighbours(std::span<const double> x, std::size_t count,
                                          std::size_t dim, std::size_t tau) {
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<std::size_t> rank(count);
  for (std::size_t r = 0; r < count; ++r) rank[order[r]] = r;

  std::vector<Neighbour> result(count);
  for (std::size_t i = 0; i < count; ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_j = count;

    auto consider = [&](std::size_t j) {
      double d = 0.0;
      for (std::size_t k = 0; k < dim; ++k) {
        d = std::max(d, std::abs(x[i + k * tau] - x[j + k * tau]));
        if (d > best) return;
      }
      if (d < best || (d == best && j < best_j)) {
        best = d;
        best_j = j;
      }
    };

    const std::size_t r = rank[i];
    for (std::size_t up = r + 1; up < count; ++up) {
      const std::size_t j = order[up];
      if (x[j] - x[i] > best) break;
      consider(j);
    }
    for (std::size_t down = r; down-- > 0;) {
      const std::size_t j = order[down];
      if (x[i] - x[j] > best) break;
      consider(j);
    }
    result[i] = {best_j, best};
  }
  return result;
}

}  // namespace

void EmbeddingParams::validate() const {
  if (dimension < 1) throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be >= 1");
  require_tau(delay);
}

std::size_t min_length_for(const EmbeddingParams& params) {
  return (params.dimension - 1) * params.delay + 1;
}

DelayEmbedding utde_embed(const TimeSeries& x, const EmbeddingParams& params) {
  return utde_embed(x.samples(), params);
}

DelayEmbedding utde_embed(std::span<const double> x, const EmbeddingParams& params) {
  params.validate();
  const std::size_t n = x.size();
  const std::size_t span = (params.dimension - 1) * params.delay;
  if (n <= span) {
    throw Error(ErrorCode::kInsufficientLength,
                "series of length " + std::to_string(n) + " is too short for m=" +
                    std::to_string(params.dimension) + ", tau=" + std::to_string(params.delay) +
                    "; need at least " + std::to_string(min_length_for(params)) + " samples");
  }
  const std::size_t rows = n - span;
  const std::size_t m = params.dimension;
  std::vector<double> data(rows * m);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < m; ++c) data[r * m + c] = x[r + c * params.delay];
  }
  return {StateMatrix(rows, m, std::move(data)), params, n};
}

CaoCurves cao_curves(const TimeSeries& x, std::size_t tau, std::size_t m_max) {
  return cao_curves(x.samples(), tau, m_max);
}

CaoCurves cao_curves(std::span<const double> x, std::size_t tau, std::size_t m_max) {
  require_tau(tau);
  if (m_max < 1) throw Error(ErrorCode::kInvalidArgument, "m_max must be at least 1");
  const std::size_t n = x.size();
  // E(m_max + 1) needs points in m_max + 2 delay coordinates.
  const std::size_t reach = (m_max + 1) * tau;
  if (n < reach + 2) {
    throw Error(ErrorCode::kInsufficientLength,
                "Cao statistics up to m=" + std::to_string(m_max) + " with tau=" +
                    std::to_string(tau) + " need at least " + std::to_string(reach + 2) +
                    " samples, got " + std::to_string(n));
  }

  CaoCurves out;
  out.tau_used = tau;
  for (std::size_t d = 1; d <= m_max + 1; ++d) {
    const std::size_t count = n - d * tau;
    const auto neighbours = nearest_neighbours(x, count, d, tau);
    double sum_a = 0.0;
    double sum_star = 0.0;
    std::size_t valid = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const auto& nb = neighbours[i];
      if (!(nb.distance > 0.0)) continue;
      const double extra = std::abs(x[i + d * tau] - x[nb.index + d * tau]);
      sum_a += std::max(nb.distance, extra) / nb.distance;
      sum_star += extra;
      ++valid;
    }
    if (valid == 0) {
      throw Error(ErrorCode::kData, "every point in dimension " + std::to_string(d) +
                                        " has a zero-distance neighbour");
    }
    out.e.push_back(sum_a / static_cast<double>(valid));
    out.e_star.push_back(sum_star / static_cast<double>(valid));
    out.skipped.push_back(count - valid);
  }

  for (std::size_t m = 0; m < m_max; ++m) {
    if (!(out.e_star[m] > 0.0)) {
      throw Error(ErrorCode::kData,
                  "E* vanished at dimension " + std::to_string(m + 1) + "; E2 is undefined");
    }
    out.e1.push_back(out.e[m + 1] / out.e[m]);
    out.e2.push_back(out.e_star[m + 1] / out.e_star[m]);
  }
  return out;
}

std::size_t select_min_dimension(const CaoCurves& curves, double plateau_band) {
  return select_min_dimension(curves.e1, plateau_band);
}

std::size_t select_min_dimension(std::span<const double> e1, double plateau_band) {
  if (e1.empty()) throw Error(ErrorCode::kInvalidArgument, "E1 curve is empty");
  if (!(plateau_band > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "plateau band must be positive");
  }
  std::size_t first_in_tail = e1.size();
  for (std::size_t k = e1.size(); k-- > 0;) {
    if (std::abs(e1[k] - 1.0) <= plateau_band) {
      first_in_tail = k;
    } else {
      break;
    }
  }
  if (first_in_tail == e1.size()) {
    throw Error(ErrorCode::kNoPlateau,
                "E1 does not settle within 1 +/- " + std::to_string(plateau_band) +
                    " up to m=" + std::to_string(e1.size()) + "; try a larger m_max");
  }
  return first_in_tail + 1;
}

AmiCurve ami_curve(const TimeSeries& x, std::size_t tau_max, std::size_t bins) {
  return ami_curve(x.samples(), tau_max, bins);
}

AmiCurve ami_curve(std::span<const double> x, std::size_t tau_max, std::size_t bins) {
  if (bins < 1) throw Error(ErrorCode::kInvalidArgument, "bin count must be positive");
  const std::size_t n = x.size();
  if (n < tau_max || n - tau_max < 2 * bins) {
    throw Error(ErrorCode::kInsufficientLength,
                "AMI up to tau=" + std::to_string(tau_max) + " with " + std::to_string(bins) +
                    " bins needs at least " + std::to_string(tau_max + 2 * bins) +
                    " samples, got " + std::to_string(n));
  }

  AmiCurve curve;
  curve.bins = bins;
  curve.values_bits.assign(tau_max + 1, 0.0);

  const auto [lo_it, hi_it] = std::minmax_element(x.begin(), x.end());
  const double lo = *lo_it;
  const double width = *hi_it - lo;
  if (!(width > 0.0)) {
    curve.degenerate = true;
    return curve;
  }

  std::vector<std::size_t> bin_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double scaled = (x[i] - lo) / width * static_cast<double>(bins);
    bin_of[i] = std::min(static_cast<std::size_t>(scaled), bins - 1);
  }

  std::vector<double> joint(bins * bins);
  std::vector<double> row(bins);
  std::vector<double> col(bins);
  for (std::size_t tau = 0; tau <= tau_max; ++tau) {
    std::fill(joint.begin(), joint.end(), 0.0);
    std::fill(row.begin(), row.end(), 0.0);
    std::fill(col.begin(), col.end(), 0.0);
    const std::size_t pairs = n - tau;
    for (std::size_t i = 0; i < pairs; ++i) {
      const std::size_t a = bin_of[i];
      const std::size_t b = bin_of[i + tau];
      joint[a * bins + b] += 1.0;
      row[a] += 1.0;
      col[b] += 1.0;
    }
    const double total = static_cast<double>(pairs);
    double info = 0.0;
    for (std::size_t a = 0; a < bins; ++a) {
      for (std::size_t b = 0; b < bins; ++b) {
        const double c = joint[a * bins + b];
        if (c == 0.0) continue;
        info += (c / total) * std::log2(c * total / (row[a] * col[b]));
      }
    }
    curve.values_bits[tau] = std::max(info, 0.0);
  }
  return curve;
}

LocalMinimum first_local_minimum(std::span<const double> values) {
  if (values.size() < 3) {
    throw Error(ErrorCode::kInvalidArgument, "local minimum search needs at least 3 values");
  }
  for (std::size_t tau = 1; tau + 1 < values.size(); ++tau) {
    if (values[tau] < values[tau - 1] && values[tau] <= values[tau + 1]) return {tau, false};
  }
  return {values.size() - 1, true};
}

LocalMinimum first_local_minimum(const AmiCurve& curve) {
  return first_local_minimum(curve.values_bits);
}

EmbeddingParams consensus_params(std::span<const EmbeddingParams> per_series) {
  if (per_series.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "consensus needs at least one parameter pair");
  }
  std::size_t sum_m = 0;
  std::size_t sum_tau = 0;
  for (const auto& p : per_series) {
    sum_m += p.dimension;
    sum_tau += p.delay;
  }
  const std::size_t k = per_series.size();
  // floor(sum / k + 1/2) in integers
  return {(2 * sum_m + k) / (2 * k), (2 * sum_tau + k) / (2 * k)};
}

EmbeddingParams estimate_params(const TimeSeries& x, const EstimateOptions& options) {
  const auto tau0 = first_local_minimum(ami_curve(x, options.tau_max, options.bins)).tau;
  const auto m0 = select_min_dimension(cao_curves(x, tau0, options.m_max), options.plateau_band);
  return {m0, tau0};
}

}  // namespace phaserqa::embedding
