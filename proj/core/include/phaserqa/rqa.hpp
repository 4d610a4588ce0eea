#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

#include "phaserqa/embedding.hpp"
#include "phaserqa/time_series.hpp"

namespace phaserqa::rqa {

enum class Norm { kEuclidean, kManhattan, kMaximum };

std::string_view to_string(Norm norm);
Norm parse_norm(std::string_view text);

double distance(std::span<const double> a, std::span<const double> b, Norm norm);

/// Symmetric boolean matrix with a fully recurrent line of identity.
/// bits(i, j) is set iff ||X(i) - X(j)|| <= epsilon.
class RecurrenceMatrix {
 public:
  /// Validates shape, symmetry and the line of identity.
  static RecurrenceMatrix from_bits(std::size_t size, std::vector<std::uint8_t> bits,
                                    double epsilon, Norm norm);

  std::size_t size() const noexcept { return size_; }
  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * size_ + j] != 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  double epsilon() const noexcept { return epsilon_; }
  Norm norm() const noexcept { return norm_; }

 private:
  friend class RecurrenceBuilder;
  RecurrenceMatrix(std::size_t size, std::vector<std::uint8_t> bits, double epsilon, Norm norm)
      : size_(size), bits_(std::move(bits)), epsilon_(epsilon), norm_(norm) {}

  std::size_t size_ = 0;
  std::vector<std::uint8_t> bits_;
  double epsilon_ = 0.0;
  Norm norm_ = Norm::kEuclidean;
};

RecurrenceMatrix recurrence_matrix(const StateMatrix& states, double epsilon,
                                   Norm norm = Norm::kEuclidean);
RecurrenceMatrix recurrence_matrix(const embedding::DelayEmbedding& emb, double epsilon,
                                   Norm norm = Norm::kEuclidean);

/// Maximal diagonal runs off the line of identity, both triangles counted.
struct DiagonalHistogram {
  std::map<std::size_t, std::size_t> counts;
  std::size_t d_min = 2;

  /// sum over l >= d_min of l * H_D(l)
  std::size_t points_on_lines() const;
  /// sum over l >= d_min of H_D(l)
  std::size_t line_count() const;
};

struct RqaMetrics {
  double rec = 0.0;
  double det = 0.0;
  double ratio = 0.0;  // NaN when rec == 0
  double ent = 0.0;    // nats
  bool ratio_defined = true;
  bool no_lines = false;  // no diagonal of length >= d_min; det = ent = 0
  DiagonalHistogram histogram;
};

/// Number of recurrent cells excluding the line of identity.
std::size_t recurrence_count(const RecurrenceMatrix& r);

double rec_rate(const RecurrenceMatrix& r);
DiagonalHistogram diagonal_histogram(const RecurrenceMatrix& r, std::size_t d_min = 2);
double det_rate(const RecurrenceMatrix& r, const DiagonalHistogram& hist);
double entropy(const DiagonalHistogram& hist);
/// det / rec; throws kUndefinedRatio when rec == 0.
double ratio(double rec, double det);
double ratio(const RqaMetrics& metrics);

RqaMetrics rqa_metrics(const RecurrenceMatrix& r, std::size_t d_min = 2);

RqaMetrics rqa_all(const TimeSeries& x, const embedding::EmbeddingParams& params, double epsilon,
                   Norm norm = Norm::kEuclidean, std::size_t d_min = 2);

/// start, start+step, ... up to stop inclusive. Each value is start + k*step
/// rounded to 12 significant digits; the last one is kept if it overshoots
/// stop by less than 1e-9 steps.
std::vector<double> linear_range(double start, double stop, double step);
std::vector<std::size_t> integer_range(std::size_t first, std::size_t last);

struct SweepGrid {
  std::vector<std::size_t> m_values;
  std::vector<std::size_t> tau_values;
  std::vector<double> eps_values;
  /// m-major, then tau, then eps. Empty optional marks an infeasible cell.
  std::vector<std::optional<RqaMetrics>> cells;

  const std::optional<RqaMetrics>& at(std::size_t mi, std::size_t ti, std::size_t ei) const {
    return cells[(mi * tau_values.size() + ti) * eps_values.size() + ei];
  }
};

struct SweepOptions {
  Norm norm = Norm::kEuclidean;
  std::size_t d_min = 2;
  std::size_t threads = 0;  // 0: hardware concurrency
};

SweepGrid sweep(const TimeSeries& x, std::span<const std::size_t> m_values,
                std::span<const std::size_t> tau_values, std::span<const double> eps_values,
                const SweepOptions& options = {});

/// Binary PGM (P5): 0 for a recurrence, 255 otherwise, matrix row 0 on the
/// bottom image row.
void write_pgm(const RecurrenceMatrix& r, std::ostream& out);

}  // namespace phaserqa::rqa
