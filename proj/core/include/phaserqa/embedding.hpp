#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "phaserqa/time_series.hpp"

namespace phaserqa {

/// Dense row-major matrix of reconstructed states, one state per row.
class StateMatrix {
 public:
  StateMatrix() = default;
  StateMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(data_).subspan(r * cols_, cols_);
  }
  std::span<const double> data() const noexcept { return data_; }

  /// One column per series, no delays. All series must share a length.
  static StateMatrix from_columns(std::span<const TimeSeries> columns);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace phaserqa

namespace phaserqa::embedding {

struct EmbeddingParams {
  std::size_t dimension = 1;
  std::size_t delay = 1;

  void validate() const;
  friend bool operator==(const EmbeddingParams&, const EmbeddingParams&) = default;
};

/// Uniform time-delay embedding: N-(m-1)tau rows, m columns, entry
/// (r, c) = x[r + c*tau].
struct DelayEmbedding {
  StateMatrix states;
  EmbeddingParams params;
  std::size_t source_len = 0;

  std::size_t rows() const noexcept { return states.rows(); }
  std::size_t cols() const noexcept { return states.cols(); }
  double operator()(std::size_t r, std::size_t c) const { return states(r, c); }
};

DelayEmbedding utde_embed(const TimeSeries& x, const EmbeddingParams& params);
DelayEmbedding utde_embed(std::span<const double> x, const EmbeddingParams& params);

/// Smallest series length that yields at least one embedded row.
std::size_t min_length_for(const EmbeddingParams& params);

// Cao's averaged false-neighbour statistics.
//
// For dimension d the points are i = 0 .. N-d*tau-1; n(i, d) is the nearest
// other point under the maximum-coordinate-difference norm in d dimensions
// (ties go to the smaller index). Then
//   a(i, d)  = |X_i(d+1) - X_n(d+1)|_inf / |X_i(d) - X_n(d)|_inf
//   E(d)     = mean_i a(i, d)
//   E*(d)    = mean_i |x[i + d tau] - x[n + d tau]|
//   E1(m)    = E(m+1) / E(m),  E2(m) = E*(m+1) / E*(m)
// Points whose nearest neighbour sits at distance zero are skipped in both
// means; `skipped[d-1]` records how many.
struct CaoCurves {
  std::vector<double> e1;  // m = 1 .. m_max
  std::vector<double> e2;
  std::vector<double> e;       // d = 1 .. m_max+1
  std::vector<double> e_star;  // d = 1 .. m_max+1
  std::vector<std::size_t> skipped;
  std::size_t tau_used = 1;
};

CaoCurves cao_curves(const TimeSeries& x, std::size_t tau, std::size_t m_max);
CaoCurves cao_curves(std::span<const double> x, std::size_t tau, std::size_t m_max);

/// Smallest m (1-based) such that E1(k) stays within 1 +/- band for every
/// k >= m. Throws kNoPlateau when the tail never settles.
std::size_t select_min_dimension(const CaoCurves& curves, double plateau_band = 0.05);
std::size_t select_min_dimension(std::span<const double> e1, double plateau_band = 0.05);

/// Histogram average mutual information I(tau) in bits for tau = 0..tau_max.
/// Both coordinates share an equal-width grid over [min(x), max(x)].
struct AmiCurve {
  std::vector<double> values_bits;
  std::size_t bins = 16;
  bool degenerate = false;  // constant input; all values are zero
};

AmiCurve ami_curve(const TimeSeries& x, std::size_t tau_max, std::size_t bins = 16);
AmiCurve ami_curve(std::span<const double> x, std::size_t tau_max, std::size_t bins = 16);

struct LocalMinimum {
  std::size_t tau = 0;
  bool monotone = false;  // no interior minimum; tau is the last index
};

/// Smallest tau >= 1 with v[tau] < v[tau-1] and v[tau] <= v[tau+1].
LocalMinimum first_local_minimum(std::span<const double> values);
LocalMinimum first_local_minimum(const AmiCurve& curve);

/// Component-wise arithmetic mean rounded half up.
EmbeddingParams consensus_params(std::span<const EmbeddingParams> per_series);

struct EstimateOptions {
  std::size_t m_max = 12;
  std::size_t tau_max = 40;
  std::size_t bins = 16;
  double plateau_band = 0.05;
};

/// tau0 from the first AMI minimum, then m0 from Cao's E1 at tau0.
EmbeddingParams estimate_params(const TimeSeries& x, const EstimateOptions& options = {});

}  // namespace phaserqa::embedding
