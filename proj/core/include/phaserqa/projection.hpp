#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "phaserqa/embedding.hpp"

namespace phaserqa::projection {

/// Embedding rows projected on the leading principal axes.
struct Trajectory {
  std::size_t components = 3;
  /// Row-major, `components` values per point.
  std::vector<double> points;
  /// Leading covariance eigenvalues (N-1 denominator), nonincreasing.
  std::vector<double> explained_variance;
  /// Unit loading vectors, one per component, each of the input dimension.
  std::vector<std::vector<double>> loadings;
  /// Fewer than `components` directions carry variance; the rest are zero.
  bool rank_deficient = false;

  std::size_t size() const noexcept { return components == 0 ? 0 : points.size() / components; }
  double operator()(std::size_t i, std::size_t c) const { return points[i * components + c]; }
};

/// Mean-centres the columns and projects on the top-k eigenvectors of the
/// sample covariance. Each component's sign is chosen so that its largest
/// magnitude loading is positive (first such index on ties).
Trajectory pca_project(const StateMatrix& states, std::size_t k = 3);
Trajectory pca_project(const embedding::DelayEmbedding& emb, std::size_t k = 3);

}  // namespace phaserqa::projection
