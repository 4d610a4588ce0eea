#include "phaserqa/projection.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "phaserqa/error.hpp"

namespace phaserqa::projection {

Trajectory pca_project(const StateMatrix& states, std::size_t k) {
  const std::size_t rows = states.rows();
  const std::size_t cols = states.cols();
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "projection needs k >= 1");
  if (rows < k || cols < k) {
    throw Error(ErrorCode::kInsufficientLength,
                "projection to " + std::to_string(k) + " components needs at least " +
                    std::to_string(k) + " rows and columns, got " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
  if (rows < 2) throw Error(ErrorCode::kInsufficientLength, "projection needs at least 2 rows");

  using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const Eigen::Map<const RowMajor> input(states.data().data(), static_cast<Eigen::Index>(rows),
                                         static_cast<Eigen::Index>(cols));
  const Eigen::MatrixXd centred = input.rowwise() - input.colwise().mean();
  const Eigen::MatrixXd cov =
      (centred.transpose() * centred) / static_cast<double>(rows - 1);

  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kData, "covariance eigendecomposition failed");
  }
  // Eigen returns ascending eigenvalues.
  std::vector<Eigen::Index> order(cols);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return solver.eigenvalues()(a) > solver.eigenvalues()(b);
  });

  const double scale = std::max(std::abs(solver.eigenvalues().maxCoeff()), 1.0);
  const double zero_tol = 1e-12 * scale * static_cast<double>(cols);

  Trajectory out;
  out.components = k;
  out.points.assign(rows * k, 0.0);
  for (std::size_t c = 0; c < k; ++c) {
    const Eigen::Index idx = order[c];
    const double lambda = solver.eigenvalues()(idx);
    Eigen::VectorXd v = solver.eigenvectors().col(idx);

    Eigen::Index lead = 0;
    for (Eigen::Index i = 1; i < v.size(); ++i) {
      if (std::abs(v(i)) > std::abs(v(lead))) lead = i;
    }
    if (v(lead) < 0.0) v = -v;
    out.loadings.emplace_back(v.data(), v.data() + v.size());

    if (lambda <= zero_tol) {
      out.rank_deficient = true;
      out.explained_variance.push_back(0.0);
      continue;
    }
    out.explained_variance.push_back(lambda);
    const Eigen::VectorXd scores = centred * v;
    for (std::size_t i = 0; i < rows; ++i) out.points[i * k + c] = scores(static_cast<Eigen::Index>(i));
  }
  return out;
}

Trajectory pca_project(const embedding::DelayEmbedding& emb, std::size_t k) {
  return pca_project(emb.states, k);
}

}  // namespace phaserqa::projection
