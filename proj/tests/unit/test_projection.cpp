#include <doctest.h>

#include <Eigen/SVD>
#include <cmath>
#include <random>

#include "phaserqa/error.hpp"
#include "phaserqa/projection.hpp"
#include "phaserqa/signals.hpp"

using namespace phaserqa;
using projection::pca_project;

namespace {

StateMatrix random_states(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> data(rows * cols);
  // correlated columns so the spectrum is not flat
  for (std::size_t r = 0; r < rows; ++r) {
    double carry = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      carry = 0.6 * carry + g(rng) / static_cast<double>(c + 1);
      data[r * cols + c] = carry + 3.0;
    }
  }
  return StateMatrix(rows, cols, std::move(data));
}

// Reference spectrum from the SVD of the centred data, not the covariance.
std::vector<double> svd_variances(const StateMatrix& s) {
  Eigen::MatrixXd a(s.rows(), s.cols());
  for (std::size_t r = 0; r < s.rows(); ++r)
    for (std::size_t c = 0; c < s.cols(); ++c) a(r, c) = s.row(r)[c];
  a.rowwise() -= a.colwise().mean();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double sv = svd.singularValues()(i);
    out.push_back(sv * sv / static_cast<double>(s.rows() - 1));
  }
  return out;
}

}  // namespace

TEST_CASE("axis-aligned cloud recovers ordered axes") {
  // columns scaled 1, 3, 2 by symmetric +-1 patterns
  std::vector<double> data;
  const int pattern[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  for (const auto& p : pattern) {
    data.push_back(1.0 * p[0]);
    data.push_back(3.0 * p[1]);
    data.push_back(2.0 * p[2]);
  }
  const auto t = pca_project(StateMatrix(4, 3, data));
  REQUIRE(t.explained_variance.size() == 3);
  CHECK(t.explained_variance[0] == doctest::Approx(12.0));
  CHECK(t.explained_variance[1] == doctest::Approx(16.0 / 3.0));
  CHECK(t.explained_variance[2] == doctest::Approx(4.0 / 3.0));
  CHECK(std::abs(t.loadings[0][1]) == doctest::Approx(1.0));
  CHECK(t.loadings[0][1] > 0.0);
  CHECK(std::abs(t.loadings[1][2]) == doctest::Approx(1.0));
  CHECK(t(0, 0) == doctest::Approx(3.0));
  CHECK(t(1, 0) == doctest::Approx(-3.0));
  CHECK_FALSE(t.rank_deficient);
}

TEST_CASE("spectrum matches an SVD reference") {
  const auto s = random_states(50, 6, 9);
  const auto t = pca_project(s, 6);
  const auto ref = svd_variances(s);
  for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(t.explained_variance[i] - ref[i]) <= 1e-9);
  for (std::size_t i = 1; i < 6; ++i) CHECK(t.explained_variance[i] <= t.explained_variance[i - 1]);

  double total = 0.0;
  for (double v : ref) total += v;
  const auto top = pca_project(s, 3);
  double kept = 0.0;
  for (double v : top.explained_variance) kept += v;
  CHECK(kept <= total + 1e-12);
}

TEST_CASE("reconstruction error equals discarded variance") {
  const std::size_t n = 50, d = 6, k = 3;
  const auto s = random_states(n, d, 4);
  const auto t = pca_project(s, k);
  std::vector<double> mean(d, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < d; ++c) mean[c] += s.row(r)[c] / static_cast<double>(n);
  double err = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      double back = mean[c];
      for (std::size_t j = 0; j < k; ++j) back += t(r, j) * t.loadings[j][c];
      err += (s.row(r)[c] - back) * (s.row(r)[c] - back);
    }
  }
  const auto ref = svd_variances(s);
  double discarded = 0.0;
  for (std::size_t i = k; i < d; ++i) discarded += ref[i];
  CHECK(std::abs(err / static_cast<double>(n - 1) - discarded) <= 1e-9);
}

TEST_CASE("projection ignores a constant shift") {
  auto s = random_states(40, 4, 2);
  std::vector<double> shifted(s.data().begin(), s.data().end());
  for (auto& v : shifted) v += 1000.0;
  const auto a = pca_project(s);
  const auto b = pca_project(StateMatrix(40, 4, shifted));
  for (std::size_t i = 0; i < a.points.size(); ++i) CHECK(std::abs(a.points[i] - b.points[i]) <= 1e-9);
}

TEST_CASE("rank deficiency is flagged") {
  std::vector<double> data;
  for (int i = 0; i < 10; ++i) {
    data.push_back(i);
    data.push_back(2.0 * i);
    data.push_back(-i);
  }
  const auto t = pca_project(StateMatrix(10, 3, data));
  CHECK(t.rank_deficient);
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(t(i, 1) == 0.0);
    CHECK(t(i, 2) == 0.0);
  }
  const auto two = pca_project(StateMatrix(10, 3, data), 1);
  CHECK_FALSE(two.rank_deficient);
}

TEST_CASE("invalid shapes") {
  CHECK_THROWS_AS(pca_project(StateMatrix(1, 3, {1.0, 2.0, 3.0})), Error);
  CHECK_THROWS_AS(pca_project(random_states(10, 2, 1), 3), Error);
  CHECK_THROWS_AS(pca_project(random_states(10, 2, 1), 0), Error);
}

TEST_CASE("Lorenz delay embedding projects to three components") {
  const auto x = signals::gen_lorenz_x({}, 2000);
  const auto t = pca_project(embedding::utde_embed(x, {6, 8}));
  CHECK(t.size() == 2000 - 40);
  CHECK(t.explained_variance[0] > t.explained_variance[2]);
}
