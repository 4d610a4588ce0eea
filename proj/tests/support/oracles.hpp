#pragma once

// Naive reference implementations used only by tests. They deliberately
// follow the textbook definitions (full pairwise scans, literal run-length
// sums, normal equations) instead of sharing code with the library.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix embed(const std::vector<double>& x, std::size_t m, std::size_t tau) {
  Matrix out;
  for (std::size_t r = 0; r + (m - 1) * tau < x.size(); ++r) {
    std::vector<double> row;
    for (std::size_t c = 0; c < m; ++c) row.push_back(x[r + c * tau]);
    out.push_back(row);
  }
  return out;
}

enum class Norm { kEuclidean, kManhattan, kMaximum };

inline double norm_distance(const std::vector<double>& a, const std::vector<double>& b, Norm n) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double d = a[k] - b[k];
    if (n == Norm::kEuclidean) acc += d * d;
    if (n == Norm::kManhattan) acc += std::fabs(d);
    if (n == Norm::kMaximum) acc = std::fabs(d) > acc ? std::fabs(d) : acc;
  }
  return n == Norm::kEuclidean ? std::sqrt(acc) : acc;
}

using Bits = std::vector<std::vector<int>>;

inline Bits recurrence(const Matrix& states, double eps, Norm n) {
  const std::size_t size = states.size();
  Bits r(size, std::vector<int>(size, 0));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      // Heaviside with theta(0) = 1
      r[i][j] = (eps - norm_distance(states[i], states[j], n)) >= 0.0 ? 1 : 0;
    }
  }
  return r;
}

inline int at(const Bits& r, long i, long j) {
  const long n = static_cast<long>(r.size());
  if (i < 0 || j < 0 || i >= n || j >= n) return 0;
  return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

inline double rec(const Bits& r) {
  std::size_t count = 0;
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) count += static_cast<std::size_t>(r[i][j]);
  return static_cast<double>(count) / static_cast<double>(n * n - n);
}

// H_D(l) = sum_{i != j} (1 - R[i-1][j-1]) (1 - R[i+l][j+l]) prod_{k<l} R[i+k][j+k]
inline std::map<std::size_t, std::size_t> diagonal_histogram(const Bits& r) {
  std::map<std::size_t, std::size_t> h;
  const long n = static_cast<long>(r.size());
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      if (i == j) continue;
      for (long l = 1; l <= n; ++l) {
        long prod = 1;
        for (long k = 0; k < l && prod; ++k) prod *= at(r, i + k, j + k);
        if (!prod) break;
        if ((1 - at(r, i - 1, j - 1)) * (1 - at(r, i + l, j + l))) h[static_cast<std::size_t>(l)] += 1;
      }
    }
  }
  return h;
}

struct Metrics {
  double rec = 0, det = 0, ratio = 0, ent = 0;
  bool ratio_defined = true;
};

inline Metrics metrics(const Bits& r, std::size_t d_min) {
  Metrics m;
  m.rec = rec(r);
  const auto h = diagonal_histogram(r);
  double on_lines = 0, lines = 0;
  for (const auto& [l, c] : h) {
    if (l < d_min) continue;
    on_lines += static_cast<double>(l * c);
    lines += static_cast<double>(c);
  }
  double points = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (i != j) points += r[i][j];
  m.det = points > 0 ? on_lines / points : 0.0;
  for (const auto& [l, c] : h) {
    if (l < d_min || c == 0) continue;
    const double p = static_cast<double>(c) / lines;
    m.ent -= p * std::log(p);
  }
  if (m.rec > 0) {
    m.ratio = m.det / m.rec;
  } else {
    m.ratio_defined = false;
  }
  return m;
}

struct Cao {
  std::vector<double> e, e_star, e1, e2;
};

// Exhaustive O(N^2) neighbour search per dimension, max norm, smallest index on ties.
inline Cao cao(const std::vector<double>& x, std::size_t tau, std::size_t m_max) {
  Cao out;
  for (std::size_t d = 1; d <= m_max + 1; ++d) {
    const std::size_t count = x.size() - d * tau;
    double sum_a = 0, sum_s = 0;
    std::size_t valid = 0;
    for (std::size_t i = 0; i < count; ++i) {
      double best = std::numeric_limits<double>::infinity();
      std::size_t best_j = 0;
      for (std::size_t j = 0; j < count; ++j) {
        if (j == i) continue;
        double dist = 0;
        for (std::size_t k = 0; k < d; ++k) {
          const double diff = std::fabs(x[i + k * tau] - x[j + k * tau]);
          if (diff > dist) dist = diff;
        }
        if (dist < best) {
          best = dist;
          best_j = j;
        }
      }
      if (best == 0.0) continue;
      const double extra = std::fabs(x[i + d * tau] - x[best_j + d * tau]);
      sum_a += (extra > best ? extra : best) / best;
      sum_s += extra;
      ++valid;
    }
    out.e.push_back(sum_a / static_cast<double>(valid));
    out.e_star.push_back(sum_s / static_cast<double>(valid));
  }
  for (std::size_t m = 0; m < m_max; ++m) {
    out.e1.push_back(out.e[m + 1] / out.e[m]);
    out.e2.push_back(out.e_star[m + 1] / out.e_star[m]);
  }
  return out;
}

// Savitzky-Golay smoothing weights for the window centre from the normal
// equations (A^T A) c = A^T e_k on the integer abscissa, solved by
// Gauss-Jordan elimination in long double.
inline std::vector<double> sg_centre_weights(std::size_t p, std::size_t n) {
  const long half = static_cast<long>(n / 2);
  const std::size_t q = p + 1;
  std::vector<std::vector<long double>> ata(q, std::vector<long double>(q, 0));
  for (long k = -half; k <= half; ++k)
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b)
        ata[a][b] += std::pow(static_cast<long double>(k), static_cast<long double>(a + b));
  // inverse via Gauss-Jordan
  std::vector<std::vector<long double>> inv(q, std::vector<long double>(q, 0));
  for (std::size_t a = 0; a < q; ++a) inv[a][a] = 1;
  for (std::size_t c = 0; c < q; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < q; ++r)
      if (std::fabs(ata[r][c]) > std::fabs(ata[piv][c])) piv = r;
    std::swap(ata[c], ata[piv]);
    std::swap(inv[c], inv[piv]);
    const long double d = ata[c][c];
    for (std::size_t k = 0; k < q; ++k) {
      ata[c][k] /= d;
      inv[c][k] /= d;
    }
    for (std::size_t r = 0; r < q; ++r) {
      if (r == c) continue;
      const long double f = ata[r][c];
      for (std::size_t k = 0; k < q; ++k) {
        ata[r][k] -= f * ata[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  // smoothed value = first polynomial coefficient = row 0 of inv * A^T
  std::vector<double> w;
  for (long k = -half; k <= half; ++k) {
    long double s = 0;
    for (std::size_t b = 0; b < q; ++b)
      s += inv[0][b] * std::pow(static_cast<long double>(k), static_cast<long double>(b));
    w.push_back(static_cast<double>(s));
  }
  return w;
}

// P5 PGM, 0 = recurrence, row 0 of the matrix at the bottom of the image.
inline std::string pgm(const Bits& r) {
  const std::size_t n = r.size();
  std::string out = "P5\n" + std::to_string(n) + " " + std::to_string(n) + "\n255\n";
  for (std::size_t img_row = 0; img_row < n; ++img_row) {
    const std::size_t i = n - 1 - img_row;
    for (std::size_t j = 0; j < n; ++j) out.push_back(static_cast<char>(r[i][j] ? 0 : 255));
  }
  return out;
}

}  // namespace oracle
