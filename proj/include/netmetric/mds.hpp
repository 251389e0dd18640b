#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "netmetric/error.hpp"
#include "netmetric/matrix.hpp"

namespace netmetric {

struct EigenDecomposition {
  std::vector<double> values;  // descending
  Matrix vectors;              // column l is the eigenvector of values[l]
};

/// Cyclic Jacobi eigensolver for small dense symmetric matrices. Sweeps until
/// every off-diagonal entry is below 1e-12 relative to the Frobenius norm, at
/// most 100 sweeps.
inline EigenDecomposition jacobi_eigen(Matrix a) {
  const std::size_t n = a.rows();
  Matrix v(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  double norm = 0.0;
  for (double x : a.data()) norm += x * x;
  const double threshold = 1e-12 * std::max(std::sqrt(norm), 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
    if (off <= threshold) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= threshold) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double vrp = v(r, p), vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t l = 0; l < n; ++l) {
    out.values[l] = a(order[l], order[l]);
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, l) = v(r, order[l]);
  }
  return out;
}

struct EmbeddingResult {
  Matrix coords;  // one row per point
  double stress = 0.0;
  std::vector<double> stress_history;  // per SMACOF iteration, starting with the initial stress
};

namespace detail {
inline void check_dissim(const Matrix& d) {
  if (!d.square()) throw Error(ErrorKind::DimensionMismatch, "dissimilarity matrix is not square");
  if (d.rows() < 2) throw Error(ErrorKind::DegenerateInput, "need at least 2 points to embed");
  for (std::size_t i = 0; i < d.rows(); ++i) {
    if (std::abs(d(i, i)) > kTol) throw Error(ErrorKind::NonzeroDiagonal, "entry " + std::to_string(i));
    for (std::size_t j = i + 1; j < d.rows(); ++j)
      if (std::abs(d(i, j) - d(j, i)) > kTol)
        throw Error(ErrorKind::AsymmetricMatrix, "entries (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
}

inline double euclid(const Matrix& x, std::size_t i, std::size_t j) {
  double s = 0.0;
  for (std::size_t l = 0; l < x.cols(); ++l) {
    const double d = x(i, l) - x(j, l);
    s += d * d;
  }
  return std::sqrt(s);
}
}  // namespace detail

/// Pairwise Euclidean distances between rows.
inline Matrix pairwise_distances(const Matrix& coords) {
  const std::size_t n = coords.rows();
  Matrix d(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = detail::euclid(coords, i, j);
  return d;
}

/// Sum over i < j of (||x_i - x_j|| - d_ij)^2.
inline double stress(const Matrix& coords, const Matrix& dissim) {
  double s = 0.0;
  for (std::size_t i = 0; i < coords.rows(); ++i)
    for (std::size_t j = i + 1; j < coords.rows(); ++j) {
      const double r = detail::euclid(coords, i, j) - dissim(i, j);
      s += r * r;
    }
  return s;
}

/// Torgerson scaling: eigendecomposition of the double-centred squared
/// dissimilarities. Negative eigenvalues are clamped to zero; axes follow
/// descending eigenvalue and each axis is signed so its first non-negligible
/// loading is positive. Columns beyond the matrix rank are zero.
inline EmbeddingResult classical_mds(const Matrix& dissim, std::size_t dim) {
  detail::check_dissim(dissim);
  if (dim == 0) throw Error(ErrorKind::InvalidParameter, "embedding dimension must be positive");
  const std::size_t n = dissim.rows();

  Matrix sq(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sq(i, j) = dissim(i, j) * dissim(i, j);
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += sq(i, j);
    grand += row_mean[i];
    row_mean[i] /= static_cast<double>(n);
  }
  grand /= static_cast<double>(n * n);
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = -0.5 * (sq(i, j) - row_mean[i] - row_mean[j] + grand);

  const auto eig = jacobi_eigen(std::move(gram));
  EmbeddingResult out{Matrix(n, dim, 0.0), 0.0, {}};
  for (std::size_t l = 0; l < std::min(dim, n); ++l) {
    const double lambda = eig.values[l];
    if (lambda <= 0.0) break;
    double sign = 1.0;
    for (std::size_t r = 0; r < n; ++r)
      if (std::abs(eig.vectors(r, l)) > 1e-12) {
        sign = eig.vectors(r, l) > 0 ? 1.0 : -1.0;
        break;
      }
    const double scale = sign * std::sqrt(lambda);
    for (std::size_t r = 0; r < n; ++r) out.coords(r, l) = scale * eig.vectors(r, l);
  }
  out.stress = stress(out.coords, dissim);
  return out;
}

/// Stress majorization (SMACOF, unit weights) from `init`. Each Guttman
/// transform is kept only if it does not raise stress; stops after `iters`
/// transforms or when the relative decrease falls below `tol`.
inline EmbeddingResult smacof_refine(const EmbeddingResult& init, const Matrix& dissim, std::size_t iters = 300,
                                     double tol = 1e-8) {
  detail::check_dissim(dissim);
  const std::size_t n = dissim.rows();
  if (init.coords.rows() != n)
    throw Error(ErrorKind::DimensionMismatch, "embedding has " + std::to_string(init.coords.rows()) +
                                                  " rows for " + std::to_string(n) + " points");
  const std::size_t dim = init.coords.cols();
  Matrix x = init.coords;
  double current = stress(x, dissim);
  EmbeddingResult out{x, current, {current}};

  Matrix next(n, dim);
  for (std::size_t it = 0; it < iters && current > 0.0; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      auto row = next.row(i);
      std::fill(row.begin(), row.end(), 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double dij = detail::euclid(x, i, j);
        const double b = dij > 1e-300 ? dissim(i, j) / dij : 0.0;
        for (std::size_t l = 0; l < dim; ++l) row[l] += b * (x(i, l) - x(j, l));
      }
      for (std::size_t l = 0; l < dim; ++l) row[l] /= static_cast<double>(n);
    }
    // The transform returns a centred configuration; keep the original centroid.
    for (std::size_t l = 0; l < dim; ++l) {
      double mean_x = 0.0;
      for (std::size_t i = 0; i < n; ++i) mean_x += x(i, l);
      mean_x /= static_cast<double>(n);
      for (std::size_t i = 0; i < n; ++i) next(i, l) += mean_x;
    }
    const double candidate = stress(next, dissim);
    if (candidate > current) break;
    const double drop = current - candidate;
    x = next;
    current = candidate;
    out.stress_history.push_back(current);
    if (drop <= tol * out.stress_history[out.stress_history.size() - 2]) break;
  }
  out.coords = std::move(x);
  out.stress = current;
  return out;
}

/// Two-dimensional embedding of a distance matrix for plotting.
inline EmbeddingResult embed2d(const Matrix& dist) {
  return smacof_refine(classical_mds(dist, 2), dist, 1000, 1e-10);
}

}  // namespace netmetric
