#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "netmetric/error.hpp"
#include "netmetric/interior.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/network.hpp"

namespace netmetric {

// Enumeration guards.
inline constexpr std::size_t kMaxCorrespondenceCells = 20;
inline constexpr double kMaxMapCount = 1e7;

template <typename T>
struct WithWitness {
  double value = 0.0;
  T witness;
};

/// Worst mismatch |r_X(x, x') - r_Y(y, y')| over all pairs of correspondents.
inline double gamma_diff(const Network& a, const Network& b, const Correspondence& c) {
  c.check(a.size(), b.size());
  double worst = 0.0;
  for (auto [x, y] : c.pairs)
    for (auto [x2, y2] : c.pairs) worst = std::max(worst, std::abs(a(x, x2) - b(y, y2)));
  return worst;
}

/// Bottleneck distortion of a point map between two dissimilarity matrices.
inline double distortion(const Matrix& dx, const Matrix& dy, const std::vector<std::size_t>& map) {
  double worst = 0.0;
  for (std::size_t i = 0; i < map.size(); ++i)
    for (std::size_t j = i + 1; j < map.size(); ++j)
      worst = std::max(worst, std::abs(dx(i, j) - dy(map[i], map[j])));
  return worst;
}

/// Worst mismatch max_{x, x'} |r_X(x, x') - r_Y(phi(x), phi(x'))|.
inline double delta_map(const Network& a, const Network& b, const NodeMapping& phi) {
  phi.check(a.size(), b.size());
  return distortion(a.dissim(), b.dissim(), phi.assignment);
}

/// Cross term max_{x, y} |r_X(x, psi(y)) - r_Y(phi(x), y)| of the two-map
/// form of the correspondence distance.
inline double delta_cross(const Network& a, const Network& b, const NodeMapping& phi, const NodeMapping& psi) {
  phi.check(a.size(), b.size());
  psi.check(b.size(), a.size());
  double worst = 0.0;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < b.size(); ++y) worst = std::max(worst, std::abs(a(x, psi(y)) - b(phi(x), y)));
  return worst;
}

namespace detail {

inline double map_count(double targets, double sources) { return std::pow(targets, sources); }

inline void guard(double count, const std::string& what) {
  if (count > kMaxMapCount)
    throw Error(ErrorKind::TooLarge, what + " would enumerate " + std::to_string(count) + " maps (limit 1e7)");
}

/// Exact minimum of the bottleneck distortion over maps sending source point
/// i to one of the first `limit[i]` target points. Depth-first in
/// lexicographic order with pruning; a candidate replaces the incumbent only
/// if strictly better, so the witness is the lexicographically first argmin.
class BottleneckSearch {
 public:
  BottleneckSearch(const Matrix& dx, const Matrix& dy, std::vector<std::size_t> limit)
      : dx_(dx), dy_(dy), limit_(std::move(limit)), current_(limit_.size()), partial_(limit_.size() + 1, 0.0) {}

  WithWitness<std::vector<std::size_t>> run() {
    best_ = std::numeric_limits<double>::infinity();
    descend(0);
    return {best_, best_map_};
  }

 private:
  void descend(std::size_t depth) {
    if (depth == limit_.size()) {
      if (partial_[depth] < best_) {
        best_ = partial_[depth];
        best_map_ = current_;
      }
      return;
    }
    for (std::size_t t = 0; t < limit_[depth]; ++t) {
      double worst = partial_[depth];
      for (std::size_t i = 0; i < depth && worst < best_; ++i)
        worst = std::max(worst, std::abs(dx_(depth, i) - dy_(t, current_[i])));
      if (worst >= best_) continue;
      current_[depth] = t;
      partial_[depth + 1] = worst;
      descend(depth + 1);
    }
  }

  const Matrix& dx_;
  const Matrix& dy_;
  std::vector<std::size_t> limit_;
  std::vector<std::size_t> current_;
  std::vector<double> partial_;
  double best_ = 0.0;
  std::vector<std::size_t> best_map_;
};

}  // namespace detail

/// Partial embedding distance: min over all maps X -> Y of delta_map.
inline WithWitness<NodeMapping> d_PE_exact(const Network& a, const Network& b) {
  detail::guard(detail::map_count(b.size(), a.size()), "d_PE");
  auto res = detail::BottleneckSearch(a.dissim(), b.dissim(), std::vector<std::size_t>(a.size(), b.size())).run();
  return {res.value, NodeMapping{std::move(res.witness)}};
}

/// Embedding distance: the larger partial embedding distance of the two directions.
inline double d_EE_exact(const Network& a, const Network& b) {
  detail::guard(detail::map_count(b.size(), a.size()), "d_EE");
  detail::guard(detail::map_count(a.size(), b.size()), "d_EE");
  return std::max(d_PE_exact(a, b).value, d_PE_exact(b, a).value);
}

/// Correspondence distance by enumerating every covering subset of X x Y.
/// Cell (x, y) is bit x * |Y| + y; ties go to the smallest bitmask.
inline WithWitness<Correspondence> d_C_exact(const Network& a, const Network& b) {
  const std::size_t nx = a.size(), ny = b.size();
  const std::size_t cells = nx * ny;
  if (cells > kMaxCorrespondenceCells)
    throw Error(ErrorKind::TooLarge, "d_C enumerates 2^" + std::to_string(cells) + " subsets (limit 2^" +
                                         std::to_string(kMaxCorrespondenceCells) + ")");

  std::vector<double> mismatch(cells * cells);
  for (std::size_t c1 = 0; c1 < cells; ++c1)
    for (std::size_t c2 = 0; c2 < cells; ++c2)
      mismatch[c1 * cells + c2] = std::abs(a(c1 / ny, c2 / ny) - b(c1 % ny, c2 % ny));

  const std::uint32_t full_rows = (1u << nx) - 1, full_cols = (1u << ny) - 1;
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  std::vector<std::size_t> members;
  members.reserve(cells);
  for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
    std::uint32_t rows = 0, cols = 0;
    members.clear();
    for (std::size_t c = 0; c < cells; ++c)
      if (mask >> c & 1u) {
        rows |= 1u << (c / ny);
        cols |= 1u << (c % ny);
        members.push_back(c);
      }
    if (rows != full_rows || cols != full_cols) continue;
    double worst = 0.0;
    for (std::size_t s = 0; s < members.size() && worst < best; ++s)
      for (std::size_t t = s + 1; t < members.size(); ++t)
        worst = std::max(worst, mismatch[members[s] * cells + members[t]]);
    if (worst < best) {
      best = worst;
      best_mask = mask;
    }
  }
  Correspondence c;
  for (std::size_t cell = 0; cell < cells; ++cell)
    if (best_mask >> cell & 1u) c.pairs.emplace_back(cell / ny, cell % ny);
  return {best, std::move(c)};
}

/// Correspondence distance through the two-map form
/// min_{phi, psi} max{delta_map(phi), delta_map(psi), delta_cross(phi, psi)}.
inline double d_C_lemma(const Network& a, const Network& b) {
  const std::size_t nx = a.size(), ny = b.size();
  detail::guard(detail::map_count(ny, nx) * detail::map_count(nx, ny), "d_C (two-map form)");
  double best = std::numeric_limits<double>::infinity();
  detail::for_each_map(nx, ny, [&](const NodeMapping& phi) {
    const double dphi = distortion(a.dissim(), b.dissim(), phi.assignment);
    if (dphi >= best) return true;
    detail::for_each_map(ny, nx, [&](const NodeMapping& psi) {
      double worst = std::max(dphi, distortion(b.dissim(), a.dissim(), psi.assignment));
      for (std::size_t x = 0; x < nx && worst < best; ++x)
        for (std::size_t y = 0; y < ny; ++y) worst = std::max(worst, std::abs(a(x, psi(y)) - b(phi(x), y)));
      best = std::min(best, worst);
      return true;
    });
    return true;
  });
  return best;
}

/// Partial embedding distance between sampled spaces, over maps that send
/// original nodes to original nodes. The witness maps every sample point.
inline WithWitness<NodeMapping> d_PEQ_exact(const SampledSpace& qa, const SampledSpace& qb) {
  const std::size_t nx = qa.base_size(), ny = qb.base_size();
  detail::guard(detail::map_count(ny, nx) * detail::map_count(qb.size(), qa.size() - nx), "d_PEQ");
  std::vector<std::size_t> limit(qa.size(), qb.size());
  std::fill(limit.begin(), limit.begin() + nx, ny);
  auto res = detail::BottleneckSearch(qa.dissim(), qb.dissim(), std::move(limit)).run();
  return {res.value, NodeMapping{std::move(res.witness)}};
}

}  // namespace netmetric
