#pragma once

#include <cmath>
#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "netmetric/error.hpp"
#include "netmetric/matrix.hpp"

namespace netmetric {

/// A convex combination of a network's nodes, stored as mass per node.
class BarycentricPoint {
 public:
  /// Entries must be nonnegative and sum to 1 within kTol; the sum is then
  /// normalized away.
  explicit BarycentricPoint(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw Error(ErrorKind::InvalidPoint, "point has no coordinates");
    double sum = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      if (!std::isfinite(weights_[i]) || weights_[i] < 0.0)
        throw Error(ErrorKind::InvalidPoint, "coordinate " + std::to_string(i) + " is " +
                                                 std::to_string(weights_[i]));
      sum += weights_[i];
    }
    if (std::abs(sum - 1.0) > kTol)
      throw Error(ErrorKind::InvalidPoint, "coordinates sum to " + std::to_string(sum));
    for (double& w : weights_) w /= sum;
  }

  static BarycentricPoint vertex(std::size_t n, std::size_t i) {
    std::vector<double> w(n, 0.0);
    w.at(i) = 1.0;
    return BarycentricPoint(std::move(w));
  }

  static BarycentricPoint midpoint(std::size_t n, std::size_t i, std::size_t j) {
    return mix(n, i, j, 0.5);
  }

  /// Mass `1 - t` at i and `t` at j.
  static BarycentricPoint mix(std::size_t n, std::size_t i, std::size_t j, double t) {
    std::vector<double> w(n, 0.0);
    w.at(i) += 1.0 - t;
    w.at(j) += t;
    return BarycentricPoint(std::move(w));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// Index of the unit coordinate if this is an original node.
  std::optional<std::size_t> vertex_index() const {
    for (std::size_t i = 0; i < weights_.size(); ++i)
      if (std::abs(weights_[i] - 1.0) <= kTol) return i;
    return std::nullopt;
  }

  friend bool operator==(const BarycentricPoint&, const BarycentricPoint&) = default;

 private:
  std::vector<double> weights_;
};

/// Largest coordinate difference; points must share a dimension.
inline double coord_distance(const BarycentricPoint& a, const BarycentricPoint& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace netmetric
