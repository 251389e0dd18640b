#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "netmetric/barycentric.hpp"
#include "netmetric/error.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/network.hpp"
#include "netmetric/transport.hpp"

namespace netmetric {

/// A finite sample of a network's interior: the original nodes first, then
/// extra barycentric points, with induced dissimilarities between all of them.
class SampledSpace {
 public:
  /// Rebuilds a space from stored parts, checking every invariant.
  static SampledSpace assemble(Network base, std::vector<BarycentricPoint> points,
                               std::vector<std::string> labels, Matrix dissim) {
    const std::size_t n = base.size();
    const std::size_t q = points.size();
    if (q < n || labels.size() != q || dissim.rows() != q || !dissim.square())
      throw Error(ErrorKind::ShapeMismatch, "sampled space parts disagree in size");
    for (std::size_t i = 0; i < q; ++i) {
      if (points[i].size() != n)
        throw Error(ErrorKind::DimensionMismatch, "point " + std::to_string(i) + " has " +
                                                      std::to_string(points[i].size()) + " coordinates");
      if (i < n && coord_distance(points[i], BarycentricPoint::vertex(n, i)) > kTol)
        throw Error(ErrorKind::InvalidPoint, "point " + std::to_string(i) + " must be vertex " + std::to_string(i));
      for (std::size_t j = 0; j < i; ++j)
        if (coord_distance(points[i], points[j]) <= kTol)
          throw Error(ErrorKind::DuplicatePoint, "points " + std::to_string(j) + " and " + std::to_string(i));
    }
    for (std::size_t i = 0; i < q; ++i) {
      if (std::abs(dissim(i, i)) > kTol) throw Error(ErrorKind::NonzeroDiagonal, "entry " + std::to_string(i));
      for (std::size_t j = 0; j < q; ++j) {
        if (!(dissim(i, j) >= 0.0) || std::abs(dissim(i, j) - dissim(j, i)) > kTol)
          throw Error(ErrorKind::AsymmetricMatrix, "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (i < n && j < n && std::abs(dissim(i, j) - base(i, j)) > kTol)
          throw Error(ErrorKind::ShapeMismatch, "induced entry (" + std::to_string(i) + "," +
                                                    std::to_string(j) + ") differs from the base network");
      }
    }
    return SampledSpace(std::move(base), std::move(points), std::move(labels), std::move(dissim));
  }

  const Network& base() const noexcept { return base_; }
  const std::vector<BarycentricPoint>& points() const noexcept { return points_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Matrix& dissim() const noexcept { return dissim_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t base_size() const noexcept { return base_.size(); }

  /// Index of the point within `tol` of `x` (max coordinate difference).
  std::optional<std::size_t> find(const BarycentricPoint& x, double tol = kTol) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (coord_distance(points_[i], x) <= tol) return i;
    return std::nullopt;
  }

  /// The sample viewed as a network in its own right.
  Network as_network() const { return Network::validate(dissim_, labels_); }

 private:
  SampledSpace(Network base, std::vector<BarycentricPoint> points, std::vector<std::string> labels,
               Matrix dissim)
      : base_(std::move(base)), points_(std::move(points)), labels_(std::move(labels)), dissim_(std::move(dissim)) {}

  Network base_;
  std::vector<BarycentricPoint> points_;
  std::vector<std::string> labels_;
  Matrix dissim_;
};

namespace detail {
inline std::string point_label(const std::vector<std::string>& names, const BarycentricPoint& x,
                               std::size_t index) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] > kTol) support.push_back(i);
  if (support.size() == 1) return names[support[0]];
  if (support.size() == 2 && std::abs(x[support[0]] - 0.5) <= kTol)
    return "mid(" + names[support[0]] + "," + names[support[1]] + ")";
  return "q" + std::to_string(index);
}
}  // namespace detail

/// Originals plus `extra`, with induced dissimilarities between all points.
inline SampledSpace augment_with(const Network& net, const std::vector<BarycentricPoint>& extra) {
  const std::size_t n = net.size();
  std::vector<BarycentricPoint> points;
  points.reserve(n + extra.size());
  for (std::size_t i = 0; i < n; ++i) points.push_back(BarycentricPoint::vertex(n, i));
  for (std::size_t e = 0; e < extra.size(); ++e) {
    if (extra[e].size() != n)
      throw Error(ErrorKind::DimensionMismatch, "extra point " + std::to_string(e) + " has " +
                                                    std::to_string(extra[e].size()) + " coordinates, network has " +
                                                    std::to_string(n));
    for (std::size_t i = 0; i < points.size(); ++i)
      if (coord_distance(points[i], extra[e]) <= kTol)
        throw Error(ErrorKind::DuplicatePoint, "extra point " + std::to_string(e) + " repeats point " +
                                                   std::to_string(i));
    points.push_back(extra[e]);
  }

  const std::size_t q = points.size();
  std::vector<std::string> labels;
  labels.reserve(q);
  for (std::size_t i = 0; i < q; ++i) labels.push_back(detail::point_label(net.labels(), points[i], i));

  Matrix dissim(q, q, 0.0);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = i + 1; j < q; ++j)
      dissim(i, j) = dissim(j, i) = interior_distance(net, points[i], points[j]);
  return SampledSpace::assemble(net, std::move(points), std::move(labels), std::move(dissim));
}

/// Midpoints of every node pair, in lexicographic (i, j) order.
inline std::vector<BarycentricPoint> all_midpoints(std::size_t n) {
  std::vector<BarycentricPoint> mids;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) mids.push_back(BarycentricPoint::midpoint(n, i, j));
  return mids;
}

inline SampledSpace midpoint_augment(const Network& net) {
  if (net.size() < 2) throw Error(ErrorKind::InvalidN, "midpoint augmentation needs at least 2 nodes");
  return augment_with(net, all_midpoints(net.size()));
}

/// Image of `x` under the map induced by a node map: mass of each source node
/// is moved onto its image.
inline BarycentricPoint push_forward(const NodeMapping& map, const BarycentricPoint& x, std::size_t target_size) {
  if (x.size() != map.size())
    throw Error(ErrorKind::DimensionMismatch, "point of size " + std::to_string(x.size()) + " for a map over " +
                                                  std::to_string(map.size()) + " nodes");
  map.check(map.size(), target_size);
  std::vector<double> image(target_size, 0.0);
  for (std::size_t j = 0; j < x.size(); ++j) image[map(j)] += x[j];
  return BarycentricPoint(std::move(image));
}

inline constexpr std::size_t kMaxRegularPairNodes = 5;

namespace detail {
/// Calls `fn(map)` for every map from `from` nodes into `to` nodes, in
/// lexicographic order of the assignment array. Stops early when fn returns false.
template <typename Fn>
bool for_each_map(std::size_t from, std::size_t to, Fn&& fn) {
  NodeMapping map;
  map.assignment.assign(from, 0);
  for (;;) {
    if (!fn(static_cast<const NodeMapping&>(map))) return false;
    std::size_t pos = from;
    while (pos > 0) {
      --pos;
      if (++map.assignment[pos] < to) break;
      map.assignment[pos] = 0;
      if (pos == 0) return true;
    }
    if (from == 0) return true;
  }
}

inline bool closed_under_maps(const SampledSpace& src, const SampledSpace& dst, double tol) {
  return for_each_map(src.base_size(), dst.base_size(), [&](const NodeMapping& map) {
    for (const auto& x : src.points())
      if (!dst.find(push_forward(map, x, dst.base_size()), tol)) return false;
    return true;
  });
}
}  // namespace detail

/// True iff every node map in either direction carries every sample point of
/// one space onto a sample point of the other.
inline bool is_regular_sample_pair(const SampledSpace& qx, const SampledSpace& qy, double tol = kTol) {
  if (qx.base_size() > kMaxRegularPairNodes || qy.base_size() > kMaxRegularPairNodes)
    throw Error(ErrorKind::TooLarge, "regular-pair check limited to " + std::to_string(kMaxRegularPairNodes) +
                                         " base nodes per side");
  return detail::closed_under_maps(qx, qy, tol) && detail::closed_under_maps(qy, qx, tol);
}

}  // namespace netmetric
