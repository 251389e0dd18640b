#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "netmetric/error.hpp"
#include "netmetric/matrix.hpp"

namespace netmetric {

/// A finite node set with a symmetric dissimilarity that is zero exactly on
/// the diagonal. Immutable once constructed; construction validates.
class Network {
 public:
  /// Validates `dissim` and `labels`. Off-diagonal asymmetry and diagonal
  /// entries within kTol are tolerated and snapped (upper triangle wins,
  /// diagonal becomes exactly zero). Empty `labels` means "0", "1", ...
  static Network validate(Matrix dissim, std::vector<std::string> labels = {}) {
    const std::size_t n = dissim.rows();
    if (n == 0 || !dissim.square())
      throw Error(ErrorKind::ShapeMismatch, "matrix is " + std::to_string(dissim.rows()) + "x" +
                                                std::to_string(dissim.cols()) +
                                                ", expected non-empty square");
    if (labels.empty()) {
      labels.reserve(n);
      for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n)
      throw Error(ErrorKind::ShapeMismatch, std::to_string(labels.size()) + " labels for " +
                                                std::to_string(n) + " nodes");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.insert(labels[i]).second)
        throw Error(ErrorKind::DuplicateLabel, "label '" + labels[i] + "' at index " + std::to_string(i));

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!std::isfinite(dissim(i, j)))
          throw Error(ErrorKind::NonFiniteValue, "entry " + at(i, j));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(dissim(i, i)) > kTol)
        throw Error(ErrorKind::NonzeroDiagonal, "entry " + at(i, i));
      dissim(i, i) = 0.0;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (std::abs(dissim(i, j) - dissim(j, i)) > kTol)
          throw Error(ErrorKind::AsymmetricMatrix, "entries " + at(i, j) + "/" + at(j, i));
        if (!(dissim(i, j) > 0.0))
          throw Error(ErrorKind::NonpositiveOffDiagonal, "entry " + at(i, j));
        dissim(j, i) = dissim(i, j);
      }
    }
    return Network(std::move(dissim), std::move(labels));
  }

  std::size_t size() const noexcept { return dissim_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return dissim_(i, j); }
  const Matrix& dissim() const noexcept { return dissim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  Network(Matrix dissim, std::vector<std::string> labels)
      : dissim_(std::move(dissim)), labels_(std::move(labels)) {}

  static std::string at(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }

  Matrix dissim_;
  std::vector<std::string> labels_;
};

/// Total map from the nodes of one network into the nodes of another.
struct NodeMapping {
  std::vector<std::size_t> assignment;

  std::size_t operator()(std::size_t i) const { return assignment[i]; }
  std::size_t size() const noexcept { return assignment.size(); }

  /// Throws DimensionMismatch unless the map is total from `source_size`
  /// nodes into `target_size` nodes.
  void check(std::size_t source_size, std::size_t target_size) const {
    if (assignment.size() != source_size)
      throw Error(ErrorKind::DimensionMismatch, "mapping has " + std::to_string(assignment.size()) +
                                                    " entries for " + std::to_string(source_size) +
                                                    " source nodes");
    for (std::size_t i = 0; i < assignment.size(); ++i)
      if (assignment[i] >= target_size)
        throw Error(ErrorKind::DimensionMismatch, "source node " + std::to_string(i) + " maps to " +
                                                      std::to_string(assignment[i]) + " >= " +
                                                      std::to_string(target_size));
  }

  static NodeMapping identity(std::size_t n) {
    NodeMapping m;
    m.assignment.resize(n);
    std::iota(m.assignment.begin(), m.assignment.end(), std::size_t{0});
    return m;
  }

  friend bool operator==(const NodeMapping&, const NodeMapping&) = default;
};

/// Relation between two node sets that covers both sides.
struct Correspondence {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  void check(std::size_t source_size, std::size_t target_size) const {
    std::vector<bool> row(source_size, false), col(target_size, false);
    for (auto [x, y] : pairs) {
      if (x >= source_size || y >= target_size)
        throw Error(ErrorKind::InvalidCorrespondence, "pair (" + std::to_string(x) + "," +
                                                          std::to_string(y) + ") out of range");
      row[x] = col[y] = true;
    }
    for (std::size_t x = 0; x < source_size; ++x)
      if (!row[x]) throw Error(ErrorKind::InvalidCorrespondence, "source node " + std::to_string(x) + " uncovered");
    for (std::size_t y = 0; y < target_size; ++y)
      if (!col[y]) throw Error(ErrorKind::InvalidCorrespondence, "target node " + std::to_string(y) + " uncovered");
  }

  static Correspondence diagonal(std::size_t n) {
    Correspondence c;
    for (std::size_t i = 0; i < n; ++i) c.pairs.emplace_back(i, i);
    return c;
  }

  friend bool operator==(const Correspondence&, const Correspondence&) = default;
};

/// Network with node `perm[k]` of `net` placed at position k. A shorter
/// index list selects an induced sub-network.
inline Network permute(const Network& net, const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  for (std::size_t i : perm)
    if (i >= net.size()) throw Error(ErrorKind::DimensionMismatch, "node index " + std::to_string(i) + " out of range");
  Matrix d(n, n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = net.labels()[perm[a]];
    for (std::size_t b = 0; b < n; ++b) d(a, b) = net(perm[a], perm[b]);
  }
  return Network::validate(std::move(d), std::move(labels));
}

/// Induced sub-network on the given node indices (in the given order).
inline Network subnetwork(const Network& net, const std::vector<std::size_t>& keep) {
  return permute(net, keep);
}

inline constexpr std::size_t kMaxIsomorphismNodes = 8;

/// True iff some relabelling makes the matrices equal within `tol`.
/// Enumerates permutations; guarded at kMaxIsomorphismNodes.
inline bool are_isomorphic(const Network& a, const Network& b, double tol = kTol) {
  const std::size_t n = a.size();
  if (n > kMaxIsomorphismNodes || b.size() > kMaxIsomorphismNodes)
    throw Error(ErrorKind::TooLarge, "isomorphism check limited to " +
                                         std::to_string(kMaxIsomorphismNodes) + " nodes");
  if (n != b.size()) return false;

  // Cheap rejection on sorted off-diagonal weights.
  auto weights = [](const Network& net) {
    std::vector<double> w;
    for (std::size_t i = 0; i < net.size(); ++i)
      for (std::size_t j = i + 1; j < net.size(); ++j) w.push_back(net(i, j));
    std::sort(w.begin(), w.end());
    return w;
  };
  const auto wa = weights(a), wb = weights(b);
  for (std::size_t k = 0; k < wa.size(); ++k)
    if (std::abs(wa[k] - wb[k]) > tol) return false;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        ok = std::abs(a(i, j) - b(perm[i], perm[j])) <= tol;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace netmetric
