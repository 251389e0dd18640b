#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netmetric/barycentric.hpp"
#include "netmetric/error.hpp"
#include "netmetric/exact.hpp"
#include "netmetric/interior.hpp"
#include "netmetric/local_search.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/mds.hpp"
#include "netmetric/network.hpp"
#include "netmetric/parallel.hpp"
#include "netmetric/rng.hpp"

namespace netmetric {

/// Per-network half of the approximation pipeline: the (optionally
/// midpoint-augmented) point set, its Euclidean embedding, and the embedded
/// distances the search runs on. Independent of the other network, so it is
/// computed once per network when filling a pairwise matrix.
struct PreparedNetwork {
  std::size_t base_size = 0;
  std::vector<BarycentricPoint> points;  // originals first
  Matrix target;                         // dissimilarities that were embedded
  EmbeddingResult embedding;
  Matrix embedded;                       // pairwise distances of embedding.coords
};

inline PreparedNetwork prepare(const Network& net, const ApproxConfig& cfg) {
  cfg.check();
  PreparedNetwork out;
  out.base_size = net.size();
  if (cfg.use_interior && net.size() >= 2) {
    auto space = midpoint_augment(net);
    out.points = space.points();
    out.target = space.dissim();
  } else {
    for (std::size_t i = 0; i < net.size(); ++i) out.points.push_back(BarycentricPoint::vertex(net.size(), i));
    out.target = net.dissim();
  }
  if (out.points.size() >= 2) {
    out.embedding = smacof_refine(classical_mds(out.target, cfg.mds_dim), out.target);
    out.embedded = pairwise_distances(out.embedding.coords);
  } else {
    out.embedding.coords = Matrix(1, cfg.mds_dim, 0.0);
    out.embedded = Matrix(1, 1, 0.0);
  }
  return out;
}

namespace detail {

inline Matrix leading_block(const Matrix& m, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(i, j);
  return out;
}

/// Node map matching each source node to the target node with the closest
/// sorted distance profile (compared over the shorter profile, L-infinity).
inline std::vector<std::size_t> profile_match(const Matrix& dx, const Matrix& dy) {
  auto profiles = [](const Matrix& d) {
    std::vector<std::vector<double>> out(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.rows(); ++j)
        if (j != i) out[i].push_back(d(i, j));
      std::sort(out[i].begin(), out[i].end());
    }
    return out;
  };
  const auto px = profiles(dx), py = profiles(dy);
  std::vector<std::size_t> map(dx.rows(), 0);
  for (std::size_t x = 0; x < px.size(); ++x) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < py.size(); ++y) {
      const std::size_t len = std::min(px[x].size(), py[y].size());
      double gap = 0.0;
      for (std::size_t k = 0; k < len; ++k) gap = std::max(gap, std::abs(px[x][k] - py[y][k]));
      if (gap < best) {
        best = gap;
        map[x] = y;
      }
    }
  }
  return map;
}

}  // namespace detail

/// Node-level seed maps are found exactly up to this many candidate maps.
inline constexpr double kExactSeedMaps = 1e5;

namespace detail {

/// Sample-point map induced by a node map: each point goes to the target
/// point nearest (in coordinates) to its push-forward.
inline std::vector<std::size_t> lift(const std::vector<std::size_t>& node_map, const PreparedNetwork& a,
                                     const PreparedNetwork& b) {
  std::vector<std::size_t> out(a.points.size());
  const NodeMapping phi{node_map};
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    const auto image = push_forward(phi, a.points[i], b.base_size);
    double closest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.points.size() && closest > kTol; ++j) {
      const double gap = coord_distance(image, b.points[j]);
      if (gap < closest) {
        closest = gap;
        out[i] = j;
      }
    }
  }
  return out;
}

}  // namespace detail

/// Approximate partial embedding distance from `a` to `b`: bottleneck local
/// search between the embedded distance matrices, original nodes restricted
/// to original nodes.
///
/// Every start is the lift of a node-level map between the embedded original
/// nodes. Start 0 lifts the best node map available: exact when there are at
/// most kExactSeedMaps candidates, otherwise a node-level multistart search
/// seeded with profile matching. Restart r lifts a uniformly random node map
/// after node-level descent.
inline SearchResult approx_dPE_search(const PreparedNetwork& a, const PreparedNetwork& b, const ApproxConfig& cfg) {
  cfg.check();
  const std::size_t nx = a.base_size, ny = b.base_size;
  const Matrix ex = detail::leading_block(a.embedded, nx);
  const Matrix ey = detail::leading_block(b.embedded, ny);

  std::vector<std::size_t> node_map;
  if (std::pow(static_cast<double>(ny), static_cast<double>(nx)) <= kExactSeedMaps) {
    node_map = detail::BottleneckSearch(ex, ey, std::vector<std::size_t>(nx, ny)).run().witness;
  } else {
    node_map = local_search_dPE(ex, ey, 0, 0, cfg, detail::profile_match(ex, ey)).map;
  }

  const detail::BottleneckDescent node_descent(ex, ey, 0, 0);
  const StartGenerator starts = [&](std::size_t, SplitMix64& rng) {
    std::vector<std::size_t> m(nx);
    for (auto& t : m) t = rng.below(ny);
    node_descent.run(m, 10 * nx);
    return detail::lift(m, a, b);
  };
  return local_search_dPE(a.embedded, b.embedded, nx, ny, cfg, detail::lift(node_map, a, b), starts);
}

inline double approx_dPE(const PreparedNetwork& a, const PreparedNetwork& b, const ApproxConfig& cfg) {
  return approx_dPE_search(a, b, cfg).value;
}

inline double approx_dPE(const Network& a, const Network& b, const ApproxConfig& cfg) {
  return approx_dPE(prepare(a, cfg), prepare(b, cfg), cfg);
}

inline double approx_dEE(const PreparedNetwork& a, const PreparedNetwork& b, const ApproxConfig& cfg) {
  return std::max(approx_dPE(a, b, cfg), approx_dPE(b, a, cfg));
}

inline double approx_dEE(const Network& a, const Network& b, const ApproxConfig& cfg) {
  return approx_dEE(prepare(a, cfg), prepare(b, cfg), cfg);
}

/// Symmetric matrix of approx_dEE over all pairs. Pair (i, j), i < j, runs
/// with seed derive_seed(cfg.seed, i, j), so the result does not depend on
/// `workers`.
inline Matrix pairwise_matrix(const std::vector<Network>& networks, const ApproxConfig& cfg,
                              std::size_t workers = worker_count()) {
  cfg.check();
  const std::size_t n = networks.size();
  if (n < 2) throw Error(ErrorKind::InsufficientData, "pairwise matrix needs at least 2 networks");

  std::vector<PreparedNetwork> prepared(n);
  parallel_for(n, workers, [&](std::size_t i) { prepared[i] = prepare(networks[i], cfg); });

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  Matrix out(n, n, 0.0);
  parallel_for(pairs.size(), workers, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    ApproxConfig pair_cfg = cfg;
    pair_cfg.seed = derive_seed(cfg.seed, i, j);
    out(i, j) = out(j, i) = approx_dEE(prepared[i], prepared[j], pair_cfg);
  });
  return out;
}

/// Leave-one-out nearest-centroid error rate of labelled points.
inline double nearest_centroid_eval(const Matrix& coords, const std::vector<std::string>& labels) {
  const std::size_t n = coords.rows(), dim = coords.cols();
  if (labels.size() != n) throw Error(ErrorKind::DimensionMismatch, "one label per point required");
  std::map<std::string, std::size_t> counts;
  for (const auto& l : labels) ++counts[l];
  if (counts.size() < 2) throw Error(ErrorKind::InsufficientData, "need at least 2 classes");
  for (const auto& [l, c] : counts)
    if (c < 2) throw Error(ErrorKind::InsufficientData, "class '" + l + "' has fewer than 2 samples");

  std::map<std::string, std::vector<double>> sums;
  for (std::size_t i = 0; i < n; ++i) {
    auto& s = sums[labels[i]];
    s.resize(dim, 0.0);
    for (std::size_t l = 0; l < dim; ++l) s[l] += coords(i, l);
  }

  std::size_t errors = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::string predicted;
    double best = std::numeric_limits<double>::infinity();
    for (const auto& [label, sum] : sums) {
      const bool own = label == labels[i];
      const double count = static_cast<double>(counts[label] - (own ? 1 : 0));
      double d2 = 0.0;
      for (std::size_t l = 0; l < dim; ++l) {
        const double centroid = (sum[l] - (own ? coords(i, l) : 0.0)) / count;
        d2 += (coords(i, l) - centroid) * (coords(i, l) - centroid);
      }
      if (d2 < best) {
        best = d2;
        predicted = label;
      }
    }
    if (predicted != labels[i]) ++errors;
  }
  return static_cast<double>(errors) / static_cast<double>(n);
}

}  // namespace netmetric
