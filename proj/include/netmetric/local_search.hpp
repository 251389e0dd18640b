#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "netmetric/error.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/rng.hpp"

namespace netmetric {

struct ApproxConfig {
  bool use_interior = true;
  std::size_t mds_dim = 3;
  std::size_t restarts = 16;
  std::size_t max_iters = 0;  // 0 means 10 * (source point count)
  std::uint64_t seed = 0;

  void check() const {
    if (mds_dim < 1 || restarts < 1)
      throw Error(ErrorKind::InvalidConfig, "mds_dim and restarts must be at least 1");
  }
};

struct SearchResult {
  double value = 0.0;
  std::vector<std::size_t> map;
};

namespace detail {

/// First-improvement descent over single-point reassignments. A move is
/// taken when it strictly lowers the bottleneck distortion, or keeps it and
/// strictly lowers the sum of squared pair mismatches; the second key lets
/// the search cross plateaus of the max. Each row caches its two largest
/// mismatches so a candidate move costs O(points).
class BottleneckDescent {
 public:
  BottleneckDescent(const Matrix& dx, const Matrix& dy, std::size_t restricted_sources,
                    std::size_t restricted_targets)
      : dx_(dx), dy_(dy), restricted_sources_(restricted_sources), restricted_targets_(restricted_targets) {}

  /// Improves `map` in place; returns its final distortion.
  double run(std::vector<std::size_t>& map, std::size_t max_moves) const {
    const std::size_t p = map.size();
    if (p <= 1) return 0.0;
    State st(p);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        const double e = std::abs(dx_(i, j) - dy_(map[i], map[j]));
        st.err(i, j) = st.err(j, i) = e;
        st.sum_sq += e * e;
      }
    for (std::size_t i = 0; i < p; ++i) st.refresh_row(i);

    std::vector<double> row(p);
    std::size_t moves = 0, idle = 0, x = 0;
    double worst = st.max_all();
    while (moves < max_moves && idle < p && worst > 0.0) {
      const double rest = st.max_excluding(x);
      bool moved = false;
      if (rest <= worst) {
        const std::size_t limit = x < restricted_sources_ ? restricted_targets_ : dy_.rows();
        for (std::size_t t = 0; t < limit && !moved; ++t) {
          if (t == map[x]) continue;
          double new_max = rest, delta_sq = 0.0;
          for (std::size_t i = 0; i < p && new_max <= worst; ++i) {
            if (i == x) continue;
            const double e = std::abs(dx_(x, i) - dy_(t, map[i]));
            row[i] = e;
            new_max = std::max(new_max, e);
            delta_sq += e * e - st.err(x, i) * st.err(x, i);
          }
          if (new_max > worst) continue;
          const bool better = new_max < worst || delta_sq < -1e-12 * (1.0 + st.sum_sq);
          if (!better) continue;
          map[x] = t;
          st.sum_sq += delta_sq;
          for (std::size_t i = 0; i < p; ++i)
            if (i != x) st.err(x, i) = st.err(i, x) = row[i];
          st.refresh_row(x);
          for (std::size_t i = 0; i < p; ++i)
            if (i != x) st.update_row(i, x);
          worst = st.max_all();
          moved = true;
        }
      }
      if (moved) {
        ++moves;
        idle = 0;
      } else {
        ++idle;
        x = (x + 1) % p;
      }
    }
    return evaluate(map);
  }

  double evaluate(const std::vector<std::size_t>& map) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < map.size(); ++i)
      for (std::size_t j = i + 1; j < map.size(); ++j)
        worst = std::max(worst, std::abs(dx_(i, j) - dy_(map[i], map[j])));
    return worst;
  }

 private:
  struct State {
    explicit State(std::size_t n) : p(n), err(n, n, 0.0), top1(n), top2(n), arg1(n) {}

    void refresh_row(std::size_t i) {
      top1[i] = top2[i] = -1.0;
      arg1[i] = i;
      for (std::size_t j = 0; j < p; ++j) {
        if (j == i) continue;
        const double e = err(i, j);
        if (e > top1[i]) {
          top2[i] = top1[i];
          top1[i] = e;
          arg1[i] = j;
        } else if (e > top2[i]) {
          top2[i] = e;
        }
      }
    }

    // Row i changed only in column c.
    void update_row(std::size_t i, std::size_t c) {
      const double e = err(i, c);
      if (arg1[i] == c) {
        if (e >= top2[i])
          top1[i] = e;
        else
          refresh_row(i);
      } else if (e > top1[i]) {
        top2[i] = top1[i];
        top1[i] = e;
        arg1[i] = c;
      } else if (e > top2[i]) {
        top2[i] = e;
      } else if (e < top2[i]) {
        refresh_row(i);  // c may have been the runner-up
      }
    }

    double max_all() const { return *std::max_element(top1.begin(), top1.end()); }

    // Largest mismatch over pairs not touching x.
    double max_excluding(std::size_t x) const {
      double m = 0.0;
      for (std::size_t i = 0; i < p; ++i) {
        if (i == x) continue;
        m = std::max(m, arg1[i] == x ? top2[i] : top1[i]);
      }
      return m;
    }

    std::size_t p;
    Matrix err;
    double sum_sq = 0.0;
    std::vector<double> top1, top2;
    std::vector<std::size_t> arg1;
  };

  const Matrix& dx_;
  const Matrix& dy_;
  std::size_t restricted_sources_;
  std::size_t restricted_targets_;
};

}  // namespace detail

/// Produces the start map for restart r (1-based) from its own random stream.
using StartGenerator = std::function<std::vector<std::size_t>(std::size_t restart, SplitMix64& rng)>;

/// Heuristic minimum of the bottleneck distortion between two dissimilarity
/// matrices. The first `restricted_sources` source points may only map into
/// the first `restricted_targets` target points. Start 0 is `seed_map` when
/// given; starts 1..cfg.restarts come from `starts` (default: uniform random
/// feasible maps), restart r drawing from derive_seed(cfg.seed, r). The best
/// start wins, ties going to the lowest start index. The value is always the
/// distortion of an actual feasible map, hence an upper bound on the exact
/// minimum.
inline SearchResult local_search_dPE(const Matrix& dx, const Matrix& dy, std::size_t restricted_sources,
                                     std::size_t restricted_targets, const ApproxConfig& cfg,
                                     const std::optional<std::vector<std::size_t>>& seed_map = std::nullopt,
                                     const StartGenerator& starts = {}) {
  cfg.check();
  const std::size_t p = dx.rows(), q = dy.rows();
  if (!dx.square() || !dy.square() || q == 0 || restricted_sources > p || restricted_targets > q ||
      (restricted_sources > 0 && restricted_targets == 0))
    throw Error(ErrorKind::DimensionMismatch, "local search problem shape");
  if (p <= 1) return {0.0, std::vector<std::size_t>(p, 0)};

  auto feasible = [&](const std::vector<std::size_t>& map) {
    if (map.size() != p) return false;
    for (std::size_t i = 0; i < p; ++i)
      if (map[i] >= (i < restricted_sources ? restricted_targets : q)) return false;
    return true;
  };

  const std::size_t max_iters = cfg.max_iters > 0 ? cfg.max_iters : 10 * p;
  const detail::BottleneckDescent descent(dx, dy, restricted_sources, restricted_targets);
  SearchResult best{std::numeric_limits<double>::infinity(), {}};

  auto consider = [&](std::vector<std::size_t> map) {
    const double v = descent.run(map, max_iters);
    if (v < best.value) best = {v, std::move(map)};
  };

  if (seed_map) {
    if (!feasible(*seed_map)) throw Error(ErrorKind::DimensionMismatch, "seed map is infeasible");
    consider(*seed_map);
  }
  for (std::size_t r = 1; r <= cfg.restarts; ++r) {
    SplitMix64 rng(derive_seed(cfg.seed, r));
    std::vector<std::size_t> map;
    if (starts) {
      map = starts(r, rng);
      if (!feasible(map)) throw Error(ErrorKind::DimensionMismatch, "start generator produced an infeasible map");
    } else {
      map.resize(p);
      for (std::size_t i = 0; i < p; ++i) map[i] = rng.below(i < restricted_sources ? restricted_targets : q);
    }
    consider(std::move(map));
  }
  return best;
}

}  // namespace netmetric
