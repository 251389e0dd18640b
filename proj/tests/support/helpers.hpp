#pragma once

#include <cstdint>
#include <vector>

#include "netmetric/netmetric.hpp"

namespace testutil {

/// Random network with off-diagonal weights uniform in [lo, hi].
inline netmetric::Network random_network(std::size_t n, netmetric::SplitMix64& rng, double lo = 0.1,
                                         double hi = 2.0) {
  netmetric::Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = lo + (hi - lo) * rng.uniform();
  return netmetric::Network::validate(std::move(d));
}

inline netmetric::BarycentricPoint random_point(std::size_t n, netmetric::SplitMix64& rng) {
  std::vector<double> w(n);
  double sum = 0.0;
  for (auto& x : w) sum += (x = rng.uniform_pos());
  for (auto& x : w) x /= sum;
  // Occasionally concentrate on a vertex or an edge to exercise sparse supports.
  const auto kind = rng.below(4);
  if (kind == 0) return netmetric::BarycentricPoint::vertex(n, rng.below(n));
  if (kind == 1 && n > 1) {
    const auto i = rng.below(n), j = (i + 1 + rng.below(n - 1)) % n;
    return netmetric::BarycentricPoint::mix(n, i, j, rng.uniform());
  }
  return netmetric::BarycentricPoint(w);
}

inline netmetric::Network gamma(double g) { return netmetric::gen_gamma(g); }

}  // namespace testutil
