#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netmetric/barycentric.hpp"
#include "netmetric/error.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/network.hpp"

namespace netmetric {

/// Supplies or demands below this are dropped before solving.
inline constexpr double kMassFloor = 1e-12;

struct TransportationSolution {
  Matrix flow;  // supply x demand
  double cost = 0.0;
  std::size_t pivots = 0;
};

/// Balanced transportation problem solved by the transportation simplex:
/// northwest-corner start, u-v potentials, most negative reduced cost enters,
/// cycle pivot. Supplies and demands must be positive with equal sums (the
/// final northwest cell absorbs any rounding residue).
inline TransportationSolution solve_transportation(std::span<const double> supply,
                                                   std::span<const double> demand,
                                                   const Matrix& cost) {
  const std::size_t m = supply.size();
  const std::size_t k = demand.size();
  if (m == 0 || k == 0 || cost.rows() != m || cost.cols() != k)
    throw Error(ErrorKind::DimensionMismatch, "transportation problem shape");

  TransportationSolution sol{Matrix(m, k, 0.0), 0.0, 0};
  Matrix& x = sol.flow;
  std::vector<char> basic(m * k, 0);
  auto is_basic = [&](std::size_t i, std::size_t j) -> char& { return basic[i * k + j]; };

  {
    std::vector<double> a(supply.begin(), supply.end()), b(demand.begin(), demand.end());
    std::size_t i = 0, j = 0;
    for (;;) {
      const double q = std::min(a[i], b[j]);
      x(i, j) = q;
      is_basic(i, j) = 1;
      a[i] -= q;
      b[j] -= q;
      if (i == m - 1 && j == k - 1) break;
      if (i == m - 1)
        ++j;
      else if (j == k - 1)
        ++i;
      else if (a[i] <= b[j])
        ++i;
      else
        ++j;
    }
  }

  double cost_scale = 1.0;
  for (double c : cost.data()) cost_scale = std::max(cost_scale, std::abs(c));
  const double eps = 1e-12 * cost_scale;
  const std::size_t nodes = m + k;  // rows first, then columns
  const std::size_t max_pivots = 50 * (m * k + 10);

  std::vector<std::vector<std::size_t>> adj(nodes);
  std::vector<double> pot(nodes);
  std::vector<std::size_t> parent(nodes);
  std::vector<std::size_t> queue;
  queue.reserve(nodes);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  for (;;) {
    for (auto& a : adj) a.clear();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (is_basic(i, j)) {
          adj[i].push_back(m + j);
          adj[m + j].push_back(i);
        }

    // Potentials: u_i + v_j = c_ij on the basis tree, u_0 = 0.
    std::fill(parent.begin(), parent.end(), kNone);
    queue.assign(1, 0);
    parent[0] = 0;
    pot[0] = 0.0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const std::size_t u = queue[h];
      for (std::size_t w : adj[u]) {
        if (parent[w] != kNone) continue;
        parent[w] = u;
        pot[w] = u < m ? cost(u, w - m) - pot[u] : cost(w, u - m) - pot[u];
        queue.push_back(w);
      }
    }
    if (queue.size() != nodes) throw std::logic_error("transportation basis is not a spanning tree");

    double best = -eps;
    std::size_t ei = kNone, ej = kNone;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        if (is_basic(i, j)) continue;
        const double rc = cost(i, j) - pot[i] - pot[m + j];
        if (rc < best) {
          best = rc;
          ei = i;
          ej = j;
        }
      }
    if (ei == kNone) break;
    if (++sol.pivots > max_pivots) throw std::logic_error("transportation simplex failed to converge");

    // Tree path from row ei to column ej.
    std::fill(parent.begin(), parent.end(), kNone);
    queue.assign(1, ei);
    parent[ei] = ei;
    for (std::size_t h = 0; h < queue.size() && parent[m + ej] == kNone; ++h) {
      const std::size_t u = queue[h];
      for (std::size_t w : adj[u])
        if (parent[w] == kNone) {
          parent[w] = u;
          queue.push_back(w);
        }
    }
    std::vector<std::pair<std::size_t, std::size_t>> path;  // cells from ej back to ei
    for (std::size_t w = m + ej; w != ei; w = parent[w]) {
      const std::size_t u = parent[w];
      path.push_back(u < m ? std::pair{u, w - m} : std::pair{w, u - m});
    }
    // Walking back from column ej, cells alternate -, +, -, ... and the
    // entering cell takes +theta.
    double theta = std::numeric_limits<double>::infinity();
    std::size_t leave = kNone;
    for (std::size_t s = 0; s < path.size(); s += 2) {
      const auto [i, j] = path[s];
      if (x(i, j) < theta) {
        theta = x(i, j);
        leave = s;
      }
    }
    for (std::size_t s = 0; s < path.size(); ++s) {
      const auto [i, j] = path[s];
      x(i, j) += (s % 2 == 0) ? -theta : theta;
    }
    x(ei, ej) = theta;
    const auto [li, lj] = path[leave];
    x(li, lj) = 0.0;
    is_basic(li, lj) = 0;
    is_basic(ei, ej) = 1;
  }

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      x(i, j) = std::max(x(i, j), 0.0);
      sol.cost += x(i, j) * cost(i, j);
    }
  return sol;
}

/// Signed per-edge flows turning one barycentric point into another. A
/// positive flow on (i, j), i < j, moves mass from i to j.
struct TransportPlan {
  std::map<std::pair<std::size_t, std::size_t>, double> flows;
  double total = 0.0;  // sum of |w_ij|
  double cost = 0.0;   // sum of |w_ij| * r(i, j)

  /// Net mass change m_i - p_i implied at every node.
  std::vector<double> net_change(std::size_t n) const {
    std::vector<double> delta(n, 0.0);
    for (const auto& [edge, w] : flows) {
      delta[edge.first] -= w;
      delta[edge.second] += w;
    }
    return delta;
  }
};

namespace detail {
inline void check_dims(const Network& net, const BarycentricPoint& p, const BarycentricPoint& m) {
  if (p.size() != net.size() || m.size() != net.size())
    throw Error(ErrorKind::DimensionMismatch, "points of size " + std::to_string(p.size()) + "/" +
                                                  std::to_string(m.size()) + " over a " +
                                                  std::to_string(net.size()) + "-node network");
}
}  // namespace detail

/// Plan moving `p` to `m` that first minimizes total flow and, among those,
/// minimizes the dissimilarity-weighted cost. Minimum-flow plans are exactly
/// direct shipments from nodes with surplus to nodes with deficit, so the
/// second stage is a transportation problem over r(i, j).
inline TransportPlan minimal_transport_plan(const Network& net, const BarycentricPoint& p,
                                            const BarycentricPoint& m) {
  detail::check_dims(net, p, m);
  const std::size_t n = net.size();
  std::vector<std::size_t> sources, sinks;
  std::vector<double> supply, demand;
  for (std::size_t i = 0; i < n; ++i) {
    const double excess = p[i] - m[i];
    if (excess > kMassFloor) {
      sources.push_back(i);
      supply.push_back(excess);
    } else if (-excess > kMassFloor) {
      sinks.push_back(i);
      demand.push_back(-excess);
    }
  }
  TransportPlan plan;
  if (sources.empty() || sinks.empty()) return plan;

  double total_supply = 0.0, total_demand = 0.0;
  for (double s : supply) total_supply += s;
  for (double d : demand) total_demand += d;
  for (double& d : demand) d *= total_supply / total_demand;

  Matrix cost(sources.size(), sinks.size());
  for (std::size_t a = 0; a < sources.size(); ++a)
    for (std::size_t b = 0; b < sinks.size(); ++b) cost(a, b) = net(sources[a], sinks[b]);

  const auto sol = solve_transportation(supply, demand, cost);
  for (std::size_t a = 0; a < sources.size(); ++a)
    for (std::size_t b = 0; b < sinks.size(); ++b) {
      const double q = sol.flow(a, b);
      if (q <= 0.0) continue;
      const std::size_t s = sources[a], d = sinks[b];
      if (s < d)
        plan.flows[{s, d}] = q;
      else
        plan.flows[{d, s}] = -q;
      plan.total += q;
      plan.cost += q * net(s, d);
    }
  return plan;
}

/// Induced dissimilarity between two interior points.
inline double interior_distance(const Network& net, const BarycentricPoint& p, const BarycentricPoint& m) {
  return minimal_transport_plan(net, p, m).cost;
}

}  // namespace netmetric
