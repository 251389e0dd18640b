#pragma once

// Dense two-phase simplex with Bland's rule. Slow and simple; used only as an
// independent reference for the transport solver.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "netmetric/network.hpp"
#include "netmetric/barycentric.hpp"

namespace lp_oracle {

struct LpResult {
  double value = 0.0;
  std::vector<double> x;
};

/// min c.x subject to A x = b, x >= 0. Returns nullopt when infeasible.
inline std::optional<LpResult> minimize(const std::vector<std::vector<double>>& a, std::vector<double> b,
                                        const std::vector<double>& c) {
  constexpr double eps = 1e-11;
  const std::size_t m = a.size(), n = c.size();
  // Tableau columns: n structural, m artificial, rhs.
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(n + m + 1, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = sign * a[i][j];
    t[i][n + i] = 1.0;
    t[i][n + m] = sign * b[i];
    basis[i] = n + i;
  }

  auto pivot = [&](std::size_t r, std::size_t col) {
    const double pv = t[r][col];
    for (double& v : t[r]) v /= pv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == r || std::abs(t[i][col]) < 1e-15) continue;
      const double f = t[i][col];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = col;
  };

  auto run = [&](std::size_t allowed) {
    for (;;) {
      std::size_t col = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (t[m][j] < -eps) {
          col = j;
          break;
        }
      if (col == allowed) return;
      std::size_t row = m;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][col] <= eps) continue;
        const double ratio = t[i][n + m] / t[i][col];
        if (ratio < best - eps || (ratio <= best + eps && row < m && basis[i] < basis[row])) {
          best = ratio;
          row = i;
        }
      }
      if (row == m) return;  // unbounded; cannot occur for the bounded problems used here
      pivot(row, col);
    }
  };

  // Phase 1: minimize the artificial sum.
  for (std::size_t j = 0; j <= n + m; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    t[m][j] = (j >= n && j < n + m) ? 0.0 : -s;
  }
  run(n + m);
  if (-t[m][n + m] > 1e-8) return std::nullopt;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(t[i][j]) > eps) {
        pivot(i, j);
        break;
      }
  }

  // Phase 2 on structural columns only.
  for (std::size_t j = 0; j <= n + m; ++j) t[m][j] = j < n ? c[j] : 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= n) continue;
    const double f = t[m][basis[i]];
    for (std::size_t j = 0; j <= n + m; ++j) t[m][j] -= f * t[i][j];
  }
  run(n);

  LpResult res;
  res.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t[i][n + m];
  for (std::size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

struct FlowOptimum {
  double total = 0.0;  // stage 1 optimum
  double cost = 0.0;   // stage 2 optimum
};

/// Both stages of the minimal-transformation problem over all edges i < j,
/// with each signed flow split as w = w+ - w-.
inline FlowOptimum minimal_flow(const netmetric::Network& net, const netmetric::BarycentricPoint& p,
                                const netmetric::BarycentricPoint& m) {
  const std::size_t n = net.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  const std::size_t vars = 2 * edges.size();

  std::vector<std::vector<double>> a(n, std::vector<double>(vars, 0.0));
  std::vector<double> b(n);
  for (std::size_t k = 0; k < n; ++k) b[k] = m[k] - p[k];
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [i, j] = edges[e];
    a[i][2 * e] -= 1.0;
    a[j][2 * e] += 1.0;
    a[i][2 * e + 1] += 1.0;
    a[j][2 * e + 1] -= 1.0;
  }

  FlowOptimum out;
  if (edges.empty()) return out;
  const auto stage1 = minimize(a, b, std::vector<double>(vars, 1.0));
  if (!stage1) return out;
  out.total = stage1->value;

  std::vector<double> cost(vars);
  for (std::size_t e = 0; e < edges.size(); ++e) cost[2 * e] = cost[2 * e + 1] = net(edges[e].first, edges[e].second);
  // Fix the total at its optimum (plus rounding slack) via a slack variable.
  auto a2 = a;
  for (auto& row : a2) row.push_back(0.0);
  a2.push_back(std::vector<double>(vars + 1, 1.0));
  auto b2 = b;
  b2.push_back(out.total + 1e-12);
  cost.push_back(0.0);
  const auto stage2 = minimize(a2, b2, cost);
  if (stage2) out.cost = stage2->value;
  return out;
}

}  // namespace lp_oracle
