#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "netmetric/error.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/network.hpp"
#include "netmetric/rng.hpp"

namespace netmetric {

/// Smallest off-diagonal weight a generator emits.
inline constexpr double kMinWeight = 1e-9;

enum class Model : std::uint64_t { ErdosRenyi = 0, UnitCircle = 1, Correlation = 2, GammaFamily = 3 };

constexpr std::string_view model_name(Model m) {
  switch (m) {
    case Model::ErdosRenyi: return "er";
    case Model::UnitCircle: return "circle";
    case Model::Correlation: return "corr";
    case Model::GammaFamily: return "gamma";
  }
  return "?";
}

inline Model parse_model(std::string_view name) {
  for (Model m : {Model::ErdosRenyi, Model::UnitCircle, Model::Correlation, Model::GammaFamily})
    if (model_name(m) == name) return m;
  throw Error(ErrorKind::InvalidParameter, "unknown model '" + std::string(name) + "'");
}

struct GenSpec {
  Model model = Model::ErdosRenyi;
  std::size_t n = 10;
  double sigma = 0.5;
  std::size_t feat_dim = 5;
  double gamma = 1.0;
  std::uint64_t seed = 0;
  std::uint64_t index = 0;  // position of the network within an experiment
};

/// Random stream for network `index` of `model` under `seed`.
inline SplitMix64 network_stream(std::uint64_t seed, Model model, std::uint64_t index) {
  return SplitMix64(derive_seed(seed, static_cast<std::uint64_t>(model), index));
}

namespace detail {
inline void require_n(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::InvalidN, "need at least 2 nodes, got " + std::to_string(n));
}
}  // namespace detail

/// Weighted Erdos-Renyi: i.i.d. uniform weights on (0, 1].
inline Network gen_er(std::size_t n, std::uint64_t seed, std::uint64_t index = 0) {
  detail::require_n(n);
  auto rng = network_stream(seed, Model::ErdosRenyi, index);
  Matrix d(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) d(i, j) = d(j, i) = std::max(rng.uniform_pos(), kMinWeight);
  return Network::validate(std::move(d));
}

/// Gaussian RBF proximities exp(-|x_i - x_j|^2 / (2 sigma^2)) between planar points.
inline Network circle_network(const std::vector<std::array<double, 2>>& pts, double sigma) {
  if (!(sigma > 0.0)) throw Error(ErrorKind::InvalidParameter, "sigma must be positive");
  const std::size_t n = pts.size();
  detail::require_n(n);
  Matrix d(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = pts[i][0] - pts[j][0], dy = pts[i][1] - pts[j][1];
      d(i, j) = d(j, i) = std::max(std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma)), kMinWeight);
    }
  return Network::validate(std::move(d));
}

/// Unit-circle model: points uniform over the unit disk (radius sqrt(U),
/// angle 2 pi U, radius drawn first), RBF proximities of width sigma.
inline Network gen_circle(std::size_t n, double sigma, std::uint64_t seed, std::uint64_t index = 0) {
  detail::require_n(n);
  if (!(sigma > 0.0)) throw Error(ErrorKind::InvalidParameter, "sigma must be positive");
  auto rng = network_stream(seed, Model::UnitCircle, index);
  std::vector<std::array<double, 2>> pts(n);
  for (auto& p : pts) {
    const double radius = std::sqrt(rng.uniform());
    const double angle = 2.0 * std::numbers::pi * rng.uniform();
    p = {radius * std::cos(angle), radius * std::sin(angle)};
  }
  return circle_network(pts, sigma);
}

/// Pearson correlation of two equal-length vectors.
inline double pearson(const std::vector<double>& u, const std::vector<double>& v) {
  const double k = static_cast<double>(u.size());
  double mu = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    mu += u[i];
    mv += v[i];
  }
  mu /= k;
  mv /= k;
  double suv = 0.0, suu = 0.0, svv = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    suv += (u[i] - mu) * (v[i] - mv);
    suu += (u[i] - mu) * (u[i] - mu);
    svv += (v[i] - mv) * (v[i] - mv);
  }
  return std::clamp(suv / std::sqrt(suu * svv), -1.0, 1.0);
}

inline bool zero_variance(const std::vector<double>& u) {
  return std::all_of(u.begin(), u.end(), [&](double x) { return x == u.front(); });
}

/// Correlation proximities rho / 2 + 1/2, clamped to [kMinWeight, 1].
inline Network correlation_network(const std::vector<std::vector<double>>& features) {
  const std::size_t n = features.size();
  detail::require_n(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (features[i].size() < 2 || features[i].size() != features[0].size())
      throw Error(ErrorKind::InvalidParameter, "feature vectors need equal length >= 2");
    if (zero_variance(features[i]))
      throw Error(ErrorKind::DegenerateFeature, "feature vector " + std::to_string(i) + " is constant");
  }
  Matrix d(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      d(i, j) = d(j, i) = std::clamp(pearson(features[i], features[j]) / 2.0 + 0.5, kMinWeight, 1.0);
  return Network::validate(std::move(d));
}

/// Correlation model: standard normal features of dimension feat_dim. A
/// constant vector is redrawn up to 8 times.
inline Network gen_corr(std::size_t n, std::size_t feat_dim, std::uint64_t seed, std::uint64_t index = 0) {
  detail::require_n(n);
  if (feat_dim < 2) throw Error(ErrorKind::InvalidParameter, "feature dimension must be at least 2");
  auto rng = network_stream(seed, Model::Correlation, index);
  std::vector<std::vector<double>> features(n, std::vector<double>(feat_dim));
  for (std::size_t i = 0; i < n; ++i) {
    int attempts = 0;
    do {
      if (attempts++ > 8) throw Error(ErrorKind::DegenerateFeature, "feature vector " + std::to_string(i));
      for (double& f : features[i]) f = rng.normal();
    } while (zero_variance(features[i]));
  }
  return correlation_network(features);
}

/// Three nodes a, b, c with r(a, b) = r(a, c) = gamma and r(b, c) = 11.
inline Network gen_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw Error(ErrorKind::InvalidGamma, "gamma must be positive, got " + std::to_string(gamma));
  return Network::validate(Matrix{{0, gamma, gamma}, {gamma, 0, 11}, {gamma, 11, 0}}, {"a", "b", "c"});
}

inline Network generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::ErdosRenyi: return gen_er(spec.n, spec.seed, spec.index);
    case Model::UnitCircle: return gen_circle(spec.n, spec.sigma, spec.seed, spec.index);
    case Model::Correlation: return gen_corr(spec.n, spec.feat_dim, spec.seed, spec.index);
    case Model::GammaFamily: return gen_gamma(spec.gamma);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown model");
}

}  // namespace netmetric
