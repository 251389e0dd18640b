#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "netmetric/approx.hpp"
#include "netmetric/error.hpp"
#include "netmetric/exact.hpp"
#include "netmetric/gen.hpp"
#include "netmetric/io.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/mds.hpp"

namespace netmetric {

struct HeatmapResult {
  std::vector<std::string> labels;
  Matrix approx;  // approx_dEE
  Matrix exact;   // d_EE_exact
};

/// approx_dEE and exact d_EE over the three-node gamma family.
inline HeatmapResult run_heatmap(const std::vector<double>& gammas, const ApproxConfig& cfg,
                                 std::size_t workers = worker_count()) {
  if (gammas.size() < 2) throw Error(ErrorKind::InvalidConfig, "heatmap needs at least 2 gamma values");
  std::vector<Network> nets;
  HeatmapResult out;
  for (double g : gammas) {
    nets.push_back(gen_gamma(g));
    out.labels.push_back("gamma=" + format_number(g));
  }
  out.approx = pairwise_matrix(nets, cfg, workers);
  out.exact = Matrix(nets.size(), nets.size(), 0.0);
  for (std::size_t i = 0; i < nets.size(); ++i)
    for (std::size_t j = i + 1; j < nets.size(); ++j) out.exact(i, j) = out.exact(j, i) = d_EE_exact(nets[i], nets[j]);
  return out;
}

/// Experiment defaults: embeds each network in 8 dimensions rather than the
/// ApproxConfig default of 3.
inline constexpr std::size_t kClassifyMdsDim = 8;

struct ClassifySpec {
  ClassifySpec() { approx.mds_dim = kClassifyMdsDim; }

  std::vector<Model> models{Model::ErdosRenyi, Model::UnitCircle, Model::Correlation};
  std::size_t per_model = 10;
  std::size_t min_nodes = 12;
  std::size_t max_nodes = 12;
  double sigma = 0.5;
  std::size_t feat_dim = 5;
  ApproxConfig approx;

  void check() const {
    if (models.size() < 2) throw Error(ErrorKind::InvalidConfig, "need at least 2 models");
    if (per_model < 2) throw Error(ErrorKind::InvalidConfig, "need at least 2 networks per model");
    if (min_nodes < 3 || max_nodes < min_nodes) throw Error(ErrorKind::InvalidConfig, "node range must satisfy 3 <= min <= max");
    for (Model m : models)
      if (m == Model::GammaFamily) throw Error(ErrorKind::InvalidConfig, "gamma family is not a random model");
    approx.check();
  }
};

struct SeparationStats {
  double intra_mean = 0.0;
  double inter_mean = 0.0;
};

struct ClassifyResult {
  std::vector<std::string> names;
  std::vector<std::string> classes;
  Matrix distances;
  EmbeddingResult embedding;
  double loo_error = 0.0;
  SeparationStats overall;
  std::map<std::string, SeparationStats> per_model;
};

/// Mean distance within and across classes, overall and per class.
inline std::pair<SeparationStats, std::map<std::string, SeparationStats>> separation(
    const Matrix& d, const std::vector<std::string>& classes) {
  double in_sum = 0.0, out_sum = 0.0;
  std::size_t in_n = 0, out_n = 0;
  std::map<std::string, std::array<double, 4>> acc;  // intra sum, count, inter sum, count
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.rows(); ++j) {
      if (i == j) continue;
      auto& a = acc[classes[i]];
      if (classes[i] == classes[j]) {
        a[0] += d(i, j);
        a[1] += 1;
        if (i < j) {
          in_sum += d(i, j);
          ++in_n;
        }
      } else {
        a[2] += d(i, j);
        a[3] += 1;
        if (i < j) {
          out_sum += d(i, j);
          ++out_n;
        }
      }
    }
  SeparationStats overall{in_n ? in_sum / in_n : 0.0, out_n ? out_sum / out_n : 0.0};
  std::map<std::string, SeparationStats> per;
  for (const auto& [c, a] : acc) per[c] = {a[1] > 0 ? a[0] / a[1] : 0.0, a[3] > 0 ? a[2] / a[3] : 0.0};
  return {overall, per};
}

/// Generates per_model networks for each model (network k of a model has
/// min_nodes + k mod (max_nodes - min_nodes + 1) nodes), fills the approx_dEE
/// matrix, embeds it in the plane and scores leave-one-out nearest centroid.
inline ClassifyResult run_classification(const ClassifySpec& spec, std::size_t workers = worker_count()) {
  spec.check();
  std::vector<Network> nets;
  ClassifyResult out;
  const std::size_t span = spec.max_nodes - spec.min_nodes + 1;
  for (Model m : spec.models)
    for (std::size_t k = 0; k < spec.per_model; ++k) {
      GenSpec g;
      g.model = m;
      g.n = spec.min_nodes + k % span;
      g.sigma = spec.sigma;
      g.feat_dim = spec.feat_dim;
      g.seed = spec.approx.seed;
      g.index = k;
      nets.push_back(generate(g));
      out.names.push_back(std::string(model_name(m)) + "-" + std::to_string(k));
      out.classes.emplace_back(model_name(m));
    }
  out.distances = pairwise_matrix(nets, spec.approx, workers);
  out.embedding = embed2d(out.distances);
  out.loo_error = nearest_centroid_eval(out.embedding.coords, out.classes);
  std::tie(out.overall, out.per_model) = separation(out.distances, out.classes);
  return out;
}

inline std::string classify_metrics_json(const ClassifyResult& r) {
  json per = json::object();
  for (const auto& [m, s] : r.per_model) per[m] = {{"intra_mean", s.intra_mean}, {"inter_mean", s.inter_mean}};
  json j{{"loo_error", r.loo_error},
         {"intra_mean", r.overall.intra_mean},
         {"inter_mean", r.overall.inter_mean},
         {"per_model", per},
         {"embedding_stress", r.embedding.stress}};
  return j.dump(2) + "\n";
}

}  // namespace netmetric
