// Command-line front end: validation, generation, augmentation, distances
// and the gamma-family / classification experiments.
//
// Exit codes: 0 success, 2 input or I/O error, 3 enumeration guard exceeded,
// 4 infeasible configuration.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netmetric/netmetric.hpp"

namespace fs = std::filesystem;
using namespace netmetric;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitGuard = 3;
constexpr int kExitConfig = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge: return kExitGuard;
    case ErrorKind::InvalidConfig: return kExitConfig;
    default: return kExitInput;
  }
}

/// Shortest round-trip text, always with a fractional part ("2.0").
std::string format_value(double v) {
  std::string s = format_number(v);
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

std::vector<double> parse_gammas(const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stod(part));
      } else {
        const double lo = std::stod(part.substr(0, dots)), hi = std::stod(part.substr(dots + 2));
        for (double g = lo; g <= hi + 1e-9; g += 1.0) out.push_back(g);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "bad gamma list '" + spec + "'");
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_node_range(const std::string& spec) {
  try {
    const auto dots = spec.find("..");
    if (dots == std::string::npos) {
      const auto n = std::stoul(spec);
      return {n, n};
    }
    return {std::stoul(spec.substr(0, dots)), std::stoul(spec.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad node range '" + spec + "'");
  }
}

std::vector<Model> parse_models(const std::string& spec) {
  std::vector<Model> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) out.push_back(parse_model(part));
  return out;
}

void write_output(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  write_text(path, text);
}

struct SearchOptions {
  std::uint64_t seed = 0;
  std::size_t mds_dim = ApproxConfig{}.mds_dim;
  std::size_t restarts = 16;
  std::size_t max_iters = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--seed", seed, "Random seed");
    cmd->add_option("--mds-dim", mds_dim, "Embedding dimension for the approximation");
    cmd->add_option("--restarts", restarts, "Random restarts of the local search");
    cmd->add_option("--max-iters", max_iters, "Moves per descent (0: 10 x point count)");
  }

  ApproxConfig config(bool interior) const {
    ApproxConfig cfg;
    cfg.use_interior = interior;
    cfg.seed = seed;
    cfg.mds_dim = mds_dim;
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    return cfg;
  }
};

json labelled_map(const std::vector<std::size_t>& map, const std::vector<std::string>& from,
                  const std::vector<std::string>& to) {
  json out = json::object();
  for (std::size_t i = 0; i < map.size(); ++i) out[from[i]] = to[map[i]];
  return out;
}

int cmd_validate(const std::string& path) {
  const auto net = load_network(path);
  std::cout << "valid network: " << net.size() << " nodes\n";
  return kExitOk;
}

int cmd_dist(const std::string& path_a, const std::string& path_b, const std::string& method, bool interior,
             bool as_json, const SearchOptions& opts) {
  const auto a = load_network(path_a);
  const auto b = load_network(path_b);
  json out{{"method", method}};
  double value = 0.0;
  if (method == "exact-pe") {
    auto res = d_PE_exact(a, b);
    value = res.value;
    out["mapping"] = res.witness.assignment;
    out["mapping_labels"] = labelled_map(res.witness.assignment, a.labels(), b.labels());
  } else if (method == "exact-c") {
    auto res = d_C_exact(a, b);
    value = res.value;
    json pairs = json::array();
    for (auto [x, y] : res.witness.pairs) pairs.push_back({x, y});
    out["correspondence"] = pairs;
  } else if (method == "exact-ee") {
    value = d_EE_exact(a, b);
  } else if (method == "exact-peq") {
    const auto qa = midpoint_augment(a), qb = midpoint_augment(b);
    auto res = d_PEQ_exact(qa, qb);
    value = res.value;
    out["mapping"] = res.witness.assignment;
    out["mapping_labels"] = labelled_map(res.witness.assignment, qa.labels(), qb.labels());
  } else if (method == "approx") {
    value = approx_dEE(a, b, opts.config(interior));
    out["interior"] = interior;
    out["seed"] = opts.seed;
  } else {
    throw Error(ErrorKind::InvalidConfig, "unknown method '" + method + "'");
  }
  if (as_json) {
    out["value"] = value;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << format_value(value) << "\n";
  }
  return kExitOk;
}

int cmd_heatmap(const std::string& gammas, const std::string& method, const std::string& interior,
                const std::string& out_path, const SearchOptions& opts) {
  if (method != "approx") throw Error(ErrorKind::InvalidConfig, "heatmap supports --method approx only");
  if (interior != "on" && interior != "off") throw Error(ErrorKind::InvalidConfig, "--interior must be on or off");
  const auto result = run_heatmap(parse_gammas(gammas), opts.config(interior == "on"));
  const fs::path out(out_path);
  const fs::path exact = out.parent_path() / (out.stem().string() + "_exact" + out.extension().string());
  write_output(out, matrix_to_csv(result.approx, result.labels));
  write_output(exact, matrix_to_csv(result.exact, result.labels));
  std::cout << "wrote " << out.string() << " and " << exact.string() << "\n";
  return kExitOk;
}

ClassifySpec classify_manifest(const fs::path& path) {
  const json j = [&] {
    try {
      return json::parse(read_text(path));
    } catch (const json::parse_error& e) {
      throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
    }
  }();
  ClassifySpec spec;
  try {
    if (j.contains("models")) {
      spec.models.clear();
      for (const auto& m : j.at("models")) spec.models.push_back(parse_model(m.get<std::string>()));
    }
    spec.per_model = j.value("per_model", spec.per_model);
    if (j.contains("nodes")) {
      const auto& nodes = j.at("nodes");
      if (nodes.is_array()) {
        spec.min_nodes = nodes.at(0).get<std::size_t>();
        spec.max_nodes = nodes.at(1).get<std::size_t>();
      } else {
        spec.min_nodes = spec.max_nodes = nodes.get<std::size_t>();
      }
    }
    spec.sigma = j.value("sigma", spec.sigma);
    spec.feat_dim = j.value("feat_dim", spec.feat_dim);
    spec.approx.use_interior = j.value("interior", spec.approx.use_interior);
    spec.approx.seed = j.value("seed", spec.approx.seed);
    spec.approx.mds_dim = j.value("mds_dim", spec.approx.mds_dim);
    spec.approx.restarts = j.value("restarts", spec.approx.restarts);
    spec.approx.max_iters = j.value("max_iters", spec.approx.max_iters);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, path.string() + ": " + e.what());
  }
  return spec;
}

int cmd_classify(const ClassifySpec& spec, const std::string& out_dir) {
  const auto result = run_classification(spec);
  const fs::path dir(out_dir);
  write_output(dir / "matrix.csv", matrix_to_csv(result.distances, result.names));
  write_output(dir / "embedding.csv", embedding_to_csv(result.embedding.coords, result.names, result.classes));
  write_output(dir / "metrics.json", classify_metrics_json(result));
  std::cout << "loo_error " << format_value(result.loo_error) << "\n";
  return kExitOk;
}

GenSpec genspec_from_json(const json& j) {
  GenSpec g;
  try {
    g.model = parse_model(j.at("model").get<std::string>());
    g.n = j.value("n", g.n);
    g.sigma = j.value("sigma", g.sigma);
    g.feat_dim = j.value("feat_dim", g.feat_dim);
    g.gamma = j.value("gamma", g.gamma);
    g.seed = j.value("seed", g.seed);
    g.index = j.value("index", g.index);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("generator spec: ") + e.what());
  }
  return g;
}

int cmd_augment(const std::string& in, const std::string& out) {
  const auto space = midpoint_augment(load_network(in));
  write_output(out, sampled_space_to_json_text(space));
  std::cout << "wrote " << space.size() << "-point space to " << out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"netmetric: embedding distances between weighted networks"};
  app.require_subcommand(1);

  std::string path_a, path_b, out, method = "exact-pe";
  bool interior_flag = false, as_json = false;
  SearchOptions opts;

  auto* validate = app.add_subcommand("validate", "Check a network file");
  validate->add_option("path", path_a, "Network (JSON or CSV)")->required();

  auto* dist = app.add_subcommand("dist", "Distance between two networks");
  dist->add_option("a", path_a)->required();
  dist->add_option("b", path_b)->required();
  dist->add_option("--method", method, "exact-pe | exact-c | exact-ee | exact-peq | approx")
      ->check(CLI::IsMember({"exact-pe", "exact-c", "exact-ee", "exact-peq", "approx"}));
  dist->add_flag("--interior", interior_flag, "Add edge midpoints before approximating");
  dist->add_flag("--json", as_json, "Print value and witness as JSON");
  opts.add_to(dist);

  std::string gammas = "1..10", heat_method = "approx", interior_mode = "on";
  auto* heatmap = app.add_subcommand("heatmap", "approx d_EE over the gamma family");
  heatmap->add_option("--gammas", gammas, "e.g. 1..10 or 1,3,5");
  heatmap->add_option("--method", heat_method, "approx");
  heatmap->add_option("--interior", interior_mode, "on | off");
  heatmap->add_option("--out", out, "Output CSV; exact companion goes to <stem>_exact.csv")->required();
  opts.add_to(heatmap);

  std::string models = "er,circle,corr", nodes = "12", manifest;
  std::size_t per_model = 10;
  auto* classify = app.add_subcommand("classify", "Synthetic-model discrimination experiment");
  classify->add_option("--models", models, "Comma-separated: er, circle, corr");
  classify->add_option("--per-model", per_model, "Networks per model");
  classify->add_option("--nodes", nodes, "n or nmin..nmax");
  classify->add_flag("--interior", interior_flag, "Add edge midpoints");
  classify->add_option("--manifest", manifest, "JSON manifest replacing the flags");
  classify->add_option("--out", out, "Output directory")->required();
  SearchOptions classify_opts;
  classify_opts.mds_dim = kClassifyMdsDim;
  classify_opts.add_to(classify);

  GenSpec gen_spec;
  std::string model_name_arg = "er", spec_path;
  auto* gen = app.add_subcommand("gen", "Generate a network");
  gen->add_option("--model", model_name_arg, "er | circle | corr | gamma");
  gen->add_option("--n", gen_spec.n, "Node count");
  gen->add_option("--sigma", gen_spec.sigma, "RBF width (circle)");
  gen->add_option("--feat-dim", gen_spec.feat_dim, "Feature dimension (corr)");
  gen->add_option("--gamma", gen_spec.gamma, "Gamma (gamma family)");
  gen->add_option("--seed", gen_spec.seed, "Random seed");
  gen->add_option("--index", gen_spec.index, "Network index within an experiment");
  gen->add_option("--spec", spec_path, "JSON generator spec replacing the flags");
  gen->add_option("--out", out, "Output path (.json or .csv)")->required();

  auto* augment = app.add_subcommand("augment", "Add all edge midpoints");
  augment->add_option("path", path_a)->required();
  augment->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(path_a);
    if (*dist) return cmd_dist(path_a, path_b, method, interior_flag, as_json, opts);
    if (*heatmap) return cmd_heatmap(gammas, heat_method, interior_mode, out, opts);
    if (*classify) {
      ClassifySpec spec;
      if (!manifest.empty()) {
        spec = classify_manifest(manifest);
      } else {
        spec.models = parse_models(models);
        spec.per_model = per_model;
        std::tie(spec.min_nodes, spec.max_nodes) = parse_node_range(nodes);
        spec.approx = classify_opts.config(interior_flag);
      }
      return cmd_classify(spec, out);
    }
    if (*gen) {
      if (!spec_path.empty()) {
        gen_spec = genspec_from_json(json::parse(read_text(spec_path)));
      } else {
        gen_spec.model = parse_model(model_name_arg);
      }
      save_network(generate(gen_spec), out);
      return kExitOk;
    }
    if (*augment) return cmd_augment(path_a, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
