// corrclust: command-line driver for two-view correlation clustering.
//
// Subcommands: generate, cluster, evaluate, elbow, features. Every command
// that writes files also writes a manifest.json describing the run (argv,
// resolved config, input/output digests, seed, version, timing), and all
// outputs are deterministic for a fixed seed and fixed inputs.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corrclust/clusterers.hpp"
#include "corrclust/csv.hpp"
#include "corrclust/datagen.hpp"
#include "corrclust/errors.hpp"
#include "corrclust/ingest.hpp"
#include "corrclust/metrics.hpp"
#include "corrclust/model_json.hpp"

namespace {

namespace fs = std::filesystem;
using corrclust::ColumnStats;
using corrclust::FitConfig;
using corrclust::Matrix;
using json = nlohmann::json;

constexpr const char* kVersion = "corrclust 0.1.0";

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;
constexpr int kExitInfeasible = 4;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  bool quiet = false;
};

void note(const GlobalOpts& g, const std::string& message) {
  if (!g.quiet) {
    std::cerr << message << '\n';
  }
}

std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw corrclust::data_error("cannot open " + path);
  }
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char byte;
  while (in.get(byte)) {
    hash ^= static_cast<unsigned char>(byte);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string hex64(std::uint64_t value) {
  char buffer[19];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(value));
  return buffer;
}

// Collects run metadata; written last so output digests are available.
class Manifest {
 public:
  Manifest(std::string command, const std::vector<std::string>& argv)
      : start_(std::chrono::steady_clock::now()) {
    body_["command"] = std::move(command);
    body_["argv"] = argv;
    body_["version"] = kVersion;
  }

  json& body() { return body_; }

  void add_input(const std::string& path) {
    body_["inputs"][path] = hex64(fnv1a_file(path));
  }
  void add_output(const std::string& path) { outputs_.push_back(path); }

  void write(const fs::path& out_dir) {
    for (const auto& path : outputs_) {
      body_["outputs"][fs::path(path).filename().string()] =
          hex64(fnv1a_file(path));
    }
    body_["timing_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_)
            .count();
    std::ofstream out(out_dir / "manifest.json");
    out << body_.dump(2) << '\n';
    if (!out) {
      throw corrclust::data_error("cannot write manifest.json");
    }
  }

 private:
  json body_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

void write_json_file(const fs::path& path, const json& body) {
  std::ofstream out(path);
  out << body.dump(2) << '\n';
  if (!out) {
    throw corrclust::data_error("cannot write " + path.string());
  }
}

fs::path ensure_out_dir(const GlobalOpts& g) {
  fs::path dir(g.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw corrclust::data_error("cannot create output directory " +
                                dir.string());
  }
  return dir;
}

std::vector<std::string> index_keys(int n) {
  std::vector<std::string> keys(n);
  for (int i = 0; i < n; ++i) {
    keys[i] = std::to_string(i);
  }
  return keys;
}

// ---------------------------------------------------------------------------
// generate

struct GenerateOpts {
  corrclust::SynthConfig synth;
  int test_n = -1;
  std::vector<double> mean1{-2.0, 0.0};
  std::vector<double> mean2{2.0, 0.0};
  std::vector<double> cov{1.0, 0.0, 0.0, 1.0};
  std::vector<double> map1{1.0, 0.5, 0.5, 1.0};
  std::vector<double> map2{-1.0, -0.5, -0.5, -1.0};
};

void write_synth_split(const fs::path& dir, const std::string& prefix,
                       const corrclust::SynthDataset& data,
                       Manifest& manifest) {
  const auto keys = index_keys(static_cast<int>(data.x.rows()));
  const auto x_path = (dir / (prefix + "_x.csv")).string();
  const auto y_path = (dir / (prefix + "_y.csv")).string();
  const auto labels_path = (dir / (prefix + "_labels.csv")).string();
  corrclust::write_two_view_csv(x_path, "id", {"x0", "x1"}, keys, data.x);
  corrclust::write_two_view_csv(y_path, "id", {"y0", "y1"}, keys, data.y);
  std::vector<std::vector<std::string>> rows(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    rows[i] = {keys[i], std::to_string(data.spatial_labels[i]),
               std::to_string(data.corr_labels[i])};
  }
  corrclust::write_csv(labels_path, {"id", "spatial_label", "corr_label"},
                       rows);
  manifest.add_output(x_path);
  manifest.add_output(y_path);
  manifest.add_output(labels_path);
}

int run_generate(const GlobalOpts& g, GenerateOpts opts,
                 const std::vector<std::string>& argv) {
  const auto to_vec2 = [](const std::vector<double>& v, const char* flag) {
    if (v.size() != 2) {
      throw std::invalid_argument(std::string(flag) + " needs 2 values");
    }
    return Eigen::Vector2d(v[0], v[1]);
  };
  const auto to_mat2 = [](const std::vector<double>& v, const char* flag) {
    if (v.size() != 4) {
      throw std::invalid_argument(std::string(flag) +
                                  " needs 4 row-major values");
    }
    Eigen::Matrix2d m;
    m << v[0], v[1], v[2], v[3];
    return m;
  };
  opts.synth.mean1 = to_vec2(opts.mean1, "--mean1");
  opts.synth.mean2 = to_vec2(opts.mean2, "--mean2");
  opts.synth.spatial_cov = to_mat2(opts.cov, "--cov");
  opts.synth.map1 = to_mat2(opts.map1, "--map1");
  opts.synth.map2 = to_mat2(opts.map2, "--map2");

  Manifest manifest("generate", argv);
  const fs::path dir = ensure_out_dir(g);

  corrclust::SynthConfig train_cfg = opts.synth;
  train_cfg.seed = corrclust::derive_seed(g.seed, 0);
  corrclust::SynthConfig test_cfg = opts.synth;
  test_cfg.n = opts.test_n >= 0 ? opts.test_n : opts.synth.n;
  test_cfg.seed = corrclust::derive_seed(g.seed, 1);

  write_synth_split(dir, "train", corrclust::generate_synthetic(train_cfg),
                    manifest);
  write_synth_split(dir, "test", corrclust::generate_synthetic(test_cfg),
                    manifest);

  json& body = manifest.body();
  body["seed"] = g.seed;
  body["config"]["n"] = opts.synth.n;
  body["config"]["test_n"] = test_cfg.n;
  body["config"]["noise_sd"] = opts.synth.noise_sd;
  body["config"]["map_prob"] = opts.synth.map_prob;
  body["config"]["mean1"] = opts.mean1;
  body["config"]["mean2"] = opts.mean2;
  body["config"]["cov"] = opts.cov;
  body["config"]["map1"] = opts.map1;
  body["config"]["map2"] = opts.map2;
  manifest.write(dir);
  note(g, "wrote train/test splits to " + dir.string());
  return 0;
}

// ---------------------------------------------------------------------------
// cluster

struct ClusterOpts {
  std::string method;
  std::string x_path;
  std::string y_path;
  FitConfig cfg;
  bool center = true;
  bool scale = true;
};

int run_cluster(const GlobalOpts& g, ClusterOpts opts,
                const std::vector<std::string>& argv) {
  opts.cfg.seed = g.seed;
  Manifest manifest("cluster", argv);
  const fs::path dir = ensure_out_dir(g);

  corrclust::ClusterResult result;
  json result_json;
  std::vector<std::string> keys;

  if (opts.method == "kmeans") {
    manifest.add_input(opts.x_path);
    // Single-view method: only the X file is used.
    corrclust::CsvTable table = corrclust::read_csv(opts.x_path);
    Matrix x(table.rows.size(), table.header.size() - 1);
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      keys.push_back(table.rows[i][0]);
      for (std::size_t j = 1; j < table.header.size(); ++j) {
        x(i, j - 1) = corrclust::parse_double(table.rows[i][j], opts.x_path);
      }
    }
    auto [xp, x_stats] =
        corrclust::standardize_columns(x, opts.center, opts.scale);
    const corrclust::KmeansResult km =
        corrclust::kmeans_detail(xp, opts.cfg.k, opts.cfg);
    result_json["method"] = "kmeans";
    result_json["labels"] = km.labels;
    json models = json::array();
    for (Eigen::Index i = 0; i < km.centroids.rows(); ++i) {
      json model;
      model["centroid"] = json::array();
      for (Eigen::Index j = 0; j < km.centroids.cols(); ++j) {
        model["centroid"].push_back(km.centroids(i, j));
      }
      models.push_back(std::move(model));
    }
    result_json["models"] = std::move(models);
    result_json["objective"] = km.objective;
    result_json["objective_trace"] = km.objective_trace;
    result_json["converged"] = km.converged;
    result_json["iterations"] = km.iterations;
    result_json["seed_used"] = km.seed_used;
    result_json["config"] = corrclust::fit_config_to_json(opts.cfg);
    result.labels = km.labels;
  } else {
    manifest.add_input(opts.x_path);
    manifest.add_input(opts.y_path);
    corrclust::DataPair pair =
        corrclust::load_two_view_csv(opts.x_path, opts.y_path);
    keys = pair.keys;
    auto [xp, x_stats] =
        corrclust::standardize_columns(pair.x, opts.center, opts.scale);
    auto [yp, y_stats] =
        corrclust::standardize_columns(pair.y, opts.center, opts.scale);

    if (opts.method == "cls") {
      result = corrclust::cls_cluster(xp, yp, opts.cfg);
    } else if (opts.method == "cca") {
      result = corrclust::cca_cluster(xp, yp, opts.cfg);
    } else if (opts.method == "clusterwise") {
      if (yp.cols() != 1) {
        throw std::invalid_argument(
            "clusterwise needs a single-column Y file");
      }
      result = corrclust::clusterwise_regression(xp, yp, opts.cfg.k, opts.cfg);
    } else {
      throw std::invalid_argument("unknown method '" + opts.method + "'");
    }
    result_json = corrclust::cluster_result_to_json(result, opts.method,
                                                    opts.cfg, x_stats, y_stats);
    if (pair.dropped_rows > 0) {
      result_json["dropped_rows"] = pair.dropped_rows;
      note(g, "dropped " + std::to_string(pair.dropped_rows) +
                  " unmatched/incomplete rows");
    }
  }

  result_json["manifest"] = "manifest.json";
  const auto result_path = (dir / "result.json").string();
  const auto labels_path = (dir / "labels.csv").string();
  write_json_file(result_path, result_json);
  std::vector<std::vector<std::string>> rows(result.labels.size());
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    rows[i] = {keys[i], std::to_string(result.labels[i])};
  }
  corrclust::write_csv(labels_path, {"id", "label"}, rows);
  manifest.add_output(result_path);
  manifest.add_output(labels_path);
  json& body = manifest.body();
  body["seed"] = g.seed;
  body["config"] = result_json["config"];
  body["config"]["method"] = opts.method;
  body["config"]["center"] = opts.center;
  body["config"]["scale"] = opts.scale;
  manifest.write(dir);
  note(g, "wrote result.json and labels.csv to " + dir.string());
  return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOpts {
  std::string pred_path;
  std::string truth_path;
  std::string pred_col = "label";
  std::string truth_col = "corr_label";
  int k = 2;
};

int run_evaluate(const EvaluateOpts& opts) {
  const auto pred = corrclust::read_label_column(opts.pred_path, opts.pred_col);
  const auto truth =
      corrclust::read_label_column(opts.truth_path, opts.truth_col);
  if (pred.size() != truth.size()) {
    throw corrclust::data_error("label files have different lengths");
  }
  const corrclust::AgreementScore score =
      corrclust::label_agreement(truth, pred, opts.k);
  json out;
  out["accuracy"] = score.accuracy;
  out["pearson"] = score.pearson_defined ? json(score.pearson) : json(nullptr);
  out["permutation"] = score.permutation;
  std::cout << out.dump(2) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// elbow

struct ElbowOpts {
  std::string x_path;
  std::string y_path;
  std::vector<int> k_values;
  std::vector<int> m_values;
  FitConfig cfg;
  bool center = true;
  bool scale = true;
};

int run_elbow(const GlobalOpts& g, ElbowOpts opts,
              const std::vector<std::string>& argv) {
  opts.cfg.seed = g.seed;
  Manifest manifest("elbow", argv);
  manifest.add_input(opts.x_path);
  manifest.add_input(opts.y_path);
  const fs::path dir = ensure_out_dir(g);

  corrclust::DataPair pair =
      corrclust::load_two_view_csv(opts.x_path, opts.y_path);
  auto [xp, x_stats] =
      corrclust::standardize_columns(pair.x, opts.center, opts.scale);
  auto [yp, y_stats] =
      corrclust::standardize_columns(pair.y, opts.center, opts.scale);

  const corrclust::ElbowTable table =
      corrclust::elbow_table(xp, yp, opts.k_values, opts.m_values, opts.cfg);
  const auto elbow_path = (dir / "elbow.csv").string();
  {
    std::ofstream out(elbow_path);
    out << corrclust::elbow_csv(table);
    if (!out) {
      throw corrclust::data_error("cannot write " + elbow_path);
    }
  }
  manifest.add_output(elbow_path);
  json& body = manifest.body();
  body["seed"] = g.seed;
  body["config"] = corrclust::fit_config_to_json(opts.cfg);
  body["config"]["k_values"] = opts.k_values;
  body["config"]["m_values"] = opts.m_values;
  body["config"]["center"] = opts.center;
  body["config"]["scale"] = opts.scale;
  manifest.write(dir);
  note(g, "wrote elbow.csv to " + dir.string());
  return 0;
}

// ---------------------------------------------------------------------------
// features

struct FeaturesOpts {
  std::string returns_path;
  std::string index_path;
  std::string pre_start, pre_end, post_start, post_end;
  std::string features = "mean,volatility,skewness,kurtosis,beta,volume";
  bool from_prices = false;
};

int run_features(const GlobalOpts& g, const FeaturesOpts& opts,
                 const std::vector<std::string>& argv) {
  Manifest manifest("features", argv);
  manifest.add_input(opts.returns_path);
  manifest.add_input(opts.index_path);
  const fs::path dir = ensure_out_dir(g);

  const auto spec = corrclust::parse_feature_list(opts.features);
  std::vector<std::string> missing_pre, missing_post;
  const auto pre = corrclust::load_returns_csv(
      opts.returns_path, opts.pre_start, opts.pre_end, opts.from_prices,
      &missing_pre);
  const auto post = corrclust::load_returns_csv(
      opts.returns_path, opts.post_start, opts.post_end, opts.from_prices,
      &missing_post);

  const auto load_index = [&](const std::string& start,
                              const std::string& end) {
    const auto series = corrclust::load_returns_csv(opts.index_path, start,
                                                    end, opts.from_prices);
    if (series.size() != 1) {
      throw corrclust::data_error(
          "index file must contain exactly one ticker");
    }
    return series.front();
  };
  const auto index_pre = load_index(opts.pre_start, opts.pre_end);
  const auto index_post = load_index(opts.post_start, opts.post_end);

  corrclust::FeatureViewReport report;
  const corrclust::DataPair views = corrclust::build_feature_views(
      pre, post, index_pre, index_post, spec, &report);

  const auto pre_path = (dir / "features_pre.csv").string();
  const auto post_path = (dir / "features_post.csv").string();
  corrclust::write_two_view_csv(pre_path, "ticker", views.x_columns,
                                views.keys, views.x);
  corrclust::write_two_view_csv(post_path, "ticker", views.y_columns,
                                views.keys, views.y);

  json report_json;
  report_json["tickers_kept"] = views.keys.size();
  report_json["excluded_missing_era"] = report.excluded_missing_era;
  report_json["excluded_undefined_feature"] = report.excluded_undefined;
  report_json["excluded_tickers"] = report.excluded_tickers;
  report_json["missing_data_pre"] = missing_pre;
  report_json["missing_data_post"] = missing_post;
  report_json["manifest"] = "manifest.json";
  const auto report_path = (dir / "feature_report.json").string();
  write_json_file(report_path, report_json);

  manifest.add_output(pre_path);
  manifest.add_output(post_path);
  manifest.add_output(report_path);
  json& body = manifest.body();
  body["seed"] = g.seed;
  body["config"]["features"] = opts.features;
  body["config"]["pre_start"] = opts.pre_start;
  body["config"]["pre_end"] = opts.pre_end;
  body["config"]["post_start"] = opts.post_start;
  body["config"]["post_end"] = opts.post_end;
  body["config"]["from_prices"] = opts.from_prices;
  manifest.write(dir);
  note(g, "wrote feature views for " + std::to_string(views.keys.size()) +
              " tickers to " + dir.string());
  return 0;
}

void add_fit_config_flags(CLI::App* cmd, FitConfig& cfg, bool with_k_m) {
  if (with_k_m) {
    cmd->add_option("--k", cfg.k, "Number of clusters")->required();
    cmd->add_option("--m", cfg.m, "Number of components (default 1)");
  }
  cmd->add_flag("--intercept,!--no-intercept", cfg.intercept,
                "Augment X with a ones column (default on)");
  cmd->add_option("--max-iter", cfg.max_iter, "Iteration cap (default 100)");
  cmd->add_option("--objective-tol", cfg.objective_tol,
                  "Relative objective-change stop threshold (default 1e-8)");
  cmd->add_option("--n-init", cfg.n_init, "Random restarts (default 10)");
  cmd->add_option("--min-cluster-size", cfg.min_cluster_size,
                  "Smallest cluster kept; 0 = max(d1,d2)+1 (default)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kVersion) +
               " - two-view correlation clustering toolkit"};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--seed", global.seed, "Random seed (default 0)");
  app.add_option("--out-dir", global.out_dir,
                 "Directory for output files (default .)");
  app.add_flag("--quiet", global.quiet, "Suppress progress notes");

  GenerateOpts gen;
  CLI::App* cmd_generate =
      app.add_subcommand("generate", "Write synthetic train/test splits");
  cmd_generate->add_option("--n", gen.synth.n, "Training rows (default 500)");
  cmd_generate->add_option("--test-n", gen.test_n,
                           "Test rows (default: same as --n)");
  cmd_generate->add_option("--noise-sd", gen.synth.noise_sd,
                           "Y noise scale (default 0.1)");
  cmd_generate->add_option("--map-prob", gen.synth.map_prob,
                           "Probability of map 1 (default 0.5)");
  cmd_generate->add_option("--mean1", gen.mean1, "First spatial mean (2 values)")
      ->delimiter(',');
  cmd_generate->add_option("--mean2", gen.mean2,
                           "Second spatial mean (2 values)")
      ->delimiter(',');
  cmd_generate->add_option("--cov", gen.cov,
                           "Shared spatial covariance, row-major (4 values)")
      ->delimiter(',');
  cmd_generate->add_option("--map1", gen.map1,
                           "First linear map, row-major (4 values)")
      ->delimiter(',');
  cmd_generate->add_option("--map2", gen.map2,
                           "Second linear map, row-major (4 values)")
      ->delimiter(',');

  ClusterOpts cluster;
  CLI::App* cmd_cluster =
      app.add_subcommand("cluster", "Fit a clustering method to two views");
  cmd_cluster
      ->add_option("--method", cluster.method,
                   "cls | cca | kmeans | clusterwise")
      ->required();
  cmd_cluster->add_option("--x", cluster.x_path, "X view CSV")->required();
  cmd_cluster->add_option("--y", cluster.y_path,
                          "Y view CSV (unused by kmeans)");
  add_fit_config_flags(cmd_cluster, cluster.cfg, true);
  cmd_cluster->add_flag("--center,!--no-center", cluster.center,
                        "Center columns before fitting (default on)");
  cmd_cluster->add_flag("--scale,!--no-scale", cluster.scale,
                        "Scale columns to unit variance (default on)");

  EvaluateOpts evaluate;
  CLI::App* cmd_evaluate = app.add_subcommand(
      "evaluate", "Best-permutation agreement between two label files");
  cmd_evaluate->add_option("--pred", evaluate.pred_path, "Predicted labels CSV")
      ->required();
  cmd_evaluate->add_option("--truth", evaluate.truth_path, "True labels CSV")
      ->required();
  cmd_evaluate->add_option("--pred-col", evaluate.pred_col,
                           "Column in --pred (default 'label')");
  cmd_evaluate->add_option("--truth-col", evaluate.truth_col,
                           "Column in --truth (default 'corr_label')");
  cmd_evaluate->add_option("--k", evaluate.k, "Number of clusters (default 2)");

  ElbowOpts elbow;
  CLI::App* cmd_elbow = app.add_subcommand(
      "elbow", "Average score R^2 over a (k, m) grid of CLS clusterings");
  cmd_elbow->add_option("--x", elbow.x_path, "X view CSV")->required();
  cmd_elbow->add_option("--y", elbow.y_path, "Y view CSV")->required();
  cmd_elbow->add_option("--k-values", elbow.k_values, "Cluster counts to try")
      ->required()
      ->delimiter(',');
  cmd_elbow->add_option("--m-values", elbow.m_values, "Component counts to try")
      ->required()
      ->delimiter(',');
  add_fit_config_flags(cmd_elbow, elbow.cfg, false);
  cmd_elbow->add_flag("--center,!--no-center", elbow.center,
                      "Center columns before fitting (default on)");
  cmd_elbow->add_flag("--scale,!--no-scale", elbow.scale,
                      "Scale columns to unit variance (default on)");

  FeaturesOpts features;
  CLI::App* cmd_features = app.add_subcommand(
      "features", "Extract pre/post era return features into two views");
  cmd_features
      ->add_option("--returns", features.returns_path,
                   "Long-form returns CSV (date,ticker,return[,volume])")
      ->required();
  cmd_features
      ->add_option("--index", features.index_path,
                   "Index returns CSV (one ticker, same format)")
      ->required();
  cmd_features->add_option("--pre-start", features.pre_start, "ISO date")
      ->required();
  cmd_features->add_option("--pre-end", features.pre_end, "ISO date")
      ->required();
  cmd_features->add_option("--post-start", features.post_start, "ISO date")
      ->required();
  cmd_features->add_option("--post-end", features.post_end, "ISO date")
      ->required();
  cmd_features->add_option(
      "--features", features.features,
      "Comma list of mean,volatility,skewness,kurtosis,beta,volume");
  cmd_features->add_flag("--from-prices", features.from_prices,
                         "Value column holds prices; convert to log returns");

  std::vector<std::string> argv_copy(argv, argv + argc);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (cmd_generate->parsed()) {
      return run_generate(global, gen, argv_copy);
    }
    if (cmd_cluster->parsed()) {
      if (cluster.method != "kmeans" && cluster.y_path.empty()) {
        throw std::invalid_argument("--y is required for method '" +
                                    cluster.method + "'");
      }
      return run_cluster(global, cluster, argv_copy);
    }
    if (cmd_evaluate->parsed()) {
      return run_evaluate(evaluate);
    }
    if (cmd_elbow->parsed()) {
      return run_elbow(global, elbow, argv_copy);
    }
    if (cmd_features->parsed()) {
      return run_features(global, features, argv_copy);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const corrclust::infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const corrclust::data_error& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
