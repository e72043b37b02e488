#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "corrclust/cca.hpp"
#include "corrclust/cls.hpp"
#include "corrclust/errors.hpp"
#include "corrclust/rng.hpp"

namespace corrclust {

/// Shared configuration for the alternating-optimization clusterers.
struct FitConfig {
  int k = 1;
  int m = 1;
  bool intercept = true;
  int max_iter = 100;
  /// Relative change of the objective between iterations below which the
  /// run stops early.
  double objective_tol = 1e-8;
  int n_init = 10;
  std::uint64_t seed = 0;
  /// Smallest cluster size kept during iteration; 0 resolves to
  /// max(d1, d2) + 1, which keeps every per-cluster fit well-posed.
  int min_cluster_size = 0;
  /// Record the label vector after every labeling step (diagnostic).
  bool record_history = false;
};

/// Outcome of one clustering run (best restart).
///
/// objective_trace holds the objective after every half-step: entry 2t is
/// after the fit step of iteration t, entry 2t+1 after the labeling step.
/// converged means the labeling reached a fixed point (one more iteration
/// would change nothing); runs stopped by objective_tol or max_iter report
/// converged = false.
struct ClusterResult {
  std::vector<int> labels;
  std::vector<ClsComponents> cls_models;
  std::vector<CcaComponents> cca_models;
  std::vector<double> objective_trace;
  double objective = std::numeric_limits<double>::infinity();
  bool converged = false;
  int iterations = 0;
  std::uint64_t seed_used = 0;
  /// Number of labeling steps in which undersized clusters were repaired.
  int repair_events = 0;
  std::vector<std::vector<int>> label_history;
};

/// CLS clustering: alternate per-cluster CLS fits with score-distance
/// labeling, best of cfg.n_init random restarts. X and Y are expected
/// preprocessed (centered, optionally unit variance). For m = 1 the
/// objective trace is non-increasing at every half-step.
ClusterResult cls_cluster(const Matrix& x, const Matrix& y,
                          const FitConfig& cfg);

/// One labeling pass: assigns every observation to the model with the
/// smallest score distance, ties to the lowest cluster index. All models
/// must share m and the intercept flag.
std::vector<int> cls_label_step(const std::vector<ClsComponents>& models,
                                const Matrix& x, const Matrix& y);

/// CCA clustering baseline: alternate per-cluster CCA + canonical
/// regressions with weighted-residual labeling. Convergence is not
/// guaranteed, so the returned labeling is the one with the lowest weighted
/// prediction error seen across all iterations of the best restart.
ClusterResult cca_cluster(const Matrix& x, const Matrix& y,
                          const FitConfig& cfg);

/// Cluster-wise linear regression: per-cluster least squares of the single
/// y column against X, relabeling each point to the cluster with the
/// smallest squared residual. With shared initialization this follows
/// cls_cluster with d2 = 1, m = 1 exactly.
ClusterResult clusterwise_regression(const Matrix& x, const Matrix& y_col,
                                     int k, const FitConfig& cfg);

struct KmeansResult {
  std::vector<int> labels;
  Matrix centroids;
  std::vector<double> objective_trace;
  double objective = std::numeric_limits<double>::infinity();
  bool converged = false;
  int iterations = 0;
  std::uint64_t seed_used = 0;
};

/// Lloyd's algorithm with uniform random point initialization; empty
/// clusters are reseeded from the farthest point. Best of cfg.n_init
/// restarts (k and restart-related fields of cfg apply; m, intercept and
/// min_cluster_size are ignored).
KmeansResult kmeans_detail(const Matrix& m, int k, const FitConfig& cfg);

/// Labels from kmeans_detail.
std::vector<int> kmeans(const Matrix& m, int k, const FitConfig& cfg);

/// Runs cfg.n_init restarts of run_one (called with the derived seed for
/// restart i, see derive_seed) and returns the result with the lowest
/// objective; ties keep the lowest restart index. Restarts that throw
/// infeasible_error are skipped; if every restart fails the last error is
/// rethrown as "all restarts infeasible".
template <typename RunFn>
auto multi_restart(RunFn&& run_one, const FitConfig& cfg) {
  if (cfg.n_init < 1) {
    throw std::invalid_argument("multi_restart: n_init must be >= 1");
  }
  using Result = decltype(run_one(std::uint64_t{}));
  std::optional<Result> best;
  std::string last_error;
  for (int i = 0; i < cfg.n_init; ++i) {
    try {
      Result r = run_one(derive_seed(cfg.seed, i));
      if (!best || r.objective < best->objective) {
        best = std::move(r);
      }
    } catch (const infeasible_error& e) {
      last_error = e.what();
    }
  }
  if (!best) {
    throw infeasible_error("all restarts infeasible: " + last_error);
  }
  return *best;
}

namespace detail {

/// Uniform random labels resampled until every cluster has at least
/// min_size members (bounded attempts, then a deterministic rebalance).
std::vector<int> random_labels(Rng& rng, int n, int k, int min_size);

/// min_cluster_size resolved against the data dimensions.
int resolve_min_cluster_size(const FitConfig& cfg, Eigen::Index d1,
                             Eigen::Index d2);

}  // namespace detail

}  // namespace corrclust
