#include "corrclust/clusterers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace corrclust {

namespace detail {

int resolve_min_cluster_size(const FitConfig& cfg, Eigen::Index d1,
                             Eigen::Index d2) {
  if (cfg.min_cluster_size > 0) {
    return cfg.min_cluster_size;
  }
  return static_cast<int>(std::max(d1, d2)) + 1;
}

std::vector<int> random_labels(Rng& rng, int n, int k, int min_size) {
  std::vector<int> labels(n);
  std::vector<int> sizes(k);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::fill(sizes.begin(), sizes.end(), 0);
    for (int p = 0; p < n; ++p) {
      labels[p] = rng.next_int(k);
      ++sizes[labels[p]];
    }
    if (*std::min_element(sizes.begin(), sizes.end()) >= min_size) {
      return labels;
    }
  }
  // Tight n relative to k * min_size: rebalance the last sample
  // deterministically, moving the highest-index members of the largest
  // cluster into deficient ones.
  for (int c = 0; c < k; ++c) {
    while (sizes[c] < min_size) {
      const int donor = static_cast<int>(
          std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
      for (int p = n - 1; p >= 0; --p) {
        if (labels[p] == donor) {
          labels[p] = c;
          --sizes[donor];
          ++sizes[c];
          break;
        }
      }
    }
  }
  return labels;
}

}  // namespace detail

namespace {

using detail::random_labels;
using detail::resolve_min_cluster_size;

std::vector<int> cluster_sizes(const std::vector<int>& labels, int k) {
  std::vector<int> sizes(k, 0);
  for (int label : labels) {
    ++sizes[label];
  }
  return sizes;
}

Matrix gather_rows(const Matrix& m, const std::vector<int>& labels,
                   int cluster) {
  Eigen::Index count = 0;
  for (int label : labels) {
    count += (label == cluster);
  }
  Matrix out(count, m.cols());
  Eigen::Index row = 0;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if (labels[p] == cluster) {
      out.row(row++) = m.row(static_cast<Eigen::Index>(p));
    }
  }
  return out;
}

std::vector<int> argmin_rows(const Matrix& errors) {
  std::vector<int> labels(errors.rows());
  for (Eigen::Index p = 0; p < errors.rows(); ++p) {
    int best = 0;
    for (Eigen::Index i = 1; i < errors.cols(); ++i) {
      if (errors(p, i) < errors(p, best)) {
        best = static_cast<int>(i);
      }
    }
    labels[p] = best;
  }
  return labels;
}

double assigned_error_sum(const Matrix& errors, const std::vector<int>& labels) {
  double total = 0.0;
  for (Eigen::Index p = 0; p < errors.rows(); ++p) {
    total += errors(p, labels[p]);
  }
  return total;
}

// Moves the worst-fitted points of oversized clusters into any cluster that
// fell below min_size, one at a time. Total deficiency shrinks by one per
// move, so this terminates.
bool repair_undersized(std::vector<int>& labels, const Matrix& errors, int k,
                       int min_size) {
  std::vector<int> sizes = cluster_sizes(labels, k);
  bool moved = false;
  for (int c = 0; c < k; ++c) {
    while (sizes[c] < min_size) {
      Eigen::Index best_p = -1;
      double best_e = -1.0;
      for (Eigen::Index p = 0; p < static_cast<Eigen::Index>(labels.size());
           ++p) {
        if (sizes[labels[p]] > min_size &&
            (best_p < 0 || errors(p, labels[p]) > best_e)) {
          best_p = p;
          best_e = errors(p, labels[p]);
        }
      }
      --sizes[labels[best_p]];
      labels[best_p] = c;
      ++sizes[c];
      moved = true;
    }
  }
  return moved;
}

Matrix cls_error_matrix(const std::vector<ClsComponents>& models,
                        const Matrix& x, const Matrix& y) {
  Matrix errors(x.rows(), static_cast<Eigen::Index>(models.size()));
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto [sx, sy] = cls_transform(models[i], x, y);
    errors.col(static_cast<Eigen::Index>(i)) =
        (sy - sx).rowwise().squaredNorm();
  }
  return errors;
}

// Weighted sum of squared canonical-regression residuals per point and
// cluster; weight of component j is r_j / r_1, or 1 when the leading
// correlation vanishes.
Matrix cca_error_matrix(const std::vector<CcaComponents>& models,
                        const Matrix& x, const Matrix& y) {
  Matrix errors = Matrix::Zero(x.rows(), static_cast<Eigen::Index>(models.size()));
  for (std::size_t i = 0; i < models.size(); ++i) {
    const CcaComponents& c = models[i];
    const Matrix sx = x * c.u;
    const Matrix sy = y * c.v;
    const double r1 = c.correlations[0];
    for (Eigen::Index j = 0; j < c.u.cols(); ++j) {
      const double weight = r1 > 1e-12 ? c.correlations[j] / r1 : 1.0;
      errors.col(static_cast<Eigen::Index>(i)) +=
          weight * (sy.col(j).array() - c.alphas[j] -
                    c.betas[j] * sx.col(j).array())
                       .square()
                       .matrix();
    }
  }
  return errors;
}

void validate_pair(const Matrix& x, const Matrix& y, const char* who) {
  if (x.rows() != y.rows()) {
    throw std::invalid_argument(std::string(who) + ": X and Y row counts differ");
  }
  if (!x.allFinite() || !y.allFinite()) {
    throw data_error(std::string(who) + ": input contains NaN or Inf");
  }
}

void validate_config(const FitConfig& cfg, Eigen::Index n, Eigen::Index d1,
                     Eigen::Index d2, int min_size, const char* who) {
  if (cfg.k < 1) {
    throw std::invalid_argument(std::string(who) + ": k must be >= 1");
  }
  if (cfg.m < 1 || cfg.m > std::min(d1, d2)) {
    throw std::invalid_argument(std::string(who) +
                                ": m must be in [1, min(d1, d2)]");
  }
  if (cfg.n_init < 1 || cfg.max_iter < 1 || cfg.objective_tol < 0.0) {
    throw std::invalid_argument(std::string(who) + ": invalid iteration config");
  }
  if (n < static_cast<Eigen::Index>(cfg.k) * min_size) {
    throw infeasible_error(std::string(who) + ": n = " + std::to_string(n) +
                           " is below k * min_cluster_size = " +
                           std::to_string(cfg.k * min_size));
  }
}

ClusterResult run_cls_once(const Matrix& x, const Matrix& y,
                           const FitConfig& cfg, int min_size,
                           std::uint64_t seed) {
  const int n = static_cast<int>(x.rows());
  Rng rng(seed);
  std::vector<int> labels = random_labels(rng, n, cfg.k, min_size);

  ClusterResult res;
  res.seed_used = seed;
  std::vector<ClsComponents> models(cfg.k);
  double prev_obj = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    double fit_obj = 0.0;
    for (int i = 0; i < cfg.k; ++i) {
      auto [comp, report] = fit_cls(gather_rows(x, labels, i),
                                    gather_rows(y, labels, i), cfg.m,
                                    cfg.intercept);
      models[i] = std::move(comp);
      fit_obj += report.objective;
    }
    res.objective_trace.push_back(fit_obj);

    const Matrix errors = cls_error_matrix(models, x, y);
    std::vector<int> new_labels = argmin_rows(errors);
    if (repair_undersized(new_labels, errors, cfg.k, min_size)) {
      ++res.repair_events;
    }
    const double label_obj = assigned_error_sum(errors, new_labels);
    res.objective_trace.push_back(label_obj);
    res.iterations = iter;
    if (cfg.record_history) {
      res.label_history.push_back(new_labels);
    }

    if (new_labels == labels) {
      res.converged = true;
      res.objective = fit_obj;
      break;
    }
    labels = std::move(new_labels);
    if (std::abs(label_obj - prev_obj) <=
        cfg.objective_tol * std::max(std::abs(prev_obj), 1e-300)) {
      break;
    }
    prev_obj = label_obj;
  }

  res.labels = labels;
  if (!res.converged) {
    // Stopped on the tolerance or iteration cap; refit so the reported
    // models and objective describe the final labeling.
    double obj = 0.0;
    for (int i = 0; i < cfg.k; ++i) {
      auto [comp, report] = fit_cls(gather_rows(x, labels, i),
                                    gather_rows(y, labels, i), cfg.m,
                                    cfg.intercept);
      models[i] = std::move(comp);
      obj += report.objective;
    }
    res.objective = obj;
  }
  res.cls_models = std::move(models);
  return res;
}

ClusterResult run_clusterwise_once(const Matrix& x, const Matrix& y_col,
                                   const FitConfig& cfg, int min_size,
                                   std::uint64_t seed) {
  const int n = static_cast<int>(x.rows());
  Rng rng(seed);
  std::vector<int> labels = random_labels(rng, n, cfg.k, min_size);

  ClusterResult res;
  res.seed_used = seed;
  std::vector<ClsComponents> models(cfg.k);

  const auto ols_fit = [&](int i, double* rss) {
    const Matrix x_aug =
        augment_intercept(gather_rows(x, labels, i), cfg.intercept);
    const Matrix rows_y = gather_rows(y_col, labels, i);
    if (x_aug.rows() < x_aug.cols()) {
      throw infeasible_error("clusterwise_regression: cluster too small");
    }
    ClsComponents comp;
    comp.intercept = cfg.intercept;
    comp.u = least_squares_solve(x_aug, rows_y);
    comp.v = Matrix::Ones(1, 1);
    *rss = (x_aug * comp.u - rows_y).squaredNorm();
    comp.eigenvalues = Vector::Constant(1, *rss);
    return comp;
  };

  double prev_obj = std::numeric_limits<double>::infinity();
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    double fit_obj = 0.0;
    for (int i = 0; i < cfg.k; ++i) {
      double rss = 0.0;
      models[i] = ols_fit(i, &rss);
      fit_obj += rss;
    }
    res.objective_trace.push_back(fit_obj);

    const Matrix errors = cls_error_matrix(models, x, y_col);
    std::vector<int> new_labels = argmin_rows(errors);
    if (repair_undersized(new_labels, errors, cfg.k, min_size)) {
      ++res.repair_events;
    }
    const double label_obj = assigned_error_sum(errors, new_labels);
    res.objective_trace.push_back(label_obj);
    res.iterations = iter;
    if (cfg.record_history) {
      res.label_history.push_back(new_labels);
    }

    if (new_labels == labels) {
      res.converged = true;
      res.objective = fit_obj;
      break;
    }
    labels = std::move(new_labels);
    if (std::abs(label_obj - prev_obj) <=
        cfg.objective_tol * std::max(std::abs(prev_obj), 1e-300)) {
      break;
    }
    prev_obj = label_obj;
  }

  res.labels = labels;
  if (!res.converged) {
    double obj = 0.0;
    for (int i = 0; i < cfg.k; ++i) {
      double rss = 0.0;
      models[i] = ols_fit(i, &rss);
      obj += rss;
    }
    res.objective = obj;
  }
  res.cls_models = std::move(models);
  return res;
}

ClusterResult run_cca_once(const Matrix& x, const Matrix& y,
                           const FitConfig& cfg, int min_size,
                           std::uint64_t seed) {
  const int n = static_cast<int>(x.rows());
  Rng rng(seed);
  std::vector<int> labels = random_labels(rng, n, cfg.k, min_size);

  ClusterResult res;
  res.seed_used = seed;
  std::vector<CcaComponents> models(cfg.k);
  std::vector<CcaComponents> best_models;
  std::vector<int> best_labels;
  double best_obj = std::numeric_limits<double>::infinity();
  double prev_obj = std::numeric_limits<double>::infinity();

  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    for (int i = 0; i < cfg.k; ++i) {
      const Matrix rows_x = gather_rows(x, labels, i);
      const Matrix rows_y = gather_rows(y, labels, i);
      try {
        models[i] = fit_canonical_regressions(fit_cca(rows_x, rows_y, cfg.m),
                                              rows_x, rows_y);
      } catch (const std::invalid_argument& e) {
        // Degenerate cluster (cross-covariance rank below m): this restart
        // cannot proceed, but others may.
        throw infeasible_error(std::string("cca_cluster: ") + e.what());
      }
    }

    const Matrix errors = cca_error_matrix(models, x, y);
    res.objective_trace.push_back(assigned_error_sum(errors, labels));

    std::vector<int> new_labels = argmin_rows(errors);
    if (repair_undersized(new_labels, errors, cfg.k, min_size)) {
      ++res.repair_events;
    }
    const double label_obj = assigned_error_sum(errors, new_labels);
    res.objective_trace.push_back(label_obj);
    res.iterations = iter;
    if (cfg.record_history) {
      res.label_history.push_back(new_labels);
    }

    if (label_obj < best_obj) {
      best_obj = label_obj;
      best_labels = new_labels;
      best_models = models;
    }

    if (new_labels == labels) {
      res.converged = true;
      break;
    }
    labels = std::move(new_labels);
    if (std::abs(label_obj - prev_obj) <=
        cfg.objective_tol * std::max(std::abs(prev_obj), 1e-300)) {
      break;
    }
    prev_obj = label_obj;
  }

  res.labels = std::move(best_labels);
  res.cca_models = std::move(best_models);
  res.objective = best_obj;
  return res;
}

struct KmeansRun {
  KmeansResult result;
  double objective = std::numeric_limits<double>::infinity();
};

KmeansResult run_kmeans_once(const Matrix& m, int k, const FitConfig& cfg,
                             std::uint64_t seed) {
  const Eigen::Index n = m.rows();
  Rng rng(seed);

  // Forgy initialization: k distinct rows chosen by partial Fisher-Yates.
  std::vector<Eigen::Index> order(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    order[i] = i;
  }
  Matrix centroids(k, m.cols());
  for (int i = 0; i < k; ++i) {
    const int j = i + rng.next_int(static_cast<int>(n) - i);
    std::swap(order[i], order[j]);
    centroids.row(i) = m.row(order[i]);
  }

  KmeansResult res;
  res.seed_used = seed;
  std::vector<int> labels(n, -1);

  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    Matrix dist(n, k);
    for (int i = 0; i < k; ++i) {
      dist.col(i) = (m.rowwise() - centroids.row(i)).rowwise().squaredNorm();
    }
    std::vector<int> new_labels = argmin_rows(dist);

    // Reseed empty clusters from the farthest point.
    std::vector<int> sizes = cluster_sizes(new_labels, k);
    for (int c = 0; c < k; ++c) {
      if (sizes[c] > 0) {
        continue;
      }
      Eigen::Index far_p = -1;
      double far_d = -1.0;
      for (Eigen::Index p = 0; p < n; ++p) {
        if (sizes[new_labels[p]] > 1 && dist(p, new_labels[p]) > far_d) {
          far_p = p;
          far_d = dist(p, new_labels[p]);
        }
      }
      --sizes[new_labels[far_p]];
      new_labels[far_p] = c;
      ++sizes[c];
      centroids.row(c) = m.row(far_p);
    }

    for (int i = 0; i < k; ++i) {
      centroids.row(i) = gather_rows(m, new_labels, i).colwise().mean();
    }
    double obj = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      obj += (m.row(p) - centroids.row(new_labels[p])).squaredNorm();
    }
    res.objective_trace.push_back(obj);
    res.objective = obj;
    res.iterations = iter;

    if (new_labels == labels) {
      res.converged = true;
      break;
    }
    labels = std::move(new_labels);
  }
  res.labels = labels;
  res.centroids = std::move(centroids);
  return res;
}

}  // namespace

ClusterResult cls_cluster(const Matrix& x, const Matrix& y,
                          const FitConfig& cfg) {
  validate_pair(x, y, "cls_cluster");
  const int min_size = resolve_min_cluster_size(cfg, x.cols(), y.cols());
  validate_config(cfg, x.rows(), x.cols(), y.cols(), min_size, "cls_cluster");
  return multi_restart(
      [&](std::uint64_t seed) {
        return run_cls_once(x, y, cfg, min_size, seed);
      },
      cfg);
}

std::vector<int> cls_label_step(const std::vector<ClsComponents>& models,
                                const Matrix& x, const Matrix& y) {
  if (models.empty()) {
    throw std::invalid_argument("cls_label_step: no models");
  }
  for (const auto& model : models) {
    if (model.v.cols() != models.front().v.cols() ||
        model.intercept != models.front().intercept) {
      throw std::invalid_argument(
          "cls_label_step: models disagree on m or intercept");
    }
  }
  return argmin_rows(cls_error_matrix(models, x, y));
}

ClusterResult cca_cluster(const Matrix& x, const Matrix& y,
                          const FitConfig& cfg) {
  validate_pair(x, y, "cca_cluster");
  const int min_size = resolve_min_cluster_size(cfg, x.cols(), y.cols());
  validate_config(cfg, x.rows(), x.cols(), y.cols(), min_size, "cca_cluster");
  return multi_restart(
      [&](std::uint64_t seed) {
        return run_cca_once(x, y, cfg, min_size, seed);
      },
      cfg);
}

ClusterResult clusterwise_regression(const Matrix& x, const Matrix& y_col,
                                     int k, const FitConfig& cfg) {
  if (y_col.cols() != 1) {
    throw std::invalid_argument(
        "clusterwise_regression: second view must be a single column");
  }
  validate_pair(x, y_col, "clusterwise_regression");
  FitConfig local = cfg;
  local.k = k;
  local.m = 1;
  const int min_size = resolve_min_cluster_size(local, x.cols(), 1);
  validate_config(local, x.rows(), x.cols(), 1, min_size,
                  "clusterwise_regression");
  return multi_restart(
      [&](std::uint64_t seed) {
        return run_clusterwise_once(x, y_col, local, min_size, seed);
      },
      local);
}

KmeansResult kmeans_detail(const Matrix& m, int k, const FitConfig& cfg) {
  if (!m.allFinite()) {
    throw data_error("kmeans: input contains NaN or Inf");
  }
  if (k < 1) {
    throw std::invalid_argument("kmeans: k must be >= 1");
  }
  if (m.rows() < k) {
    throw std::invalid_argument("kmeans: k exceeds the number of rows");
  }
  if (cfg.max_iter < 1) {
    throw std::invalid_argument("kmeans: max_iter must be >= 1");
  }
  return multi_restart(
      [&](std::uint64_t seed) { return run_kmeans_once(m, k, cfg, seed); },
      cfg);
}

std::vector<int> kmeans(const Matrix& m, int k, const FitConfig& cfg) {
  return kmeans_detail(m, k, cfg).labels;
}

}  // namespace corrclust
