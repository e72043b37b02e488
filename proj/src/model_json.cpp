#include "corrclust/model_json.hpp"

namespace corrclust {

namespace {

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
  }
  return out;
}

Vector vector_from_json(const json& j) {
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return v;
}

void stats_to_json(json& out, const ColumnStats& x_stats,
                   const ColumnStats& y_stats) {
  out["x_means"] = vector_to_json(x_stats.means);
  out["x_scales"] = vector_to_json(x_stats.scales);
  out["y_means"] = vector_to_json(y_stats.means);
  out["y_scales"] = vector_to_json(y_stats.scales);
}

void stats_from_json(const json& j, ColumnStats* x_stats,
                     ColumnStats* y_stats) {
  if (x_stats) {
    x_stats->means = vector_from_json(j.at("x_means"));
    x_stats->scales = vector_from_json(j.at("x_scales"));
  }
  if (y_stats) {
    y_stats->means = vector_from_json(j.at("y_means"));
    y_stats->scales = vector_from_json(j.at("y_scales"));
  }
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(m(i, j));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols =
      rows > 0 ? static_cast<Eigen::Index>(j[0].size()) : Eigen::Index{0};
  Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = j[r][c].get<double>();
    }
  }
  return m;
}

json cls_model_to_json(const ClsComponents& c, const ColumnStats& x_stats,
                       const ColumnStats& y_stats) {
  json out;
  out["u"] = matrix_to_json(c.u);
  out["v"] = matrix_to_json(c.v);
  out["eigenvalues"] = vector_to_json(c.eigenvalues);
  out["intercept"] = c.intercept;
  stats_to_json(out, x_stats, y_stats);
  return out;
}

ClsComponents cls_model_from_json(const json& j, ColumnStats* x_stats,
                                  ColumnStats* y_stats) {
  ClsComponents c;
  c.u = matrix_from_json(j.at("u"));
  c.v = matrix_from_json(j.at("v"));
  c.eigenvalues = vector_from_json(j.at("eigenvalues"));
  c.intercept = j.at("intercept").get<bool>();
  stats_from_json(j, x_stats, y_stats);
  return c;
}

json cca_model_to_json(const CcaComponents& c, const ColumnStats& x_stats,
                       const ColumnStats& y_stats) {
  json out;
  out["u"] = matrix_to_json(c.u);
  out["v"] = matrix_to_json(c.v);
  out["correlations"] = vector_to_json(c.correlations);
  out["alphas"] = vector_to_json(c.alphas);
  out["betas"] = vector_to_json(c.betas);
  out["covariance_singular"] = c.covariance_singular;
  stats_to_json(out, x_stats, y_stats);
  return out;
}

CcaComponents cca_model_from_json(const json& j, ColumnStats* x_stats,
                                  ColumnStats* y_stats) {
  CcaComponents c;
  c.u = matrix_from_json(j.at("u"));
  c.v = matrix_from_json(j.at("v"));
  c.correlations = vector_from_json(j.at("correlations"));
  c.alphas = vector_from_json(j.at("alphas"));
  c.betas = vector_from_json(j.at("betas"));
  c.covariance_singular = j.value("covariance_singular", false);
  stats_from_json(j, x_stats, y_stats);
  return c;
}

json fit_config_to_json(const FitConfig& cfg) {
  json out;
  out["k"] = cfg.k;
  out["m"] = cfg.m;
  out["intercept"] = cfg.intercept;
  out["max_iter"] = cfg.max_iter;
  out["objective_tol"] = cfg.objective_tol;
  out["n_init"] = cfg.n_init;
  out["seed"] = cfg.seed;
  out["min_cluster_size"] = cfg.min_cluster_size;
  return out;
}

json cluster_result_to_json(const ClusterResult& result,
                            const std::string& method, const FitConfig& cfg,
                            const ColumnStats& x_stats,
                            const ColumnStats& y_stats) {
  json out;
  out["method"] = method;
  out["labels"] = result.labels;
  json models = json::array();
  for (const auto& model : result.cls_models) {
    models.push_back(cls_model_to_json(model, x_stats, y_stats));
  }
  for (const auto& model : result.cca_models) {
    models.push_back(cca_model_to_json(model, x_stats, y_stats));
  }
  out["models"] = std::move(models);
  out["objective"] = result.objective;
  out["objective_trace"] = result.objective_trace;
  out["converged"] = result.converged;
  out["iterations"] = result.iterations;
  out["seed_used"] = result.seed_used;
  out["repair_events"] = result.repair_events;
  out["config"] = fit_config_to_json(cfg);
  return out;
}

}  // namespace corrclust
