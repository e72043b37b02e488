#pragma once

#include <string>

#include <json.hpp>

#include "corrclust/cca.hpp"
#include "corrclust/cls.hpp"
#include "corrclust/clusterers.hpp"

namespace corrclust {

using json = nlohmann::json;

/// Matrices serialize as row-major nested arrays.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

/// CLS model object: fields "u", "v", "eigenvalues", "intercept" plus the
/// preprocessing stats "x_means", "x_scales", "y_means", "y_scales" so a
/// serialized model can score raw data on its own.
json cls_model_to_json(const ClsComponents& c, const ColumnStats& x_stats,
                       const ColumnStats& y_stats);
ClsComponents cls_model_from_json(const json& j, ColumnStats* x_stats = nullptr,
                                  ColumnStats* y_stats = nullptr);

/// CCA model object: the CLS schema plus "correlations", "alphas", "betas".
json cca_model_to_json(const CcaComponents& c, const ColumnStats& x_stats,
                       const ColumnStats& y_stats);
CcaComponents cca_model_from_json(const json& j,
                                  ColumnStats* x_stats = nullptr,
                                  ColumnStats* y_stats = nullptr);

/// Full clustering outcome: labels, per-cluster models, objective trace,
/// convergence report and the config echo.
json cluster_result_to_json(const ClusterResult& result,
                            const std::string& method, const FitConfig& cfg,
                            const ColumnStats& x_stats,
                            const ColumnStats& y_stats);

json fit_config_to_json(const FitConfig& cfg);

}  // namespace corrclust
