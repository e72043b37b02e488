#pragma once

#include <string>
#include <vector>

#include "corrclust/matrix_ops.hpp"

namespace corrclust {

/// Ordered (logarithmic) returns for one ticker, with optional aligned
/// trading volumes.
struct ReturnSeries {
  std::string ticker;
  std::vector<double> returns;
  std::vector<double> volumes;
  bool has_volumes = false;
};

enum class Feature { kMean, kVolatility, kSkewness, kKurtosis, kBeta, kVolume };

/// Parses a comma-separated list of feature names
/// (mean,volatility,skewness,kurtosis,beta,volume).
std::vector<Feature> parse_feature_list(const std::string& names);
std::string feature_name(Feature f);

/// Values aligned with the requested feature list; defined[j] is false for
/// features that could not be computed (zero return variance for
/// skewness/kurtosis, zero index variance for beta, absent volumes).
struct FeatureRow {
  std::vector<double> values;
  std::vector<bool> defined;
};

/// Population moments of the return series: mean, standard deviation,
/// skewness m3/m2^1.5, kurtosis m4/m2^2, beta = Cov(r, index)/Var(index),
/// volume = total trading volume. Series and index must be aligned and have
/// at least 3 observations.
FeatureRow compute_features(const ReturnSeries& series,
                            const ReturnSeries& index,
                            const std::vector<Feature>& spec);

/// Two views over the same row keys, plus the number of rows dropped while
/// pairing.
struct DataPair {
  Matrix x;
  Matrix y;
  std::vector<std::string> keys;
  std::vector<std::string> x_columns;
  std::vector<std::string> y_columns;
  int dropped_rows = 0;
};

/// Loads two two-view CSVs and matches rows by the identifier column. Rows
/// whose key is missing from the other file or that contain a blank cell are
/// dropped and counted; non-numeric cells and duplicate keys are errors.
DataPair load_two_view_csv(const std::string& path_x,
                           const std::string& path_y);

struct FeatureViewReport {
  int excluded_missing_era = 0;
  int excluded_undefined = 0;
  std::vector<std::string> excluded_tickers;
};

/// Per-era feature matrices for the tickers present (with defined features)
/// in both eras, normalized to unit column variance. Rows are ordered by
/// ticker. Throws data_error when no ticker survives.
DataPair build_feature_views(const std::vector<ReturnSeries>& pre_era,
                             const std::vector<ReturnSeries>& post_era,
                             const ReturnSeries& index_pre,
                             const ReturnSeries& index_post,
                             const std::vector<Feature>& spec,
                             FeatureViewReport* report = nullptr);

/// Reads a long-form returns CSV (columns date,ticker,return[,volume],
/// ISO-8601 dates) keeping rows with start <= date <= end, grouped per
/// ticker and ordered by date. Tickers with a blank return cell are dropped
/// and recorded in `missing`. With from_prices, the value column holds
/// prices and is converted to logarithmic returns.
std::vector<ReturnSeries> load_returns_csv(const std::string& path,
                                           const std::string& start_date,
                                           const std::string& end_date,
                                           bool from_prices = false,
                                           std::vector<std::string>* missing =
                                               nullptr);

}  // namespace corrclust
