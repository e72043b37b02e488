#include "corrclust/ingest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "corrclust/csv.hpp"
#include "corrclust/errors.hpp"

namespace corrclust {

namespace {

double population_cov(const std::vector<double>& a,
                      const std::vector<double>& b) {
  const auto n = static_cast<double>(a.size());
  double ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    ma += a[i];
    mb += b[i];
  }
  ma /= n;
  mb /= n;
  double cov = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - ma) * (b[i] - mb);
  }
  return cov / n;
}

double central_moment(const std::vector<double>& a, int order) {
  const auto n = static_cast<double>(a.size());
  double mean = 0.0;
  for (double v : a) {
    mean += v;
  }
  mean /= n;
  double m = 0.0;
  for (double v : a) {
    m += std::pow(v - mean, order);
  }
  return m / n;
}

}  // namespace

std::vector<Feature> parse_feature_list(const std::string& names) {
  static const std::map<std::string, Feature> lookup = {
      {"mean", Feature::kMean},         {"volatility", Feature::kVolatility},
      {"skewness", Feature::kSkewness}, {"kurtosis", Feature::kKurtosis},
      {"beta", Feature::kBeta},         {"volume", Feature::kVolume}};
  std::vector<Feature> features;
  std::istringstream stream(names);
  std::string name;
  while (std::getline(stream, name, ',')) {
    const auto it = lookup.find(name);
    if (it == lookup.end()) {
      throw std::invalid_argument("unknown feature '" + name + "'");
    }
    features.push_back(it->second);
  }
  if (features.empty()) {
    throw std::invalid_argument("empty feature list");
  }
  return features;
}

std::string feature_name(Feature f) {
  switch (f) {
    case Feature::kMean:
      return "mean";
    case Feature::kVolatility:
      return "volatility";
    case Feature::kSkewness:
      return "skewness";
    case Feature::kKurtosis:
      return "kurtosis";
    case Feature::kBeta:
      return "beta";
    case Feature::kVolume:
      return "volume";
  }
  return "";
}

FeatureRow compute_features(const ReturnSeries& series,
                            const ReturnSeries& index,
                            const std::vector<Feature>& spec) {
  if (series.returns.size() < 3) {
    throw std::invalid_argument("compute_features: needs at least 3 returns");
  }
  if (series.returns.size() != index.returns.size()) {
    throw std::invalid_argument(
        "compute_features: series and index are not aligned");
  }
  for (double v : series.returns) {
    if (!std::isfinite(v)) {
      throw data_error("compute_features: non-finite return");
    }
  }

  const double m2 = central_moment(series.returns, 2);
  FeatureRow row;
  for (Feature f : spec) {
    double value = 0.0;
    bool defined = true;
    switch (f) {
      case Feature::kMean:
        value = std::accumulate(series.returns.begin(), series.returns.end(),
                                0.0) /
                static_cast<double>(series.returns.size());
        break;
      case Feature::kVolatility:
        value = std::sqrt(m2);
        break;
      case Feature::kSkewness:
        if (m2 > 0.0) {
          value = central_moment(series.returns, 3) / std::pow(m2, 1.5);
        } else {
          defined = false;
        }
        break;
      case Feature::kKurtosis:
        if (m2 > 0.0) {
          value = central_moment(series.returns, 4) / (m2 * m2);
        } else {
          defined = false;
        }
        break;
      case Feature::kBeta: {
        const double index_var = population_cov(index.returns, index.returns);
        if (index_var > 0.0) {
          value = population_cov(series.returns, index.returns) / index_var;
        } else {
          defined = false;
        }
        break;
      }
      case Feature::kVolume:
        if (series.has_volumes &&
            series.volumes.size() == series.returns.size()) {
          value = std::accumulate(series.volumes.begin(),
                                  series.volumes.end(), 0.0);
        } else {
          defined = false;
        }
        break;
    }
    row.values.push_back(defined ? value : 0.0);
    row.defined.push_back(defined);
  }
  return row;
}

DataPair load_two_view_csv(const std::string& path_x,
                           const std::string& path_y) {
  const CsvTable tx = read_csv(path_x);
  const CsvTable ty = read_csv(path_y);
  if (tx.header.size() < 2 || ty.header.size() < 2) {
    throw data_error("two-view files need an id column and data columns");
  }

  std::map<std::string, std::size_t> y_index;
  for (std::size_t r = 0; r < ty.rows.size(); ++r) {
    if (!y_index.emplace(ty.rows[r][0], r).second) {
      throw data_error(path_y + ": duplicate key '" + ty.rows[r][0] + "'");
    }
  }
  std::set<std::string> x_seen;

  const auto row_complete = [](const std::vector<std::string>& row) {
    return std::none_of(row.begin(), row.end(),
                        [](const std::string& cell) { return cell.empty(); });
  };

  DataPair pair;
  pair.x_columns.assign(tx.header.begin() + 1, tx.header.end());
  pair.y_columns.assign(ty.header.begin() + 1, ty.header.end());

  std::vector<std::pair<std::size_t, std::size_t>> matched;
  for (std::size_t r = 0; r < tx.rows.size(); ++r) {
    const std::string& key = tx.rows[r][0];
    if (!x_seen.insert(key).second) {
      throw data_error(path_x + ": duplicate key '" + key + "'");
    }
    const auto it = y_index.find(key);
    if (it == y_index.end() || !row_complete(tx.rows[r]) ||
        !row_complete(ty.rows[it->second])) {
      ++pair.dropped_rows;
      continue;
    }
    matched.emplace_back(r, it->second);
    pair.keys.push_back(key);
  }
  // Keys present only in the Y file also count as dropped.
  for (const auto& [key, unused] : y_index) {
    if (!x_seen.count(key)) {
      ++pair.dropped_rows;
    }
  }
  if (matched.empty()) {
    throw data_error("no rows shared between " + path_x + " and " + path_y);
  }

  pair.x.resize(matched.size(), tx.header.size() - 1);
  pair.y.resize(matched.size(), ty.header.size() - 1);
  for (std::size_t i = 0; i < matched.size(); ++i) {
    const auto& [rx, ry] = matched[i];
    for (std::size_t j = 1; j < tx.header.size(); ++j) {
      pair.x(i, j - 1) = parse_double(tx.rows[rx][j], path_x);
    }
    for (std::size_t j = 1; j < ty.header.size(); ++j) {
      pair.y(i, j - 1) = parse_double(ty.rows[ry][j], path_y);
    }
  }
  return pair;
}

DataPair build_feature_views(const std::vector<ReturnSeries>& pre_era,
                             const std::vector<ReturnSeries>& post_era,
                             const ReturnSeries& index_pre,
                             const ReturnSeries& index_post,
                             const std::vector<Feature>& spec,
                             FeatureViewReport* report) {
  std::map<std::string, const ReturnSeries*> pre_map, post_map;
  for (const auto& s : pre_era) {
    pre_map[s.ticker] = &s;
  }
  for (const auto& s : post_era) {
    post_map[s.ticker] = &s;
  }

  FeatureViewReport local;
  FeatureViewReport* rep = report ? report : &local;

  std::vector<std::string> tickers;
  std::vector<FeatureRow> pre_rows, post_rows;
  std::set<std::string> universe;
  for (const auto& [ticker, unused] : pre_map) {
    universe.insert(ticker);
  }
  for (const auto& [ticker, unused] : post_map) {
    universe.insert(ticker);
  }

  for (const std::string& ticker : universe) {
    const auto pre_it = pre_map.find(ticker);
    const auto post_it = post_map.find(ticker);
    if (pre_it == pre_map.end() || post_it == post_map.end() ||
        pre_it->second->returns.size() != index_pre.returns.size() ||
        post_it->second->returns.size() != index_post.returns.size() ||
        pre_it->second->returns.size() < 3 ||
        post_it->second->returns.size() < 3) {
      ++rep->excluded_missing_era;
      rep->excluded_tickers.push_back(ticker);
      continue;
    }
    FeatureRow pre_row = compute_features(*pre_it->second, index_pre, spec);
    FeatureRow post_row = compute_features(*post_it->second, index_post, spec);
    const auto all_defined = [](const FeatureRow& row) {
      return std::all_of(row.defined.begin(), row.defined.end(),
                         [](bool d) { return d; });
    };
    if (!all_defined(pre_row) || !all_defined(post_row)) {
      ++rep->excluded_undefined;
      rep->excluded_tickers.push_back(ticker);
      continue;
    }
    tickers.push_back(ticker);
    pre_rows.push_back(std::move(pre_row));
    post_rows.push_back(std::move(post_row));
  }
  if (tickers.empty()) {
    throw data_error("build_feature_views: no ticker has both eras");
  }

  const auto d = static_cast<Eigen::Index>(spec.size());
  Matrix x(tickers.size(), d), y(tickers.size(), d);
  for (std::size_t i = 0; i < tickers.size(); ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      x(i, j) = pre_rows[i].values[j];
      y(i, j) = post_rows[i].values[j];
    }
  }

  DataPair pair;
  pair.keys = tickers;
  pair.x = scale_unit_variance(x).first;
  pair.y = scale_unit_variance(y).first;
  for (Feature f : spec) {
    pair.x_columns.push_back(feature_name(f));
    pair.y_columns.push_back(feature_name(f));
  }
  return pair;
}

std::vector<ReturnSeries> load_returns_csv(const std::string& path,
                                           const std::string& start_date,
                                           const std::string& end_date,
                                           bool from_prices,
                                           std::vector<std::string>* missing) {
  const CsvTable table = read_csv(path);
  const std::size_t date_col = column_index(table, "date");
  const std::size_t ticker_col = column_index(table, "ticker");
  const std::size_t value_col =
      column_index(table, from_prices ? "price" : "return");
  std::size_t volume_col = table.header.size();
  const bool has_volume_col =
      std::find(table.header.begin(), table.header.end(), "volume") !=
      table.header.end();
  if (has_volume_col) {
    volume_col = column_index(table, "volume");
  }

  struct Observation {
    std::string date;
    std::string value;
    std::string volume;
  };
  std::map<std::string, std::vector<Observation>> by_ticker;
  for (const auto& row : table.rows) {
    const std::string& date = row[date_col];
    if (date < start_date || date > end_date) {
      continue;
    }
    by_ticker[row[ticker_col]].push_back(
        {date, row[value_col], has_volume_col ? row[volume_col] : ""});
  }

  std::vector<ReturnSeries> out;
  for (auto& [ticker, observations] : by_ticker) {
    std::sort(observations.begin(), observations.end(),
              [](const Observation& a, const Observation& b) {
                return a.date < b.date;
              });
    for (std::size_t i = 1; i < observations.size(); ++i) {
      if (observations[i].date == observations[i - 1].date) {
        throw data_error(path + ": duplicate date " + observations[i].date +
                         " for ticker " + ticker);
      }
    }

    const bool incomplete = std::any_of(
        observations.begin(), observations.end(),
        [](const Observation& o) { return o.value.empty(); });
    if (incomplete) {
      if (missing) {
        missing->push_back(ticker);
      }
      continue;
    }

    ReturnSeries series;
    series.ticker = ticker;
    series.has_volumes =
        has_volume_col &&
        std::none_of(observations.begin(), observations.end(),
                     [](const Observation& o) { return o.volume.empty(); });
    std::vector<double> values;
    for (const auto& o : observations) {
      values.push_back(parse_double(o.value, path));
      if (series.has_volumes) {
        series.volumes.push_back(parse_double(o.volume, path));
      }
    }
    if (from_prices) {
      std::vector<double> returns;
      for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] <= 0.0 || values[i - 1] <= 0.0) {
          throw data_error(path + ": non-positive price for ticker " + ticker);
        }
        returns.push_back(std::log(values[i]) - std::log(values[i - 1]));
      }
      series.returns = std::move(returns);
      if (series.has_volumes) {
        series.volumes.erase(series.volumes.begin());
      }
    } else {
      series.returns = std::move(values);
    }
    out.push_back(std::move(series));
  }
  return out;
}

}  // namespace corrclust
