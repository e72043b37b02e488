#include "corrclust/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace corrclust {

double r_squared(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("r_squared: length mismatch");
  }
  if (a.size() < 2) {
    throw std::invalid_argument("r_squared: needs at least two observations");
  }
  return pearson_r2(a, b);
}

AgreementScore label_agreement(const std::vector<int>& truth,
                               const std::vector<int>& pred, int k) {
  if (truth.size() != pred.size() || truth.empty()) {
    throw std::invalid_argument("label_agreement: length mismatch");
  }
  if (k < 1 || k > 8) {
    throw std::invalid_argument("label_agreement: k must be in [1, 8]");
  }
  for (std::size_t p = 0; p < truth.size(); ++p) {
    if (truth[p] < 0 || truth[p] >= k || pred[p] < 0 || pred[p] >= k) {
      throw std::invalid_argument("label_agreement: label out of range");
    }
  }

  const auto n = truth.size();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);

  AgreementScore score;
  score.accuracy = -1.0;
  do {
    std::size_t matches = 0;
    for (std::size_t p = 0; p < n; ++p) {
      matches += (truth[p] == perm[pred[p]]);
    }
    const double accuracy = static_cast<double>(matches) / n;
    if (accuracy > score.accuracy) {
      score.accuracy = accuracy;
      score.permutation = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (k == 2) {
    Vector a(n), b(n);
    for (std::size_t p = 0; p < n; ++p) {
      a[p] = truth[p];
      b[p] = score.permutation[pred[p]];
    }
    const double nn = static_cast<double>(n);
    const double ma = a.mean();
    const double mb = b.mean();
    const double va = (a.array() - ma).square().sum() / nn;
    const double vb = (b.array() - mb).square().sum() / nn;
    if (va > 0.0 && vb > 0.0) {
      score.pearson =
          (((a.array() - ma) * (b.array() - mb)).sum() / nn) /
          std::sqrt(va * vb);
      score.pearson_defined = true;
    }
  }
  return score;
}

double average_score_r2(const ClusterResult& result, const Matrix& x,
                        const Matrix& y) {
  double total = 0.0;
  int count = 0;
  for (std::size_t i = 0; i < result.cls_models.size(); ++i) {
    std::vector<Eigen::Index> rows;
    for (std::size_t p = 0; p < result.labels.size(); ++p) {
      if (result.labels[p] == static_cast<int>(i)) {
        rows.push_back(static_cast<Eigen::Index>(p));
      }
    }
    Matrix xi(rows.size(), x.cols());
    Matrix yi(rows.size(), y.cols());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      xi.row(r) = x.row(rows[r]);
      yi.row(r) = y.row(rows[r]);
    }
    const auto [sx, sy] = cls_transform(result.cls_models[i], xi, yi);
    for (Eigen::Index j = 0; j < sx.cols(); ++j) {
      total += r_squared(sx.col(j), sy.col(j));
      ++count;
    }
  }
  return count > 0 ? total / count : 0.0;
}

ElbowTable elbow_table(const Matrix& x, const Matrix& y,
                       const std::vector<int>& k_values,
                       const std::vector<int>& m_values,
                       const FitConfig& cfg) {
  if (k_values.empty() || m_values.empty()) {
    throw std::invalid_argument("elbow_table: empty grid");
  }
  ElbowTable table;
  for (int k : k_values) {
    for (int m : m_values) {
      ElbowRow row;
      row.k = k;
      row.m = m;
      FitConfig point = cfg;
      point.k = k;
      point.m = m;
      try {
        const ClusterResult result = cls_cluster(x, y, point);
        row.avg_r2 = average_score_r2(result, x, y);
      } catch (const std::invalid_argument&) {
        row.feasible = false;
        row.avg_r2 = std::numeric_limits<double>::quiet_NaN();
      } catch (const infeasible_error&) {
        row.feasible = false;
        row.avg_r2 = std::numeric_limits<double>::quiet_NaN();
      }
      table.rows.push_back(row);
    }
  }
  return table;
}

std::string elbow_csv(const ElbowTable& table) {
  std::ostringstream out;
  out << "k,m,avg_r2\n";
  for (const auto& row : table.rows) {
    char value[40];
    std::snprintf(value, sizeof(value), "%.17g", row.avg_r2);
    out << row.k << ',' << row.m << ',' << value << '\n';
  }
  return out.str();
}

}  // namespace corrclust
