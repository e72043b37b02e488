#pragma once

#include <string>
#include <vector>

#include "corrclust/clusterers.hpp"
#include "corrclust/matrix_ops.hpp"

namespace corrclust {

/// Agreement between two label vectors after the best relabeling of pred.
/// accuracy is the matched fraction under the accuracy-maximizing
/// permutation (ties keep the lexicographically first permutation);
/// pearson is the correlation of the aligned 0/1 vectors, defined only for
/// k = 2 with both vectors non-constant.
struct AgreementScore {
  double pearson = 0.0;
  bool pearson_defined = false;
  double accuracy = 0.0;
  std::vector<int> permutation;
};

/// Squared Pearson correlation of b against a, in [0, 1]. Constant input is
/// a flagged, non-fatal condition: returns 0.
double r_squared(const Vector& a, const Vector& b);

/// Best-permutation label agreement; k <= 8 (k! permutations are evaluated).
AgreementScore label_agreement(const std::vector<int>& truth,
                               const std::vector<int>& pred, int k);

struct ElbowRow {
  int k = 0;
  int m = 0;
  double avg_r2 = 0.0;
  bool feasible = true;
};

/// One row per requested (k, m) pair: CLS clustering at that setting, then
/// R^2 between paired component scores averaged over clusters and
/// components, computed on the training data.
struct ElbowTable {
  std::vector<ElbowRow> rows;
};

/// Runs cls_cluster for every (k, m) grid point with cfg's restarts and
/// seed. Infeasible grid points are flagged rows, not errors.
ElbowTable elbow_table(const Matrix& x, const Matrix& y,
                       const std::vector<int>& k_values,
                       const std::vector<int>& m_values, const FitConfig& cfg);

/// Average score R^2 of a fitted result on the data it labeled.
double average_score_r2(const ClusterResult& result, const Matrix& x,
                        const Matrix& y);

/// CSV rendering with header "k,m,avg_r2"; infeasible rows print nan.
std::string elbow_csv(const ElbowTable& table);

}  // namespace corrclust
