#include "corrclust/cls.hpp"

#include <stdexcept>
#include <string>

#include "corrclust/errors.hpp"

namespace corrclust {

Matrix augment_intercept(const Matrix& x, bool intercept) {
  if (!intercept) {
    return x;
  }
  Matrix aug(x.rows(), x.cols() + 1);
  aug.leftCols(x.cols()) = x;
  aug.col(x.cols()).setOnes();
  return aug;
}

std::pair<ClsComponents, ClsFitReport> fit_cls(const Matrix& x,
                                               const Matrix& y, int m,
                                               bool intercept) {
  const Eigen::Index d1 = x.cols();
  const Eigen::Index d2 = y.cols();
  if (m < 1 || m > std::min(d1, d2)) {
    throw std::invalid_argument("fit_cls: m must be in [1, min(d1, d2)]");
  }
  if (x.rows() != y.rows()) {
    throw std::invalid_argument("fit_cls: X and Y row counts differ");
  }
  if (!x.allFinite() || !y.allFinite()) {
    throw data_error("fit_cls: input contains NaN or Inf");
  }

  const Matrix x_aug = augment_intercept(x, intercept);
  if (x_aug.rows() < x_aug.cols()) {
    throw infeasible_error("fit_cls: fewer rows (" +
                           std::to_string(x_aug.rows()) + ") than columns (" +
                           std::to_string(x_aug.cols()) + ") of X");
  }

  const EigenPairs pairs = sym_eig(residual_gram(x_aug, y));

  ClsComponents comp;
  comp.intercept = intercept;
  comp.v = pairs.vectors.leftCols(m);
  comp.eigenvalues = pairs.values.head(m).cwiseMax(0.0);
  comp.u = least_squares_solve(x_aug, y * comp.v);

  ClsFitReport report;
  report.rank_deficient = numeric_rank(x_aug) < x_aug.cols();

  const Matrix scores_x = x_aug * comp.u;
  const Matrix scores_y = y * comp.v;
  report.objective = (scores_x - scores_y).squaredNorm();
  report.per_component_r2.resize(m);
  for (int j = 0; j < m; ++j) {
    report.per_component_r2[j] = pearson_r2(scores_x.col(j), scores_y.col(j));
  }
  return {std::move(comp), std::move(report)};
}

std::pair<Matrix, Matrix> cls_transform(const ClsComponents& c,
                                        const Matrix& x, const Matrix& y) {
  const Matrix x_aug = augment_intercept(x, c.intercept);
  if (x_aug.cols() != c.u.rows() || y.cols() != c.v.rows()) {
    throw std::invalid_argument("cls_transform: dimension mismatch");
  }
  return {x_aug * c.u, y * c.v};
}

double cls_point_error(const ClsComponents& c, const Eigen::RowVectorXd& x,
                       const Eigen::RowVectorXd& y) {
  const Eigen::Index d1 = c.u.rows() - (c.intercept ? 1 : 0);
  if (x.size() != d1 || y.size() != c.v.rows()) {
    throw std::invalid_argument("cls_point_error: dimension mismatch");
  }
  Eigen::RowVectorXd score_x = x * c.u.topRows(d1);
  if (c.intercept) {
    score_x += c.u.row(d1);
  }
  return (y * c.v - score_x).squaredNorm();
}

}  // namespace corrclust
