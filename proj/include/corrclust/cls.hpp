#pragma once

#include "corrclust/matrix_ops.hpp"

namespace corrclust {

/// Canonical Least Squares components for one cluster: the coefficient pair
/// minimizing ||X U - Y V||_F^2 subject to V'V = I.
///
/// V holds the eigenvectors of Y'HY for the m smallest eigenvalues
/// (ascending, clamped at 0 against -1e-8 numerical noise); each column of U
/// is the least-squares regression of the matching Y V column on X. When
/// intercept is set, X is augmented with a trailing ones column before
/// solving, so U has d1 + 1 rows and its last row is the intercept.
struct ClsComponents {
  Matrix u;
  Matrix v;
  Vector eigenvalues;
  bool intercept = false;
};

struct ClsFitReport {
  /// ||X_aug U - Y V||_F^2, computed from the actual residuals.
  double objective = 0.0;
  /// Squared Pearson correlation between X_aug u_j and Y v_j per component.
  Vector per_component_r2;
  /// X_aug was rank deficient; the fit used the minimum-norm pseudo-solution.
  bool rank_deficient = false;
};

/// Fits m CLS components to one data pair.
///
/// Requires 1 <= m <= min(d1, d2) and at least as many rows as X_aug has
/// columns (throws infeasible_error otherwise, so a clustering restart that
/// starved a cluster can be retried rather than aborted).
std::pair<ClsComponents, ClsFitReport> fit_cls(const Matrix& x,
                                               const Matrix& y, int m,
                                               bool intercept);

/// Component scores (X_aug U, Y V) for plotting and labeling.
std::pair<Matrix, Matrix> cls_transform(const ClsComponents& c,
                                        const Matrix& x, const Matrix& y);

/// Squared Euclidean distance between the m-dimensional scores of one
/// observation: ||y'V - x_aug'U||^2. This is the labeling-step distance.
double cls_point_error(const ClsComponents& c, const Eigen::RowVectorXd& x,
                       const Eigen::RowVectorXd& y);

/// X with a trailing ones column appended when intercept is set.
Matrix augment_intercept(const Matrix& x, bool intercept);

}  // namespace corrclust
