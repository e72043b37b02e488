#pragma once

#include <Eigen/Dense>
#include <vector>

namespace corrclust {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Eigendecomposition of a symmetric matrix. Eigenvalues ascending,
/// eigenvectors orthonormal columns, each oriented so its largest-magnitude
/// entry is non-negative (run-to-run determinism; ties resolved to the
/// lowest index).
struct EigenPairs {
  Vector values;
  Matrix vectors;
};

/// Per-column shift/scale removed by preprocessing. Scales are population
/// standard deviations (divisor n). Columns found constant keep scale 1 and
/// are listed in constant_cols.
struct ColumnStats {
  Vector means;
  Vector scales;
  std::vector<Eigen::Index> constant_cols;
};

/// Subtracts the column means. rows >= 1; throws data_error on non-finite
/// entries.
std::pair<Matrix, ColumnStats> center_columns(const Matrix& m);

/// Rescales each column to unit population variance. Constant columns are
/// passed through unchanged (scale recorded as 1, column flagged). rows >= 2.
std::pair<Matrix, ColumnStats> scale_unit_variance(const Matrix& m);

/// center_columns and/or scale_unit_variance composed into one ColumnStats.
std::pair<Matrix, ColumnStats> standardize_columns(const Matrix& m,
                                                   bool center, bool scale);

/// Applies previously computed stats to new data: (m - means) / scales.
Matrix transform_columns(const Matrix& m, const ColumnStats& stats);

/// Eigendecomposition of a symmetric matrix. Input must be symmetric within
/// 1e-8 relative (max-entry norm); it is symmetrized exactly before solving.
EigenPairs sym_eig(const Matrix& s);

/// Minimizer C of ||X C - B||_F^2. When X'X is singular, returns the
/// minimum-norm solution: singular values below 1e-12 of the largest are
/// treated as zero.
Matrix least_squares_solve(const Matrix& x, const Matrix& b);

/// Y' H Y with H = I - X (X'X)^-1 X', computed as Y'Y - (X'Y)' C with
/// C = least_squares_solve(X, Y) so the n-by-n projector is never formed.
/// An X with zero columns gives H = I, i.e. Y'Y. The result is symmetrized.
Matrix residual_gram(const Matrix& x, const Matrix& y);

/// Squared Pearson correlation between two equal-length columns, in [0, 1].
/// Returns 0 when either column is constant.
double pearson_r2(const Vector& a, const Vector& b);

/// Rank of m estimated by singular values above 1e-12 of the largest.
Eigen::Index numeric_rank(const Matrix& m, double rcond = 1e-12);

}  // namespace corrclust
