#include "corrclust/matrix_ops.hpp"

#include <cmath>
#include <stdexcept>

#include "corrclust/errors.hpp"

namespace corrclust {

namespace {

void require_finite(const Matrix& m, const char* who) {
  if (!m.allFinite()) {
    throw data_error(std::string(who) + ": input contains NaN or Inf");
  }
}

}  // namespace

std::pair<Matrix, ColumnStats> center_columns(const Matrix& m) {
  if (m.rows() < 1) {
    throw std::invalid_argument("center_columns: needs at least one row");
  }
  require_finite(m, "center_columns");

  ColumnStats stats;
  stats.means = m.colwise().mean();
  stats.scales = Vector::Ones(m.cols());
  Matrix centered = m.rowwise() - stats.means.transpose();
  return {std::move(centered), std::move(stats)};
}

std::pair<Matrix, ColumnStats> scale_unit_variance(const Matrix& m) {
  if (m.rows() < 2) {
    throw std::invalid_argument("scale_unit_variance: needs at least two rows");
  }
  require_finite(m, "scale_unit_variance");

  const auto n = static_cast<double>(m.rows());
  ColumnStats stats;
  stats.means = Vector::Zero(m.cols());
  stats.scales = Vector::Ones(m.cols());

  Matrix scaled = m;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double mean = m.col(j).mean();
    const double var = (m.col(j).array() - mean).square().sum() / n;
    const double sd = std::sqrt(var);
    if (sd > 0.0) {
      stats.scales[j] = sd;
      scaled.col(j) /= sd;
    } else {
      stats.constant_cols.push_back(j);
    }
  }
  return {std::move(scaled), std::move(stats)};
}

std::pair<Matrix, ColumnStats> standardize_columns(const Matrix& m,
                                                   bool center, bool scale) {
  Matrix out = m;
  ColumnStats stats;
  stats.means = Vector::Zero(m.cols());
  stats.scales = Vector::Ones(m.cols());

  if (center) {
    auto [centered, cstats] = center_columns(out);
    out = std::move(centered);
    stats.means = cstats.means;
  }
  if (scale) {
    auto [scaled, sstats] = scale_unit_variance(out);
    out = std::move(scaled);
    stats.scales = sstats.scales;
    stats.constant_cols = sstats.constant_cols;
  }
  if (!center && !scale) {
    require_finite(m, "standardize_columns");
  }
  return {std::move(out), std::move(stats)};
}

Matrix transform_columns(const Matrix& m, const ColumnStats& stats) {
  if (m.cols() != stats.means.size() || m.cols() != stats.scales.size()) {
    throw std::invalid_argument("transform_columns: column count mismatch");
  }
  Matrix out = m.rowwise() - stats.means.transpose();
  out.array().rowwise() /= stats.scales.transpose().array();
  return out;
}

EigenPairs sym_eig(const Matrix& s) {
  if (s.rows() != s.cols()) {
    throw std::invalid_argument("sym_eig: matrix is not square");
  }
  require_finite(s, "sym_eig");

  const double scale = s.cwiseAbs().maxCoeff();
  if (scale > 0.0) {
    const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-8 * scale) {
      throw std::invalid_argument("sym_eig: matrix is not symmetric");
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (s + s.transpose()));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("sym_eig: eigensolver failed to converge");
  }

  EigenPairs pairs{solver.eigenvalues(), solver.eigenvectors()};
  // Orient each vector so its largest-magnitude entry is non-negative.
  for (Eigen::Index j = 0; j < pairs.vectors.cols(); ++j) {
    Eigen::Index idx = 0;
    pairs.vectors.col(j).cwiseAbs().maxCoeff(&idx);
    if (pairs.vectors(idx, j) < 0.0) {
      pairs.vectors.col(j) = -pairs.vectors.col(j);
    }
  }
  return pairs;
}

Matrix least_squares_solve(const Matrix& x, const Matrix& b) {
  if (x.rows() == 0 || x.cols() == 0) {
    throw std::invalid_argument("least_squares_solve: empty design matrix");
  }
  if (x.rows() != b.rows()) {
    throw std::invalid_argument("least_squares_solve: row count mismatch");
  }
  require_finite(x, "least_squares_solve");
  require_finite(b, "least_squares_solve");

  Eigen::BDCSVD<Matrix> svd(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  return svd.solve(b);
}

Matrix residual_gram(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows()) {
    throw std::invalid_argument("residual_gram: row count mismatch");
  }
  require_finite(y, "residual_gram");

  if (x.cols() == 0) {
    return y.transpose() * y;
  }
  const Matrix c = least_squares_solve(x, y);
  Matrix g = y.transpose() * y - (x.transpose() * y).transpose() * c;
  g = 0.5 * (g + g.transpose());
  return g;
}

double pearson_r2(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("pearson_r2: length mismatch");
  }
  const auto n = static_cast<double>(a.size());
  const double ma = a.mean();
  const double mb = b.mean();
  const double cov = ((a.array() - ma) * (b.array() - mb)).sum() / n;
  const double va = (a.array() - ma).square().sum() / n;
  const double vb = (b.array() - mb).square().sum() / n;
  if (va <= 0.0 || vb <= 0.0) {
    return 0.0;
  }
  const double r2 = (cov * cov) / (va * vb);
  return std::min(r2, 1.0);
}

Eigen::Index numeric_rank(const Matrix& m, double rcond) {
  if (m.size() == 0) {
    return 0;
  }
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) {
    return 0;
  }
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > rcond * sv[0]) {
      ++rank;
    }
  }
  return rank;
}

}  // namespace corrclust
