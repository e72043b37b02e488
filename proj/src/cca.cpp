#include "corrclust/cca.hpp"

#include <cmath>
#include <stdexcept>

#include "corrclust/errors.hpp"

namespace corrclust {

namespace {

constexpr double kRankThreshold = 1e-10;

// Symmetric inverse square root through the thresholded eigendecomposition.
// Eigenvalues at or below kRankThreshold of the largest are dropped;
// `singular` reports whether any were.
Matrix inverse_sqrt(const Matrix& cov, bool* singular) {
  const EigenPairs pairs = sym_eig(cov);
  const double largest = pairs.values.maxCoeff();
  Vector inv = Vector::Zero(pairs.values.size());
  for (Eigen::Index i = 0; i < pairs.values.size(); ++i) {
    if (largest > 0.0 && pairs.values[i] > kRankThreshold * largest) {
      inv[i] = 1.0 / std::sqrt(pairs.values[i]);
    } else {
      *singular = true;
    }
  }
  return pairs.vectors * inv.asDiagonal() * pairs.vectors.transpose();
}

Eigen::Index rank_above(const Matrix& m, double rel_threshold) {
  Eigen::BDCSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) {
    return 0;
  }
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > rel_threshold * sv[0]) {
      ++rank;
    }
  }
  return rank;
}

}  // namespace

CcaComponents fit_cca(const Matrix& x, const Matrix& y, int m) {
  const Eigen::Index n = x.rows();
  const Eigen::Index d1 = x.cols();
  const Eigen::Index d2 = y.cols();
  if (y.rows() != n) {
    throw std::invalid_argument("fit_cca: X and Y row counts differ");
  }
  if (n <= std::max(d1, d2)) {
    throw infeasible_error("fit_cca: needs more rows than max(d1, d2)");
  }
  if (!x.allFinite() || !y.allFinite()) {
    throw data_error("fit_cca: input contains NaN or Inf");
  }

  const Matrix xc = x.rowwise() - x.colwise().mean();
  const Matrix yc = y.rowwise() - y.colwise().mean();
  const double dn = static_cast<double>(n);
  const Matrix sxx = xc.transpose() * xc / dn;
  const Matrix syy = yc.transpose() * yc / dn;
  const Matrix sxy = xc.transpose() * yc / dn;

  const Eigen::Index rank = rank_above(sxy, kRankThreshold);
  if (m < 1 || m > std::min({d1, d2, rank})) {
    throw std::invalid_argument(
        "fit_cca: m exceeds min(d1, d2, rank of cross-covariance)");
  }

  CcaComponents comp;
  const Matrix wx = inverse_sqrt(sxx, &comp.covariance_singular);
  const Matrix wy = inverse_sqrt(syy, &comp.covariance_singular);

  Eigen::BDCSVD<Matrix> svd(wx * sxy * wy,
                            Eigen::ComputeThinU | Eigen::ComputeThinV);
  comp.u = wx * svd.matrixU().leftCols(m);
  comp.v = wy * svd.matrixV().leftCols(m);
  comp.correlations =
      svd.singularValues().head(m).cwiseMin(1.0).cwiseMax(0.0);

  // The SVD already makes u'Sxy v = sigma >= 0; fix the remaining joint sign
  // freedom by the same convention as sym_eig, on v.
  for (int j = 0; j < m; ++j) {
    Eigen::Index idx = 0;
    comp.v.col(j).cwiseAbs().maxCoeff(&idx);
    if (comp.v(idx, j) < 0.0) {
      comp.v.col(j) = -comp.v.col(j);
      comp.u.col(j) = -comp.u.col(j);
    }
  }

  comp.alphas = Vector::Zero(m);
  comp.betas = Vector::Zero(m);
  return comp;
}

CcaComponents fit_canonical_regressions(CcaComponents c, const Matrix& x,
                                        const Matrix& y) {
  if (x.cols() != c.u.rows() || y.cols() != c.v.rows()) {
    throw std::invalid_argument(
        "fit_canonical_regressions: dimension mismatch");
  }
  const Matrix sx = x * c.u;
  const Matrix sy = y * c.v;
  const auto n = static_cast<double>(x.rows());
  const int m = static_cast<int>(c.u.cols());

  c.alphas.resize(m);
  c.betas.resize(m);
  c.zero_variance_components.clear();
  for (int j = 0; j < m; ++j) {
    const double mx = sx.col(j).mean();
    const double my = sy.col(j).mean();
    const double var_x = (sx.col(j).array() - mx).square().sum() / n;
    if (var_x <= 0.0) {
      c.zero_variance_components.push_back(j);
      c.betas[j] = 0.0;
      c.alphas[j] = my;
      continue;
    }
    const double cov =
        ((sx.col(j).array() - mx) * (sy.col(j).array() - my)).sum() / n;
    c.betas[j] = cov / var_x;
    c.alphas[j] = my - c.betas[j] * mx;
  }
  return c;
}

double cca_affine_invariance_check(const Matrix& x, const Matrix& y,
                                   const Matrix& tx, const Matrix& ty) {
  const auto condition = [](const Matrix& t) {
    Eigen::BDCSVD<Matrix> svd(t);
    const auto& sv = svd.singularValues();
    const double smallest = sv[sv.size() - 1];
    return smallest > 0.0 ? sv[0] / smallest
                          : std::numeric_limits<double>::infinity();
  };
  if (tx.rows() != tx.cols() || ty.rows() != ty.cols() ||
      tx.rows() != x.cols() || ty.rows() != y.cols()) {
    throw std::invalid_argument(
        "cca_affine_invariance_check: transforms must be square and match");
  }
  if (condition(tx) >= 1e6 || condition(ty) >= 1e6) {
    throw std::invalid_argument(
        "cca_affine_invariance_check: transform is ill-conditioned");
  }

  const int m = static_cast<int>(std::min(x.cols(), y.cols()));
  const CcaComponents base = fit_cca(x, y, m);
  const CcaComponents mapped = fit_cca(x * tx, y * ty, m);
  return (base.correlations - mapped.correlations).cwiseAbs().maxCoeff();
}

}  // namespace corrclust
