#pragma once

#include <vector>

#include "corrclust/matrix_ops.hpp"

namespace corrclust {

/// Canonical coefficient pairs with their correlations, plus the
/// per-component regressions Yv_j ~ alpha_j + beta_j * Xu_j used by the CCA
/// clustering labeling step.
///
/// Correlations are descending, clamped to [0, 1]. Each pair is oriented so
/// its sample correlation is non-negative, and v's largest-magnitude entry
/// fixes the residual sign ambiguity.
struct CcaComponents {
  Matrix u;
  Matrix v;
  Vector correlations;
  Vector alphas;
  Vector betas;
  /// A view covariance was singular beyond threshold; a thresholded
  /// pseudo-inverse was used for whitening.
  bool covariance_singular = false;
  /// Components whose canonical X variable had zero variance when the
  /// regressions were fitted (beta forced to 0).
  std::vector<int> zero_variance_components;
};

/// Fits m canonical pairs by SVD of the whitened cross-covariance.
/// Covariances are population (divisor n) sample moments about the column
/// means, so pre-centering the data is not required for correctness.
/// Requires n > max(d1, d2) and m <= min(d1, d2, rank of the
/// cross-covariance); rank uses a 1e-10 relative singular-value threshold.
CcaComponents fit_cca(const Matrix& x, const Matrix& y, int m);

/// Ordinary least squares of each canonical Y score on its X score,
/// intercept included. On centered data the intercepts are 0; on raw data
/// they absorb the means. Zero-variance X scores are flagged and get beta 0.
CcaComponents fit_canonical_regressions(CcaComponents c, const Matrix& x,
                                        const Matrix& y);

/// Max absolute difference between the canonical correlation spectra of
/// (X, Y) and (X Tx, Y Ty). Throws if either transform has condition number
/// at or above 1e6. The contract is that this difference stays within 1e-6
/// for invertible transforms.
double cca_affine_invariance_check(const Matrix& x, const Matrix& y,
                                   const Matrix& tx, const Matrix& ty);

}  // namespace corrclust
