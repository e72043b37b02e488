#include "corrclust/cca.hpp"

#include <cmath>

#include <doctest.h>

#include "corrclust/errors.hpp"
#include "corrclust/rng.hpp"
#include "test_support.hpp"

using corrclust::CcaComponents;
using corrclust::Matrix;
using corrclust::Rng;
using corrclust::Vector;
using test_support::random_matrix;

namespace {

double sample_corr(const Vector& a, const Vector& b) {
  const auto n = static_cast<double>(a.size());
  const double ma = a.mean();
  const double mb = b.mean();
  const double cov = ((a.array() - ma) * (b.array() - mb)).sum() / n;
  const double va = (a.array() - ma).square().sum() / n;
  const double vb = (b.array() - mb).square().sum() / n;
  return cov / std::sqrt(va * vb);
}

}  // namespace

TEST_CASE("fit_cca on Y = X yields unit correlations and unit slopes") {
  Rng rng(51);
  const Matrix x = random_matrix(rng, 60, 3);
  CcaComponents comp = corrclust::fit_cca(x, x, 3);
  for (int j = 0; j < 3; ++j) {
    CHECK(comp.correlations[j] == doctest::Approx(1.0).epsilon(1e-8));
  }
  comp = corrclust::fit_canonical_regressions(comp, x, x);
  for (int j = 0; j < 3; ++j) {
    CHECK(comp.betas[j] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(comp.alphas[j]) < 1e-6);
  }
}

TEST_CASE("fit_cca reports small correlations for independent views") {
  // Monte Carlo null oracle: independent n = 500, d = 2 samples should give
  // a leading canonical correlation below 0.3 (fixed seeds).
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(900 + seed);
    const Matrix x = random_matrix(rng, 500, 2);
    const Matrix y = random_matrix(rng, 500, 2);
    const CcaComponents comp = corrclust::fit_cca(x, y, 2);
    CHECK(comp.correlations[0] < 0.3);
  }
}

TEST_CASE("fit_cca matches the closed-form 2x2 eigen solution") {
  Rng rng(52);
  const Matrix x = random_matrix(rng, 200, 2);
  Matrix y = random_matrix(rng, 200, 2);
  y.col(0) += 0.8 * x.col(0);
  y.col(1) -= 0.5 * x.col(1);

  // Hand eigen-solution of A = Sxx^-1 Sxy Syy^-1 Sxy'. For the 2x2 case the
  // eigenvalues come from the quadratic formula on trace and determinant;
  // canonical correlations are their square roots.
  const Matrix xc = x.rowwise() - x.colwise().mean();
  const Matrix yc = y.rowwise() - y.colwise().mean();
  const double n = static_cast<double>(x.rows());
  const Matrix sxx = xc.transpose() * xc / n;
  const Matrix syy = yc.transpose() * yc / n;
  const Matrix sxy = xc.transpose() * yc / n;
  const Matrix a =
      sxx.inverse() * sxy * syy.inverse() * sxy.transpose();
  const double tr = a.trace();
  const double det = a.determinant();
  const double disc = std::sqrt(tr * tr / 4.0 - det);
  const double lambda1 = tr / 2.0 + disc;
  const double lambda2 = tr / 2.0 - disc;

  const CcaComponents comp = corrclust::fit_cca(x, y, 2);
  CHECK(comp.correlations[0] ==
        doctest::Approx(std::sqrt(lambda1)).epsilon(1e-8));
  CHECK(comp.correlations[1] ==
        doctest::Approx(std::sqrt(lambda2)).epsilon(1e-8));
}

TEST_CASE("reported correlations match the correlations of the scores") {
  Rng rng(53);
  const Matrix x = random_matrix(rng, 80, 3);
  Matrix y = random_matrix(rng, 80, 3);
  y.col(1) += x.col(2);
  const CcaComponents comp = corrclust::fit_cca(x, y, 3);
  const Matrix sx = x * comp.u;
  const Matrix sy = y * comp.v;
  for (int j = 0; j < 3; ++j) {
    CHECK(sample_corr(sx.col(j), sy.col(j)) ==
          doctest::Approx(comp.correlations[j]).epsilon(1e-8));
  }
  // Eq. 2 style uncorrelatedness within each view.
  const Matrix xc = sx.rowwise() - sx.colwise().mean();
  const Matrix yc = sy.rowwise() - sy.colwise().mean();
  const Matrix cx = xc.transpose() * xc / static_cast<double>(x.rows());
  const Matrix cy = yc.transpose() * yc / static_cast<double>(x.rows());
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a != b) {
        CHECK(std::abs(cx(a, b)) <= 1e-6);
        CHECK(std::abs(cy(a, b)) <= 1e-6);
      }
    }
  }
}

TEST_CASE("fit_canonical_regressions matches the univariate OLS oracle") {
  Rng rng(54);
  const Matrix x = random_matrix(rng, 70, 2).rowwise() +
                   Eigen::RowVector2d(0.4, -1.2);
  Matrix y = random_matrix(rng, 70, 2);
  y.col(0) += x.col(0);
  CcaComponents comp = corrclust::fit_cca(x, y, 2);
  comp = corrclust::fit_canonical_regressions(comp, x, y);
  const Matrix sx = x * comp.u;
  const Matrix sy = y * comp.v;
  for (int j = 0; j < 2; ++j) {
    // Two-variable OLS closed form.
    const auto n = static_cast<double>(x.rows());
    const double mx = sx.col(j).mean();
    const double my = sy.col(j).mean();
    const double cov =
        ((sx.col(j).array() - mx) * (sy.col(j).array() - my)).sum() / n;
    const double var = (sx.col(j).array() - mx).square().sum() / n;
    const double beta = cov / var;
    const double alpha = my - beta * mx;
    CHECK(comp.betas[j] == doctest::Approx(beta).epsilon(1e-10));
    CHECK(comp.alphas[j] == doctest::Approx(alpha).epsilon(1e-10));
  }
}

TEST_CASE("fit_canonical_regressions slope is small at near-zero correlation") {
  Rng rng(55);
  const Matrix x = random_matrix(rng, 2000, 2);
  Matrix y = random_matrix(rng, 2000, 2);
  y.col(0) += 2.0 * x.col(0);  // strong first pair, noise-only second pair
  CcaComponents comp = corrclust::fit_cca(x, y, 2);
  comp = corrclust::fit_canonical_regressions(comp, x, y);
  CHECK(comp.correlations[1] < 0.2);
  CHECK(std::abs(comp.betas[1]) < 0.2);
}

TEST_CASE("cca_affine_invariance_check") {
  Rng rng(56);
  const Matrix x = random_matrix(rng, 120, 3);
  Matrix y = random_matrix(rng, 120, 2);
  y.col(0) += 0.7 * x.col(1);

  SUBCASE("identity transforms change nothing") {
    CHECK(corrclust::cca_affine_invariance_check(
              x, y, Matrix::Identity(3, 3), Matrix::Identity(2, 2)) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("diagonal rescaling stays within 1e-8") {
    Matrix tx = Matrix::Zero(3, 3);
    tx.diagonal() << 2.0, 0.5, 3.0;
    Matrix ty = Matrix::Zero(2, 2);
    ty.diagonal() << 10.0, 0.1;
    CHECK(corrclust::cca_affine_invariance_check(x, y, tx, ty) <= 1e-8);
  }
  SUBCASE("random invertible transforms stay within 1e-6") {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix tx =
          random_matrix(rng, 3, 3) + 2.0 * Matrix::Identity(3, 3);
      const Matrix ty =
          random_matrix(rng, 2, 2) + 2.0 * Matrix::Identity(2, 2);
      CHECK(corrclust::cca_affine_invariance_check(x, y, tx, ty) <= 1e-6);
    }
  }
  SUBCASE("ill-conditioned transforms are rejected") {
    Matrix tx = Matrix::Identity(3, 3);
    tx(2, 2) = 1e-9;
    CHECK_THROWS_AS(corrclust::cca_affine_invariance_check(
                        x, y, tx, Matrix::Identity(2, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("fit_cca rejects short samples and out-of-rank m") {
  Rng rng(57);
  const Matrix x = random_matrix(rng, 3, 3);
  CHECK_THROWS_AS(corrclust::fit_cca(x, x, 1), corrclust::infeasible_error);

  // Rank-1 cross-covariance cannot support two components.
  const Matrix x2 = random_matrix(rng, 100, 2);
  Matrix y2 = random_matrix(rng, 100, 2) * 1e-14;
  y2.col(0) += x2.col(0);
  y2.col(1) += x2.col(0);
  CHECK_THROWS_AS(corrclust::fit_cca(x2, y2, 2), std::invalid_argument);
}

TEST_CASE("fit_cca flags singular covariance and still returns a fit") {
  Rng rng(58);
  Matrix x(60, 3);
  x.leftCols(2) = random_matrix(rng, 60, 2);
  x.col(2) = x.col(0) + x.col(1);  // exact collinearity
  Matrix y = random_matrix(rng, 60, 2);
  y.col(0) += x.col(0);
  const CcaComponents comp = corrclust::fit_cca(x, y, 1);
  CHECK(comp.covariance_singular);
  CHECK(comp.correlations[0] <= 1.0);
  CHECK(comp.u.allFinite());
}
