#include "corrclust/matrix_ops.hpp"

#include <cmath>

#include <doctest.h>

#include "corrclust/errors.hpp"
#include "corrclust/rng.hpp"
#include "test_support.hpp"

using corrclust::Matrix;
using corrclust::Rng;
using corrclust::Vector;
using test_support::random_matrix;
using test_support::random_symmetric;

TEST_CASE("center_columns leaves an all-zero matrix unchanged") {
  const Matrix zeros = Matrix::Zero(3, 2);
  const auto [centered, stats] = corrclust::center_columns(zeros);
  CHECK(centered.isZero(0.0));
  CHECK(stats.means[0] == 0.0);
  CHECK(stats.means[1] == 0.0);
}

TEST_CASE("center_columns removes and records the mean") {
  Matrix m(3, 1);
  m << 1, 2, 3;
  const auto [centered, stats] = corrclust::center_columns(m);
  CHECK(centered(0, 0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(centered(1, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(centered(2, 0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(stats.means[0] == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("center_columns zeroes random column sums (summation oracle)") {
  Rng rng(11);
  const Matrix m = random_matrix(rng, 50, 4).array() + 3.7;
  const auto [centered, stats] = corrclust::center_columns(m);
  for (Eigen::Index j = 0; j < centered.cols(); ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < centered.rows(); ++i) {
      sum += centered(i, j);
    }
    CHECK(std::abs(sum) < 1e-10);
  }
}

TEST_CASE("center_columns is idempotent") {
  Rng rng(12);
  const Matrix m = random_matrix(rng, 20, 3);
  const auto [once, s1] = corrclust::center_columns(m);
  const auto [twice, s2] = corrclust::center_columns(once);
  CHECK((once - twice).cwiseAbs().maxCoeff() <= 1e-14);
}

TEST_CASE("center_columns rejects non-finite input") {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = std::nan("");
  CHECK_THROWS_AS(corrclust::center_columns(m), corrclust::data_error);
  CHECK_THROWS_AS(corrclust::center_columns(Matrix(0, 2)),
                  std::invalid_argument);
}

TEST_CASE("scale_unit_variance rescales by the population sd") {
  Matrix m(3, 1);
  m << -1, 0, 1;
  // Variance-formula oracle: population sd of (-1, 0, 1).
  const double sd = std::sqrt(2.0 / 3.0);
  const auto [scaled, stats] = corrclust::scale_unit_variance(m);
  CHECK(scaled(0, 0) == doctest::Approx(-1.0 / sd).epsilon(1e-12));
  CHECK(scaled(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(scaled(2, 0) == doctest::Approx(1.0 / sd).epsilon(1e-12));
  CHECK(stats.scales[0] == doctest::Approx(sd).epsilon(1e-12));
  CHECK(scaled(2, 0) == doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
}

TEST_CASE("scale_unit_variance flags constant columns and passes them through") {
  Matrix m(3, 2);
  m << 5, 1, 5, 2, 5, 3;
  const auto [scaled, stats] = corrclust::scale_unit_variance(m);
  CHECK(scaled.col(0) == m.col(0));
  CHECK(stats.scales[0] == 1.0);
  REQUIRE(stats.constant_cols.size() == 1);
  CHECK(stats.constant_cols[0] == 0);
}

TEST_CASE("scale_unit_variance is a no-op on unit-variance columns") {
  Rng rng(13);
  Matrix m = random_matrix(rng, 40, 2);
  m = corrclust::scale_unit_variance(m).first;
  const auto [again, stats] = corrclust::scale_unit_variance(m);
  CHECK((again - m).cwiseAbs().maxCoeff() < 1e-10);
  const auto n = static_cast<double>(m.rows());
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    const double mean = again.col(j).mean();
    const double var = (again.col(j).array() - mean).square().sum() / n;
    CHECK(var == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("sym_eig handles identity and diagonal matrices") {
  const auto id = corrclust::sym_eig(Matrix::Identity(3, 3));
  CHECK(id.values.isApproxToConstant(1.0, 1e-14));

  Matrix d = Matrix::Zero(3, 3);
  d.diagonal() << 4, 1, 9;
  const auto pairs = corrclust::sym_eig(d);
  CHECK(pairs.values[0] == doctest::Approx(1.0));
  CHECK(pairs.values[1] == doctest::Approx(4.0));
  CHECK(pairs.values[2] == doctest::Approx(9.0));
  // Axis-aligned eigenvectors, non-negative by the sign convention.
  for (int j = 0; j < 3; ++j) {
    Eigen::Index idx = 0;
    pairs.vectors.col(j).cwiseAbs().maxCoeff(&idx);
    CHECK(pairs.vectors(idx, j) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sym_eig matches the 2x2 closed form") {
  Matrix s(2, 2);
  s << 2, 1, 1, 2;
  // Closed-form oracle for [[a, b], [b, a]]: eigenvalues a -+ b with
  // eigenvectors (1, -1)/sqrt(2) and (1, 1)/sqrt(2).
  const auto pairs = corrclust::sym_eig(s);
  CHECK(pairs.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(pairs.values[1] == doctest::Approx(3.0).epsilon(1e-12));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(pairs.vectors(0, 0)) == doctest::Approx(inv_sqrt2));
  CHECK(std::abs(pairs.vectors(1, 0)) == doctest::Approx(inv_sqrt2));
  CHECK(pairs.vectors(0, 0) * pairs.vectors(1, 0) < 0.0);
  CHECK(pairs.vectors(0, 1) == doctest::Approx(inv_sqrt2));
  CHECK(pairs.vectors(1, 1) == doctest::Approx(inv_sqrt2));
}

TEST_CASE("sym_eig reconstruction, ordering and orthonormality") {
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix s = random_symmetric(rng, 2 + trial % 5);
    const auto pairs = corrclust::sym_eig(s);
    const Matrix recon = pairs.vectors * pairs.values.asDiagonal() *
                         pairs.vectors.transpose();
    CHECK((s - recon).norm() <= 1e-8 * s.norm());
    for (Eigen::Index i = 1; i < pairs.values.size(); ++i) {
      CHECK(pairs.values[i] >= pairs.values[i - 1]);
    }
    const Matrix gram =
        pairs.vectors.transpose() * pairs.vectors -
        Matrix::Identity(s.rows(), s.rows());
    CHECK(gram.cwiseAbs().maxCoeff() <= 1e-10);
    for (Eigen::Index j = 0; j < pairs.vectors.cols(); ++j) {
      Eigen::Index idx = 0;
      pairs.vectors.col(j).cwiseAbs().maxCoeff(&idx);
      CHECK(pairs.vectors(idx, j) >= 0.0);
    }
  }
}

TEST_CASE("sym_eig rejects asymmetric input") {
  Matrix s(2, 2);
  s << 1, 2, 0, 1;
  CHECK_THROWS_AS(corrclust::sym_eig(s), std::invalid_argument);
}

TEST_CASE("least_squares_solve recovers identity for orthonormal columns") {
  Rng rng(15);
  const Matrix a = random_matrix(rng, 12, 4);
  const Matrix q = Eigen::HouseholderQR<Matrix>(a)
                       .householderQ()
                       .setLength(4) *
                   Matrix::Identity(12, 4);
  const Matrix c = corrclust::least_squares_solve(q, q);
  CHECK((c - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("least_squares_solve exact fit on a single column") {
  Matrix x(3, 1), b(3, 1);
  x << 1, 2, 3;
  b << 2, 4, 6;
  const Matrix c = corrclust::least_squares_solve(x, b);
  CHECK(c(0, 0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("least_squares_solve matches the normal-equations oracle") {
  Rng rng(16);
  const Matrix x = random_matrix(rng, 20, 3);
  const Matrix c0 = random_matrix(rng, 3, 2);
  const Matrix b = x * c0 + 0.01 * random_matrix(rng, 20, 2);
  const Matrix c = corrclust::least_squares_solve(x, b);
  // Explicit (X'X)^-1 X'B oracle.
  const Matrix oracle =
      (x.transpose() * x).fullPivLu().solve(x.transpose() * b);
  CHECK((c - oracle).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((c - c0).cwiseAbs().maxCoeff() < 0.05);
}

TEST_CASE("least_squares_solve returns the minimum-norm solution when singular") {
  Rng rng(17);
  Matrix x(10, 3);
  x.col(0) = random_matrix(rng, 10, 1);
  x.col(1) = x.col(0);  // exact rank deficiency
  x.col(2) = random_matrix(rng, 10, 1);
  const Matrix b = random_matrix(rng, 10, 1);
  const Matrix c = corrclust::least_squares_solve(x, b);
  // Full-SVD pseudo-inverse oracle.
  Eigen::JacobiSVD<Matrix> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Matrix pinv = Matrix::Zero(3, 10);
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    const double sv = svd.singularValues()[i];
    if (sv > 1e-12 * svd.singularValues()[0]) {
      pinv += (1.0 / sv) * svd.matrixV().col(i) *
              svd.matrixU().col(i).transpose();
    }
  }
  CHECK((c - pinv * b).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("least_squares_solve rejects empty and mismatched input") {
  CHECK_THROWS_AS(corrclust::least_squares_solve(Matrix(0, 0), Matrix(0, 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      corrclust::least_squares_solve(Matrix::Ones(3, 1), Matrix::Ones(4, 1)),
      std::invalid_argument);
}

TEST_CASE("residual_gram vanishes when Y lies in the column space of X") {
  Rng rng(18);
  const Matrix x = random_matrix(rng, 15, 3);
  const Matrix y = x * random_matrix(rng, 3, 2);
  const Matrix g = corrclust::residual_gram(x, y);
  CHECK(g.cwiseAbs().maxCoeff() < 1e-8 * y.squaredNorm());
}

TEST_CASE("residual_gram with an empty X is Y'Y") {
  Rng rng(19);
  const Matrix y = random_matrix(rng, 10, 2);
  const Matrix g = corrclust::residual_gram(Matrix(10, 0), y);
  CHECK((g - y.transpose() * y).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("residual_gram matches the explicit projector oracle") {
  Rng rng(20);
  const Matrix x = random_matrix(rng, 30, 2);
  const Matrix y = random_matrix(rng, 30, 2);
  // Form H = I - X (X'X)^-1 X' explicitly at small n.
  const Matrix h = Matrix::Identity(30, 30) -
                   x * (x.transpose() * x).fullPivLu().solve(x.transpose());
  const Matrix oracle = y.transpose() * h * y;
  const Matrix g = corrclust::residual_gram(x, y);
  CHECK((g - oracle).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((g - g.transpose()).cwiseAbs().maxCoeff() <=
        1e-8 * g.cwiseAbs().maxCoeff());
}

TEST_CASE("residual_gram equals the covariance Schur complement") {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Eigen::Index n = 40 + 10 * trial;
    const Matrix x = corrclust::center_columns(random_matrix(rng, n, 3)).first;
    const Matrix y = corrclust::center_columns(random_matrix(rng, n, 2)).first;
    const double dn = static_cast<double>(n);
    const Matrix sxx = x.transpose() * x / dn;
    const Matrix syy = y.transpose() * y / dn;
    const Matrix sxy = x.transpose() * y / dn;
    const Matrix schur =
        syy - sxy.transpose() * sxx.fullPivLu().solve(sxy);
    const Matrix g = corrclust::residual_gram(x, y);
    CHECK((g / dn - schur).norm() <= 1e-10 * schur.norm());
  }
}

TEST_CASE("residual_gram is positive semidefinite") {
  Rng rng(22);
  const Matrix x = random_matrix(rng, 25, 4);
  const Matrix y = random_matrix(rng, 25, 3);
  const Matrix g = corrclust::residual_gram(x, y);
  const auto pairs = corrclust::sym_eig(g);
  CHECK(pairs.values.minCoeff() >= -1e-8 * g.norm());
  CHECK_THROWS_AS(corrclust::residual_gram(x, random_matrix(rng, 24, 3)),
                  std::invalid_argument);
}

TEST_CASE("pearson_r2 is exactly 1 for affine images") {
  Rng rng(23);
  const Vector a = random_matrix(rng, 30, 1).col(0);
  const Vector b = 2.5 * a.array() - 7.0;
  CHECK(corrclust::pearson_r2(a, b) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(corrclust::pearson_r2(a, Vector::Constant(30, 3.0)) == 0.0);
}

TEST_CASE("standardize_columns composes centering and scaling") {
  Rng rng(24);
  const Matrix m = 3.0 * random_matrix(rng, 50, 3).array() + 5.0;
  const auto [out, stats] = corrclust::standardize_columns(m, true, true);
  const auto n = static_cast<double>(out.rows());
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    CHECK(std::abs(out.col(j).mean()) < 1e-12);
    CHECK((out.col(j).array()).square().sum() / n ==
          doctest::Approx(1.0).epsilon(1e-10));
  }
  const Matrix replayed = corrclust::transform_columns(m, stats);
  CHECK((replayed - out).cwiseAbs().maxCoeff() < 1e-12);
}
