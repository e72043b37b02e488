#include "corrclust/datagen.hpp"

#include <stdexcept>

#include "corrclust/rng.hpp"

namespace corrclust {

SynthDataset generate_synthetic(const SynthConfig& cfg) {
  if (cfg.n < 1) {
    throw std::invalid_argument("generate_synthetic: n must be >= 1");
  }
  if (cfg.noise_sd < 0.0) {
    throw std::invalid_argument("generate_synthetic: noise_sd must be >= 0");
  }
  if (cfg.map_prob < 0.0 || cfg.map_prob > 1.0) {
    throw std::invalid_argument("generate_synthetic: map_prob not in [0, 1]");
  }
  if ((cfg.map1 - cfg.map2).norm() == 0.0) {
    throw std::invalid_argument("generate_synthetic: maps must be distinct");
  }
  const Eigen::Matrix2d sym_cov =
      0.5 * (cfg.spatial_cov + cfg.spatial_cov.transpose());
  if ((cfg.spatial_cov - sym_cov).cwiseAbs().maxCoeff() >
      1e-10 * (1.0 + sym_cov.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("generate_synthetic: covariance not symmetric");
  }
  Eigen::LLT<Eigen::Matrix2d> llt(sym_cov);
  if (llt.info() != Eigen::Success) {
    throw std::invalid_argument(
        "generate_synthetic: covariance not positive definite");
  }
  const Eigen::Matrix2d chol = llt.matrixL();

  SynthDataset data;
  data.x.resize(cfg.n, 2);
  data.y.resize(cfg.n, 2);
  data.spatial_labels.resize(cfg.n);
  data.corr_labels.resize(cfg.n);

  Rng rng(cfg.seed);
  for (int p = 0; p < cfg.n; ++p) {
    const int spatial = rng.next_unit() < 0.5 ? 0 : 1;
    const Eigen::Vector2d z{rng.next_normal(), rng.next_normal()};
    const Eigen::Vector2d x =
        (spatial == 0 ? cfg.mean1 : cfg.mean2) + chol * z;
    const int corr = rng.next_unit() < cfg.map_prob ? 0 : 1;
    const Eigen::Vector2d noise{rng.next_normal(), rng.next_normal()};
    const Eigen::Vector2d y =
        (corr == 0 ? cfg.map1 : cfg.map2) * x + cfg.noise_sd * noise;

    data.x.row(p) = x.transpose();
    data.y.row(p) = y.transpose();
    data.spatial_labels[p] = spatial;
    data.corr_labels[p] = corr;
  }
  return data;
}

}  // namespace corrclust
