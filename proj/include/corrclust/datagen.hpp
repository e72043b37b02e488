#pragma once

#include <cstdint>
#include <vector>

#include "corrclust/matrix_ops.hpp"

namespace corrclust {

/// Synthetic two-view construction: X is a mixture of two planted spatial
/// normals, Y applies one of two planted linear maps (chosen independently
/// of the spatial component) plus isotropic noise. Defaults give two
/// well-separated spatial blobs whose correlation structure cuts across
/// them.
struct SynthConfig {
  int n = 500;
  Eigen::Vector2d mean1{-2.0, 0.0};
  Eigen::Vector2d mean2{2.0, 0.0};
  Eigen::Matrix2d spatial_cov = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d map1{{1.0, 0.5}, {0.5, 1.0}};
  Eigen::Matrix2d map2{{-1.0, -0.5}, {-0.5, -1.0}};
  double noise_sd = 0.1;
  /// Probability a point uses map1.
  double map_prob = 0.5;
  std::uint64_t seed = 0;
};

struct SynthDataset {
  Matrix x;
  Matrix y;
  /// Which spatial normal each row came from (0 = mean1, 1 = mean2).
  std::vector<int> spatial_labels;
  /// Which linear map produced each row's y (0 = map1, 1 = map2).
  std::vector<int> corr_labels;
};

/// Deterministic per seed. Per row, the Rng draw order is: spatial uniform,
/// two normals for x, map uniform, two normals for the y noise.
SynthDataset generate_synthetic(const SynthConfig& cfg);

}  // namespace corrclust
