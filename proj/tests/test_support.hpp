#pragma once

#include <cstdint>

#include "corrclust/matrix_ops.hpp"
#include "corrclust/rng.hpp"

namespace test_support {

inline corrclust::Matrix random_matrix(corrclust::Rng& rng, Eigen::Index rows,
                                       Eigen::Index cols) {
  corrclust::Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      m(i, j) = rng.next_normal();
    }
  }
  return m;
}

inline corrclust::Matrix random_symmetric(corrclust::Rng& rng,
                                          Eigen::Index dim) {
  corrclust::Matrix m = random_matrix(rng, dim, dim);
  return 0.5 * (m + m.transpose());
}

}  // namespace test_support
