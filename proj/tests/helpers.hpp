#pragma once

#include <random>

#include "homleib/linalg.hpp"

namespace testing_helpers {

inline hlb::Matrix random_matrix(std::mt19937_64& rng, hlb::FieldSpec f, std::size_t rows, std::size_t cols,
                                 int zero_weight = 2) {
  hlb::Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const long v = static_cast<long>(rng() % 9) - 4;
      if (static_cast<int>(rng() % 10) < zero_weight) continue;
      m(r, c) = hlb::Scalar(f, v, 1 + static_cast<long>(rng() % 3));
    }
  return m;
}

}  // namespace testing_helpers
