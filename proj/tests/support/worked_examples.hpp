#pragma once

// Comparison matrices from the worked examples, on the multiplicative scale.

#include <vector>

#include "tropirank/matrix.hpp"

namespace tropirank::examples {

inline constexpr Scale kMul = Scale::multiplicative;

// 2x2 reciprocal with a = 3.
inline Matrix two_by_two() {
  return Matrix(kMul, {{1, 3}, {1.0 / 3, 1}});
}

// Eigenvector and complete solution rank differently.
inline Matrix split() {
  return Matrix(kMul, {{1, 2, 0.5, 0.5}, {0.5, 1, 2, 0.5}, {2, 0.5, 1, 0.5}, {2, 2, 2, 1}});
}
inline Matrix split_star() {
  return Matrix(kMul, {{1, 1, 1, 0.25}, {1, 1, 1, 0.25}, {1, 1, 1, 0.25}, {1, 1, 1, 1}});
}
inline Matrix split_times() {
  return Matrix(kMul, {{1, 1, 1, 0.25}, {1, 1, 1, 0.25}, {1, 1, 1, 0.25}, {1, 1, 1, 0.5}});
}
inline Matrix split_a_lambda_powers(int k) {
  if (k == 2) {
    return Matrix(kMul, {{0.25, 0.5, 1, 0.25}, {1, 0.25, 0.5, 0.25}, {0.5, 1, 0.25, 0.25}, {1, 1, 1, 0.25}});
  }
  return Matrix(kMul, {{1, 0.25, 0.5, 0.25}, {0.5, 1, 0.25, 0.25}, {0.25, 0.5, 1, 0.25}, {1, 1, 1, 0.25}});
}

// Reciprocal 4x4.
inline Matrix reciprocal4() {
  return Matrix(kMul, {{1, 3, 4, 2}, {1.0 / 3, 1, 0.5, 1.0 / 3}, {0.25, 2, 1, 4}, {0.5, 3, 0.25, 1}});
}
inline Matrix reciprocal4_a_lambda() {
  return Matrix(kMul, {{0.5, 1.5, 2, 1}, {1.0 / 6, 0.5, 0.25, 1.0 / 6}, {0.125, 1, 0.5, 2}, {0.25, 1.5, 0.125, 0.5}});
}
inline Matrix reciprocal4_a_lambda_sq() {
  return Matrix(kMul, {{0.25, 2, 1, 4}, {1.0 / 12, 0.25, 1.0 / 3, 0.5}, {0.5, 3, 0.25, 1}, {0.25, 0.75, 0.5, 0.25}});
}
inline Matrix reciprocal4_a_lambda_cube() {
  return Matrix(kMul, {{1, 6, 0.5, 2}, {0.125, 0.75, 1.0 / 6, 2.0 / 3}, {0.5, 1.5, 1, 0.5}, {0.125, 0.5, 0.5, 1}});
}
inline Matrix reciprocal4_star() {
  return Matrix(kMul, {{1, 6, 2, 4}, {1.0 / 6, 1, 1.0 / 3, 2.0 / 3}, {0.5, 3, 1, 2}, {0.25, 1.5, 0.5, 1}});
}
inline std::vector<double> reciprocal4_scores() { return {1, 1.0 / 6, 0.5, 0.25}; }
inline std::vector<double> reciprocal4_sum_scores() { return {12.0 / 23, 2.0 / 23, 6.0 / 23, 3.0 / 23}; }

// Nonreciprocal 4x4 with the same solution as reciprocal4.
inline Matrix nonreciprocal4() {
  return Matrix(kMul, {{1, 4, 3, 2}, {1.0 / 3, 1, 0.5, 0.5}, {0.25, 2, 1, 3}, {0.5, 3, 0.25, 1}});
}
inline Matrix nonreciprocal4_conj() {
  return Matrix(kMul, {{1, 3, 4, 2}, {0.25, 1, 0.5, 1.0 / 3}, {1.0 / 3, 2, 1, 4}, {0.5, 2, 1.0 / 3, 1}});
}
inline Matrix nonreciprocal4_b() {
  return Matrix(kMul, {{1, 4, 4, 2}, {1.0 / 3, 1, 0.5, 0.5}, {1.0 / 3, 2, 1, 4}, {0.5, 3, 1.0 / 3, 1}});
}
inline Matrix nonreciprocal4_b_mu() {
  return Matrix(kMul, {{0.5, 2, 2, 1}, {1.0 / 6, 0.5, 0.25, 0.25}, {1.0 / 6, 1, 0.5, 2}, {0.25, 1.5, 1.0 / 6, 0.5}});
}
inline Matrix nonreciprocal4_b_mu_sq() {
  return Matrix(kMul, {{1.0 / 3, 2, 1, 4}, {1.0 / 12, 0.375, 1.0 / 3, 0.5}, {0.5, 3, 1.0 / 3, 1}, {0.25, 0.75, 0.5, 0.375}});
}
inline Matrix nonreciprocal4_b_mu_cube() {
  return Matrix(kMul, {{1, 6, 2.0 / 3, 2}, {0.125, 0.75, 1.0 / 6, 2.0 / 3}, {0.5, 1.5, 1, 0.75}, {0.125, 9.0 / 16, 0.5, 1}});
}

// Two reciprocal matrices.
inline std::vector<Matrix> reciprocal_pair() {
  return {Matrix(kMul, {{1, 3, 4, 2}, {1.0 / 3, 1, 0.5, 1.0 / 3}, {0.25, 2, 1, 3}, {0.5, 3, 1.0 / 3, 1}}),
          Matrix(kMul, {{1, 4, 3, 2}, {0.25, 1, 0.5, 0.5}, {1.0 / 3, 2, 1, 4}, {0.5, 2, 0.25, 1}})};
}

// Two nonreciprocal matrices.
inline std::vector<Matrix> nonreciprocal_pair() {
  return {Matrix(kMul, {{1, 4, 3, 2}, {1.0 / 3, 1, 0.5, 0.5}, {0.25, 2, 1, 4}, {0.5, 3, 0.25, 1}}),
          Matrix(kMul, {{1, 3, 4, 2}, {1.0 / 3, 1, 0.5, 1.0 / 3}, {1.0 / 3, 2, 1, 3}, {0.5, 2, 0.25, 1}})};
}
inline std::vector<Matrix> nonreciprocal_pair_conj() {
  return {Matrix(kMul, {{1, 3, 4, 2}, {0.25, 1, 0.5, 1.0 / 3}, {1.0 / 3, 2, 1, 4}, {0.5, 2, 0.25, 1}}),
          Matrix(kMul, {{1, 3, 3, 2}, {1.0 / 3, 1, 0.5, 0.5}, {0.25, 2, 1, 4}, {0.5, 3, 1.0 / 3, 1}})};
}

// Three reciprocal matrices with weights (1, 1, 1/2). A2 is published with
// (3,2) = 1/3, which breaks reciprocity and the aggregate; 3 is used here.
inline std::vector<Matrix> weighted() {
  return {Matrix(kMul, {{1, 3, 1, 3}, {1.0 / 3, 1, 0.25, 0.5}, {1, 4, 1, 0.5}, {1.0 / 3, 2, 2, 1}}),
          Matrix(kMul, {{1, 2, 1, 4}, {0.5, 1, 1.0 / 3, 0.5}, {1, 3, 1, 1}, {0.25, 2, 1, 1}}),
          Matrix(kMul, {{1, 4, 2, 0.5}, {0.25, 1, 0.5, 1.0 / 3}, {0.5, 2, 1, 0.25}, {2, 3, 4, 1}})};
}
// A2 as published.
inline Matrix weighted_a2_as_published() {
  return Matrix(kMul, {{1, 2, 1, 4}, {0.5, 1, 1.0 / 3, 0.5}, {1, 1.0 / 3, 1, 1}, {0.25, 2, 1, 1}});
}
inline std::vector<double> weighted_weights() { return {1, 1, 0.5}; }
inline Matrix weighted_b() {
  return Matrix(kMul, {{1, 3, 1, 4}, {0.5, 1, 1.0 / 3, 0.5}, {1, 4, 1, 1}, {1, 2, 2, 1}});
}
inline Matrix weighted_b_mu() {
  return Matrix(kMul, {{0.5, 1.5, 0.5, 2}, {0.25, 0.5, 1.0 / 6, 0.25}, {0.5, 2, 0.5, 0.5}, {0.5, 1, 1, 0.5}});
}
inline Matrix weighted_b_mu_sq() {
  return Matrix(kMul, {{1, 2, 2, 1}, {0.125, 0.375, 0.25, 0.5}, {0.5, 1, 0.5, 1}, {0.5, 2, 0.5, 1}});
}
inline Matrix weighted_b_mu_cube() {
  return Matrix(kMul, {{1, 4, 1, 2}, {0.25, 0.5, 0.5, 0.25}, {0.5, 1, 1, 1}, {0.5, 1, 1, 1}});
}
inline Matrix weighted_star() {
  return Matrix(kMul, {{1, 4, 2, 2}, {0.25, 1, 0.5, 0.5}, {0.5, 2, 1, 1}, {0.5, 2, 1, 1}});
}
inline std::vector<double> weighted_scores() { return {1, 0.25, 0.5, 0.5}; }

// Criteria comparison matrix for the weighted set.
inline Matrix ahp_criteria() {
  return Matrix(kMul, {{1, 1, 2}, {1, 1, 2}, {0.5, 0.5, 1}});
}

}  // namespace tropirank::examples
