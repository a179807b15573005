#pragma once

/**
 * @file ahp.hpp
 * @brief Two-level tropical AHP and rating reports.
 *
 * Criteria weights come from the criteria comparison matrix via the
 * single-matrix solver; the alternative matrices are then combined with the
 * weighted solver.
 */

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "tropirank/matrix.hpp"
#include "tropirank/solver.hpp"

namespace tropirank {

enum class Normalization {
  none,
  max,  ///< largest score becomes the identity (1, or 0 on the additive scale)
  sum,  ///< ordinary sum of scores is 1; multiplicative scale only
};

std::string_view to_string(Normalization n) noexcept;
Normalization parse_normalization(std::string_view name);

/// Groups of 0-based alternative indices, best first. Indices inside a group
/// are tied and listed in ascending order.
using Ranking = std::vector<std::vector<std::size_t>>;

struct AhpProblem {
  Matrix criteria;
  std::vector<Matrix> alternatives;
};

struct RatingReport {
  Scalar mu;
  /// Criteria weights; present for AHP runs and for weighted solves.
  std::optional<std::vector<double>> weights;
  /// One entry per generator of the solution space, in generator order.
  std::vector<std::vector<double>> generators;
  std::vector<double> scores;
  Ranking ranking;
  /// Ranking induced by each generator.
  std::vector<Ranking> generator_rankings;
  bool ranking_stable = true;
  Normalization normalization = Normalization::max;
  Scale scale = Scale::multiplicative;
};

/// Rescales a score vector by a positive factor (shift on the additive scale).
/// Throws UsageError for sum normalization on the additive scale.
std::vector<double> normalize(std::span<const double> scores, Scale scale, Normalization how);

/// Descending order, entries within tol of the group's leading score tie.
Ranking rank_scores(std::span<const double> scores, double tol = kDefaultTolerance);

/// Representative score vector of the criteria matrix.
std::vector<double> derive_weights(const Matrix& criteria, const SolveOptions& options = {});

RatingReport make_report(const SolveResult& result, Normalization how,
                         double tol = kDefaultTolerance);

RatingReport run_ahp(const AhpProblem& problem, Normalization how = Normalization::max,
                     const SolveOptions& options = {});

}  // namespace tropirank
