#pragma once

/**
 * @file solver.hpp
 * @brief Approximation of pairwise comparison matrices by reciprocal rank-one
 * matrices x x^-.
 *
 * Each problem reduces to minimizing x^- B x for an aggregate matrix B:
 *
 *   single:    B = A (+) A^-
 *   multi:     B = (+)_i (A_i (+) A_i^-)
 *   weighted:  B = (+)_i w_i (A_i (+) A_i^-)
 *
 * The minimum is the spectral radius mu of B and the solution set is exactly
 * {(mu^-1 B)* u : u != 0}. Reciprocal inputs satisfy A^- = A, in which case
 * the A^- term is skipped.
 */

#include <span>
#include <vector>

#include "tropirank/linalg.hpp"
#include "tropirank/matrix.hpp"
#include "tropirank/semifield.hpp"

namespace tropirank {

struct SolveOptions {
  double tolerance = kDefaultTolerance;
  SpectralMethod spectral_method = SpectralMethod::karp;
};

struct SolveResult {
  /// Minimal approximation error.
  Scalar mu;
  /// (mu^-1 B)*; its columns generate every solution.
  Matrix star;
  /// Minimal generating subset of the columns of star.
  Matrix generators;
  /// First column of generators.
  Matrix representative;
  /// The matrix B that was minimized over.
  Matrix aggregate;
};

struct ConsistencyReport {
  bool is_reciprocal = false;
  bool is_consistent = false;
  /// Largest |a_ij - a_ik a_kj| measured in the log domain (absolute
  /// difference for the additive scale, |log ratio| for the multiplicative).
  double max_transitivity_violation = 0.0;
  Scalar lambda;
};

/// Reciprocity, transitivity and spectral radius of a square matrix without
/// zero entries. Throws UsageError otherwise.
ConsistencyReport check_matrix(const Matrix& a, double tol = kDefaultTolerance);

/// A^- == A within tol.
bool is_reciprocal(const Matrix& a, double tol = kDefaultTolerance);

/// A (+) A^-, or A itself when A is already reciprocal.
Matrix symmetrize(const Matrix& a, double tol = kDefaultTolerance);

/// Solves min_x d(A, x x^-). Throws PreconditionError for zero entries.
SolveResult solve_single(const Matrix& a, const SolveOptions& options = {});

/// Solves min_x max_i d(A_i, x x^-).
SolveResult solve_multi(std::span<const Matrix> matrices, const SolveOptions& options = {});

/// Solves min_x max_i w_i d(A_i, x x^-). Weights live on the matrices' scale.
SolveResult solve_weighted(std::span<const Matrix> matrices, std::span<const Scalar> weights,
                           const SolveOptions& options = {});

/// Spectral radius of B, star and generators for an aggregate already built.
SolveResult solve_aggregate(Matrix aggregate, const SolveOptions& options = {});

}  // namespace tropirank
