#pragma once

/**
 * @file linalg.hpp
 * @brief Vector and matrix algebra over the max-times / max-plus semifields.
 *
 * All functions are pure. Arguments must share one scale; mismatched shapes or
 * scales raise UsageError.
 */

#include <cstddef>
#include <vector>

#include "tropirank/matrix.hpp"
#include "tropirank/semifield.hpp"

namespace tropirank {

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// Scalar multiple c (x) A.
Matrix scale_by(const Scalar& c, const Matrix& a);

/// Multiplicative conjugate transpose: (A^-)_{ij} = a_{ji}^{-1}, zero stays zero.
Matrix conj_transpose(const Matrix& a);

Scalar trace(const Matrix& a);

/// A^k for k >= 0 (A^0 = I).
Matrix mat_pow(const Matrix& a, unsigned k);

enum class SpectralMethod {
  trace_powers,  ///< max over k of tr(A^k)^{1/k}; O(n^4)
  karp,          ///< Karp's maximum cycle mean; O(n^3)
};

struct SpectralResult {
  Scalar lambda;
  /// 0-based nodes of a cycle whose mean equals lambda. Among the shortest such
  /// cycles, the lexicographically smallest one after rotating it to start at
  /// its smallest node. Empty when lambda is the zero element.
  std::vector<std::size_t> witness_cycle;
};

/// Spectral radius (maximum cycle mean) of a square matrix.
SpectralResult spectral_radius(const Matrix& a,
                               SpectralMethod method = SpectralMethod::trace_powers,
                               double tol = kDefaultTolerance);

/// I (+) A (+) ... (+) A^{n-1}.
///
/// Uses an in-place closure (n^3). When A has a cycle heavier than the
/// identity the closure is not the finite power sum, so the power sum is
/// evaluated directly in that case.
Matrix kleene_star(const Matrix& a);

/// Columns of (lambda^-1 A)* that coincide with the same columns of
/// (lambda^-1 A)(lambda^-1 A)*. Every returned column is an eigenvector of A
/// for lambda. Returns an n x 0 matrix when no column coincides. Throws
/// DomainError when the spectral radius is zero.
Matrix eigenspace_generators(const Matrix& a, double tol = kDefaultTolerance);

/// d(x, y) = y^- x (+) x^- y for regular column vectors.
Scalar vec_distance(const Matrix& x, const Matrix& y);

/// d(A, B) = tr(B^- A) (+) tr(A^- B) for matrices without zero entries.
Scalar mat_distance(const Matrix& a, const Matrix& b);

/// x^- A x for a regular column vector x.
Scalar quadratic_form(const Matrix& x, const Matrix& a);

/// True when the regular column vector v is a tropical linear combination of
/// the columns of c. Uses the residuation x = (v^- C)^-, then checks C x == v.
bool is_in_span(const Matrix& c, const Matrix& v, double tol = kDefaultTolerance);

/// Minimal subset of the columns of c spanning the same space. Columns are
/// tested for redundancy from the last to the first, so among collinear
/// columns the leftmost one survives.
Matrix reduce_generators(const Matrix& c, double tol = kDefaultTolerance);

/// y == c x for some nonzero scalar c.
bool collinear(const Matrix& x, const Matrix& y, double tol = kDefaultTolerance);

}  // namespace tropirank
