#include "tropirank/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tropirank {

namespace {

void require_positive(const Matrix& a, const char* what) {
  if (!a.is_square()) {
    throw UsageError(std::string(what) + ": matrix must be square, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (a.rows() == 0) throw UsageError(std::string(what) + ": empty matrix");
  if (!a.is_regular()) {
    throw PreconditionError(std::string(what) + ": zero entries not allowed on this scale");
  }
}

void require_compatible(std::span<const Matrix> matrices) {
  if (matrices.empty()) throw UsageError("no matrices given");
  const Matrix& first = matrices.front();
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const Matrix& m = matrices[i];
    if (m.scale() != first.scale()) {
      throw UsageError("matrix " + std::to_string(i) + " has a different scale");
    }
    if (m.rows() != first.rows() || m.cols() != first.cols()) {
      throw UsageError("matrix " + std::to_string(i) + " has a different shape");
    }
    require_positive(m, "solve");
  }
}

}  // namespace

bool is_reciprocal(const Matrix& a, double tol) {
  if (!a.is_square()) return false;
  return approx_equal(conj_transpose(a), a, tol);
}

Matrix symmetrize(const Matrix& a, double tol) {
  if (is_reciprocal(a, tol)) return a;
  return mat_add(a, conj_transpose(a));
}

ConsistencyReport check_matrix(const Matrix& a, double tol) {
  if (!a.is_square()) throw UsageError("check_matrix: matrix must be square");
  if (!a.is_regular()) throw UsageError("check_matrix: zero entries not allowed on this scale");

  ConsistencyReport report{.is_reciprocal = is_reciprocal(a, tol),
                           .lambda = spectral_radius(a, SpectralMethod::karp, tol).lambda};
  const Matrix log_a = a.to_additive();
  const std::size_t n = a.rows();
  double worst = 0.0;
  bool transitive = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const double via = log_a(i, k) + log_a(k, j);
        worst = std::max(worst, std::abs(log_a(i, j) - via));
        if (!approx_equal(a(i, j), semiring::visit(a.scale(), [&](auto sf) {
              return sf.mul(a(i, k), a(k, j));
            }), tol)) {
          transitive = false;
        }
      }
    }
  }
  report.max_transitivity_violation = worst;
  report.is_consistent = transitive && report.is_reciprocal;
  return report;
}

SolveResult solve_aggregate(Matrix aggregate, const SolveOptions& options) {
  require_positive(aggregate, "solve");
  const Scalar mu = spectral_radius(aggregate, options.spectral_method, options.tolerance).lambda;
  Matrix star = kleene_star(scale_by(inv(mu), aggregate));
  Matrix generators = reduce_generators(star, options.tolerance);
  Matrix representative = generators.column_matrix(0);
  return {mu, std::move(star), std::move(generators), std::move(representative),
          std::move(aggregate)};
}

SolveResult solve_single(const Matrix& a, const SolveOptions& options) {
  require_positive(a, "solve_single");
  return solve_aggregate(symmetrize(a, options.tolerance), options);
}

SolveResult solve_multi(std::span<const Matrix> matrices, const SolveOptions& options) {
  require_compatible(matrices);
  Matrix aggregate = symmetrize(matrices.front(), options.tolerance);
  for (const Matrix& m : matrices.subspan(1)) {
    aggregate = mat_add(aggregate, symmetrize(m, options.tolerance));
  }
  return solve_aggregate(std::move(aggregate), options);
}

SolveResult solve_weighted(std::span<const Matrix> matrices, std::span<const Scalar> weights,
                           const SolveOptions& options) {
  require_compatible(matrices);
  if (weights.size() != matrices.size()) {
    throw UsageError("got " + std::to_string(weights.size()) + " weights for " +
                     std::to_string(matrices.size()) + " matrices");
  }
  const Scale scale = matrices.front().scale();
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].scale() != scale) {
      throw UsageError("weight " + std::to_string(i) + " has a different scale");
    }
    if (weights[i].is_zero()) {
      throw PreconditionError("weight " + std::to_string(i) + " is zero");
    }
  }
  Matrix aggregate = scale_by(weights[0], symmetrize(matrices[0], options.tolerance));
  for (std::size_t i = 1; i < matrices.size(); ++i) {
    aggregate = mat_add(aggregate, scale_by(weights[i], symmetrize(matrices[i], options.tolerance)));
  }
  return solve_aggregate(std::move(aggregate), options);
}

}  // namespace tropirank
