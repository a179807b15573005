#include "tropirank/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

namespace tropirank {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_same_scale(const Matrix& a, const Matrix& b, const char* op) {
  if (a.scale() != b.scale()) throw UsageError(std::string(op) + ": scale mismatch");
}

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw UsageError(std::string(op) + ": matrix must be square, got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

void require_column(const Matrix& v, const char* op) {
  if (v.cols() != 1) throw UsageError(std::string(op) + ": expected a column vector");
}

template <class SF>
void mul_into(const Matrix& a, const Matrix& b, Matrix& out) {
  const std::size_t n = a.rows(), inner = a.cols(), m = b.cols();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a(i, k);
      if (aik == SF::zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        out(i, j) = SF::add(out(i, j), SF::mul(aik, b(k, j)));
      }
    }
  }
}

// Warshall-style closure: afterwards s(i,j) is the heaviest walk weight from
// i to j, provided no cycle is heavier than the identity.
template <class SF>
void close_in_place(Matrix& s) {
  const std::size_t n = s.rows();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const double sik = s(i, k);
      if (sik == SF::zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        s(i, j) = SF::add(s(i, j), SF::mul(sik, s(k, j)));
      }
    }
  }
}

double max_finite_magnitude(const Matrix& log_matrix) {
  double mag = 0.0;
  for (double v : log_matrix.values()) {
    if (std::isfinite(v)) mag = std::max(mag, std::abs(v));
  }
  return mag;
}

// Maximum cycle mean of a max-plus matrix as the maximum of tr(L^k) / k.
double cycle_mean_trace_powers(const Matrix& log_a) {
  const std::size_t n = log_a.rows();
  double best = kNegInf;
  Matrix power = log_a;
  for (std::size_t k = 1; k <= n; ++k) {
    double tr = kNegInf;
    for (std::size_t i = 0; i < n; ++i) tr = std::max(tr, power(i, i));
    if (tr > kNegInf) best = std::max(best, tr / static_cast<double>(k));
    if (k < n) {
      Matrix next(n, n, Scale::additive);
      mul_into<semiring::MaxPlus>(power, log_a, next);
      power = std::move(next);
    }
  }
  return best;
}

// Karp's algorithm with an implicit source joined to every node by a zero
// weight arc.
double cycle_mean_karp(const Matrix& log_a) {
  const std::size_t n = log_a.rows();
  // walk[k][v]: heaviest walk of exactly k arcs ending at v.
  std::vector<std::vector<double>> walk(n + 1, std::vector<double>(n, kNegInf));
  std::fill(walk[0].begin(), walk[0].end(), 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t u = 0; u < n; ++u) {
      const double wu = walk[k - 1][u];
      if (wu == kNegInf) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const double w = log_a(u, v);
        if (w == kNegInf) continue;
        walk[k][v] = std::max(walk[k][v], wu + w);
      }
    }
  }
  double best = kNegInf;
  for (std::size_t v = 0; v < n; ++v) {
    const double wn = walk[n][v];
    if (wn == kNegInf) continue;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
      if (walk[k][v] == kNegInf) continue;
      worst = std::min(worst, (wn - walk[k][v]) / static_cast<double>(n - k));
    }
    best = std::max(best, worst);
  }
  return best;
}

// Shortest critical cycle, rotated to its smallest node, lexicographically
// smallest among ties. An arc (i,j) is critical when it lies on a cycle of
// mean lambda, i.e. a(i,j) - lambda + closure(j,i) == 0.
std::vector<std::size_t> find_witness_cycle(const Matrix& log_a, double lambda, double tol) {
  const std::size_t n = log_a.rows();
  Matrix reduced = log_a;
  for (double& v : reduced.values()) {
    if (v != kNegInf) v -= lambda;
  }
  Matrix closure = reduced;
  close_in_place<semiring::MaxPlus>(closure);
  for (std::size_t i = 0; i < n; ++i) closure(i, i) = std::max(closure(i, i), 0.0);

  const double slack = tol * std::max(1.0, max_finite_magnitude(log_a));
  std::vector<std::vector<char>> critical(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double w = reduced(i, j);
      critical[i][j] = w != kNegInf && closure(j, i) != kNegInf && w + closure(j, i) >= -slack;
    }
  }

  constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
  std::size_t best_len = kUnreached;
  std::vector<std::size_t> best;
  for (std::size_t s = 0; s < n; ++s) {
    // dist[v]: fewest critical arcs from v to s using only nodes >= s.
    std::vector<std::size_t> dist(n, kUnreached);
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t u = s; u < n; ++u) {
        if (critical[u][v] && dist[u] == kUnreached) {
          dist[u] = dist[v] + 1;
          queue.push_back(u);
        }
      }
    }
    std::size_t len = kUnreached;
    for (std::size_t v = s; v < n; ++v) {
      if (critical[s][v] && dist[v] != kUnreached) len = std::min(len, dist[v] + 1);
    }
    if (len == kUnreached || len >= best_len) continue;

    std::vector<std::size_t> cycle{s};
    std::size_t current = s;
    for (std::size_t remaining = len; remaining > 1; --remaining) {
      for (std::size_t v = s; v < n; ++v) {
        if (v != s && critical[current][v] && dist[v] == remaining - 1) {
          current = v;
          break;
        }
      }
      cycle.push_back(current);
    }
    best_len = len;
    best = std::move(cycle);
  }
  return best;
}

template <class SF>
bool in_span_impl(const Matrix& c, const Matrix& v, double tol) {
  const std::size_t rows = c.rows(), cols = c.cols();
  std::vector<double> coeff(cols, SF::zero());
  for (std::size_t j = 0; j < cols; ++j) {
    bool any = false;
    double x = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
      if (c(i, j) == SF::zero()) continue;
      const double r = SF::mul(v(i, 0), SF::inv(c(i, j)));
      x = any ? std::min(x, r) : r;
      any = true;
    }
    if (any) coeff[j] = x;
  }
  for (std::size_t i = 0; i < rows; ++i) {
    double w = SF::zero();
    for (std::size_t j = 0; j < cols; ++j) {
      if (coeff[j] == SF::zero() || c(i, j) == SF::zero()) continue;
      w = SF::add(w, SF::mul(c(i, j), coeff[j]));
    }
    if (!approx_equal(w, v(i, 0), tol)) return false;
  }
  return true;
}

bool in_span_unchecked(const Matrix& c, const Matrix& v, double tol) {
  if (c.cols() == 0) return false;
  return semiring::visit(c.scale(), [&](auto sf) {
    return in_span_impl<decltype(sf)>(c, v, tol);
  });
}

}  // namespace

Matrix mat_add(const Matrix& a, const Matrix& b) {
  require_same_scale(a, b, "mat_add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw UsageError("mat_add: shape mismatch");
  Matrix out = a;
  auto ov = out.values();
  auto bv = b.values();
  for (std::size_t k = 0; k < ov.size(); ++k) ov[k] = std::max(ov[k], bv[k]);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_same_scale(a, b, "mat_mul");
  if (a.cols() != b.rows()) {
    throw UsageError("mat_mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + ")");
  }
  Matrix out(a.rows(), b.cols(), a.scale());
  semiring::visit(a.scale(), [&](auto sf) { mul_into<decltype(sf)>(a, b, out); });
  return out;
}

Matrix scale_by(const Scalar& c, const Matrix& a) {
  if (c.scale() != a.scale()) throw UsageError("scale_by: scale mismatch");
  Matrix out = a;
  semiring::visit(a.scale(), [&](auto sf) {
    for (double& v : out.values()) v = sf.mul(c.value(), v);
  });
  return out;
}

Matrix conj_transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows(), a.scale());
  semiring::visit(a.scale(), [&](auto sf) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const double v = a(i, j);
        out(j, i) = v == sf.zero() ? sf.zero() : sf.inv(v);
      }
    }
  });
  return out;
}

Scalar trace(const Matrix& a) {
  require_square(a, "trace");
  double tr = zero_value(a.scale());
  for (std::size_t i = 0; i < a.rows(); ++i) tr = std::max(tr, a(i, i));
  return {tr, a.scale()};
}

Matrix mat_pow(const Matrix& a, unsigned k) {
  require_square(a, "mat_pow");
  Matrix out = Matrix::identity(a.rows(), a.scale());
  for (unsigned p = 0; p < k; ++p) out = mat_mul(out, a);
  return out;
}

SpectralResult spectral_radius(const Matrix& a, SpectralMethod method, double tol) {
  require_square(a, "spectral_radius");
  const Matrix log_a = a.to_additive();
  const double lambda_log = method == SpectralMethod::karp ? cycle_mean_karp(log_a)
                                                           : cycle_mean_trace_powers(log_a);
  if (lambda_log == kNegInf) return {Scalar::zero(a.scale()), {}};
  Scalar lambda(lambda_log, Scale::additive);
  if (a.scale() == Scale::multiplicative) lambda = lambda.to_multiplicative();
  return {lambda, find_witness_cycle(log_a, lambda_log, tol)};
}

Matrix kleene_star(const Matrix& a) {
  require_square(a, "kleene_star");
  const std::size_t n = a.rows();
  Matrix s = a;
  const bool bounded = semiring::visit(a.scale(), [&](auto sf) {
    using SF = decltype(sf);
    close_in_place<SF>(s);
    for (std::size_t i = 0; i < n; ++i) {
      if (s(i, i) > SF::one() && !approx_equal(s(i, i), SF::one())) return false;
      s(i, i) = SF::add(s(i, i), SF::one());
    }
    return true;
  });
  if (bounded) return s;

  Matrix sum = Matrix::identity(n, a.scale());
  Matrix power = sum;
  for (std::size_t k = 1; k < n; ++k) {
    power = mat_mul(power, a);
    sum = mat_add(sum, power);
  }
  return sum;
}

Matrix eigenspace_generators(const Matrix& a, double tol) {
  require_square(a, "eigenspace_generators");
  const Scalar lambda = spectral_radius(a, SpectralMethod::karp, tol).lambda;
  if (lambda.is_zero()) throw DomainError("eigenspace_generators: spectral radius is zero");
  const Matrix a_lambda = scale_by(inv(lambda), a);
  const Matrix star = kleene_star(a_lambda);
  const Matrix times = mat_mul(a_lambda, star);

  const std::size_t n = a.rows();
  std::vector<Matrix> picked;
  for (std::size_t j = 0; j < n; ++j) {
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = approx_equal(star(i, j), times(i, j), tol);
    if (same) picked.push_back(star.column_matrix(j));
  }
  return hstack(picked, n, a.scale());
}

Scalar vec_distance(const Matrix& x, const Matrix& y) {
  require_same_scale(x, y, "vec_distance");
  require_column(x, "vec_distance");
  require_column(y, "vec_distance");
  if (x.rows() != y.rows()) throw UsageError("vec_distance: length mismatch");
  if (!x.is_regular() || !y.is_regular()) {
    throw UsageError("vec_distance: vectors must be regular");
  }
  const double d = semiring::visit(x.scale(), [&](auto sf) {
    double acc = sf.zero();
    for (std::size_t i = 0; i < x.rows(); ++i) {
      acc = sf.add(acc, sf.mul(sf.inv(y(i, 0)), x(i, 0)));
      acc = sf.add(acc, sf.mul(sf.inv(x(i, 0)), y(i, 0)));
    }
    return acc;
  });
  return {d, x.scale()};
}

Scalar mat_distance(const Matrix& a, const Matrix& b) {
  require_same_scale(a, b, "mat_distance");
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw UsageError("mat_distance: shape mismatch");
  }
  require_square(a, "mat_distance");
  if (!a.is_regular() || !b.is_regular()) {
    throw UsageError("mat_distance: matrices must not contain zero entries");
  }
  return oplus(trace(mat_mul(conj_transpose(b), a)), trace(mat_mul(conj_transpose(a), b)));
}

Scalar quadratic_form(const Matrix& x, const Matrix& a) {
  require_same_scale(x, a, "quadratic_form");
  require_column(x, "quadratic_form");
  require_square(a, "quadratic_form");
  if (x.rows() != a.rows()) throw UsageError("quadratic_form: length mismatch");
  if (!x.is_regular()) throw UsageError("quadratic_form: vector must be regular");
  const double q = semiring::visit(a.scale(), [&](auto sf) {
    double acc = sf.zero();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const double xi_inv = sf.inv(x(i, 0));
      for (std::size_t j = 0; j < a.cols(); ++j) {
        acc = sf.add(acc, sf.mul(xi_inv, sf.mul(a(i, j), x(j, 0))));
      }
    }
    return acc;
  });
  return {q, a.scale()};
}

bool is_in_span(const Matrix& c, const Matrix& v, double tol) {
  require_same_scale(c, v, "is_in_span");
  require_column(v, "is_in_span");
  if (c.rows() != v.rows()) throw UsageError("is_in_span: row count mismatch");
  if (!v.is_regular()) throw UsageError("is_in_span: vector must be regular");
  return in_span_unchecked(c, v, tol);
}

Matrix reduce_generators(const Matrix& c, double tol) {
  std::vector<std::size_t> keep(c.cols());
  for (std::size_t j = 0; j < keep.size(); ++j) keep[j] = j;

  for (std::size_t j = c.cols(); j-- > 0;) {
    if (keep.size() <= 1) break;
    std::vector<Matrix> others;
    others.reserve(keep.size() - 1);
    for (std::size_t k : keep) {
      if (k != j) others.push_back(c.column_matrix(k));
    }
    if (in_span_unchecked(hstack(others, c.rows(), c.scale()), c.column_matrix(j), tol)) {
      keep.erase(std::find(keep.begin(), keep.end(), j));
    }
  }

  std::vector<Matrix> kept;
  kept.reserve(keep.size());
  for (std::size_t k : keep) kept.push_back(c.column_matrix(k));
  return hstack(kept, c.rows(), c.scale());
}

bool collinear(const Matrix& x, const Matrix& y, double tol) {
  require_same_scale(x, y, "collinear");
  require_column(x, "collinear");
  require_column(y, "collinear");
  if (x.rows() != y.rows()) return false;
  return semiring::visit(x.scale(), [&](auto sf) {
    double factor = sf.zero();
    bool found = false;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      if ((x(i, 0) == sf.zero()) != (y(i, 0) == sf.zero())) return false;
      if (!found && x(i, 0) != sf.zero()) {
        factor = sf.mul(y(i, 0), sf.inv(x(i, 0)));
        found = true;
      }
    }
    if (!found) return true;
    for (std::size_t i = 0; i < x.rows(); ++i) {
      if (!approx_equal(sf.mul(factor, x(i, 0)), y(i, 0), tol)) return false;
    }
    return true;
  });
}

}  // namespace tropirank
