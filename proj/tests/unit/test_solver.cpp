#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "worked_examples.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "tropirank/solver.hpp"

using namespace tropirank;
namespace ex = tropirank::examples;

namespace {
constexpr Scale kMul = Scale::multiplicative;
constexpr Scale kAdd = Scale::additive;
constexpr double kTol = 1e-9;

std::vector<Scalar> mul_weights(const std::vector<double>& ws) {
  std::vector<Scalar> out;
  for (double w : ws) out.emplace_back(w, kMul);
  return out;
}
}  // namespace

TEST_CASE("check_matrix") {
  const ConsistencyReport r3 = check_matrix(ex::reciprocal4());
  CHECK(r3.is_reciprocal);
  CHECK_FALSE(r3.is_consistent);
  CHECK(r3.lambda.value() == doctest::Approx(2).epsilon(1e-12));
  CHECK(r3.max_transitivity_violation > 0);

  const Matrix x = Matrix::column(kMul, ex::reciprocal4_scores());
  const ConsistencyReport rc = check_matrix(mat_mul(x, conj_transpose(x)));
  CHECK(rc.is_reciprocal);
  CHECK(rc.is_consistent);
  CHECK(rc.lambda.value() == doctest::Approx(1).epsilon(1e-12));
  CHECK(rc.max_transitivity_violation < 1e-12);

  CHECK_FALSE(check_matrix(ex::nonreciprocal4()).is_reciprocal);
  CHECK(check_matrix(Matrix(kMul, {{1}})).is_consistent);

  Matrix with_zero = ex::reciprocal4();
  with_zero(1, 2) = 0;
  CHECK_THROWS_AS(check_matrix(with_zero), UsageError);
  CHECK_THROWS_AS(check_matrix(Matrix(2, 3, kMul)), UsageError);
}

TEST_CASE("consistent implies unit spectral radius") {
  testing::Generator gen(3);
  for (int k = 0; k < 200; ++k) {
    const Scale s = k % 2 ? kMul : kAdd;
    const Matrix x = gen.positive(gen.index(1, 6), 1, s);
    const ConsistencyReport r = check_matrix(mat_mul(x, conj_transpose(x)));
    CHECK(r.is_consistent);
    CHECK(approx_equal(r.lambda, Scalar::one(s), kTol));
  }
}

TEST_CASE("solve_single on a reciprocal matrix") {
  const SolveResult r = solve_single(ex::reciprocal4());
  CHECK(r.mu.value() == doctest::Approx(2).epsilon(1e-12));
  CHECK(approx_equal(r.aggregate, ex::reciprocal4()));
  CHECK(approx_equal(r.star, ex::reciprocal4_star()));
  CHECK(r.generators.cols() == 1);
  CHECK(approx_equal(r.representative, Matrix::column(kMul, ex::reciprocal4_scores())));
}

TEST_CASE("solve_single on a nonreciprocal matrix") {
  const SolveResult r = solve_single(ex::nonreciprocal4());
  CHECK(approx_equal(r.aggregate, ex::nonreciprocal4_b()));
  CHECK(r.mu.value() == doctest::Approx(2).epsilon(1e-12));
  const Matrix b_mu = scale_by(inv(r.mu), r.aggregate);
  CHECK(approx_equal(b_mu, ex::nonreciprocal4_b_mu()));
  CHECK(approx_equal(mat_pow(b_mu, 2), ex::nonreciprocal4_b_mu_sq()));
  CHECK(approx_equal(mat_pow(b_mu, 3), ex::nonreciprocal4_b_mu_cube()));
  CHECK(approx_equal(r.star, ex::reciprocal4_star()));
  CHECK(approx_equal(r.representative, Matrix::column(kMul, ex::reciprocal4_scores())));
}

TEST_CASE("solve_single on a consistent matrix") {
  const Matrix x = Matrix::column(kMul, std::vector<double>{2, 0.5, 3});
  const SolveResult r = solve_single(mat_mul(x, conj_transpose(x)));
  CHECK(r.mu.value() == doctest::Approx(1).epsilon(1e-12));
  CHECK(collinear(r.representative, x));
}

TEST_CASE("solve_single degenerate and invalid inputs") {
  const SolveResult one = solve_single(Matrix(kMul, {{1}}));
  CHECK(one.mu.value() == 1);
  CHECK(one.representative(0, 0) == 1);

  const SolveResult two = solve_single(Matrix(kMul, {{2}}));
  CHECK(two.mu.value() == 2);  // d([2], [1]) = 2
  CHECK(two.representative(0, 0) == 1);

  Matrix with_zero = ex::reciprocal4();
  with_zero(2, 1) = 0;
  CHECK_THROWS_AS(solve_single(with_zero), PreconditionError);
  CHECK_THROWS_AS(solve_single(Matrix(2, 3, kMul)), UsageError);
}

TEST_CASE("solve_multi") {
  SUBCASE("reciprocal pair") {
    const SolveResult r = solve_multi(ex::reciprocal_pair());
    CHECK(approx_equal(r.aggregate, ex::nonreciprocal4_b()));
    CHECK(r.mu.value() == doctest::Approx(2).epsilon(1e-12));
    CHECK(approx_equal(r.representative, Matrix::column(kMul, ex::reciprocal4_scores())));
  }
  SUBCASE("nonreciprocal pair") {
    const SolveResult r = solve_multi(ex::nonreciprocal_pair());
    CHECK(approx_equal(r.aggregate, ex::nonreciprocal4_b()));
    CHECK(approx_equal(r.representative, Matrix::column(kMul, ex::reciprocal4_scores())));
  }
  SUBCASE("single matrix matches solve_single") {
    const std::vector<Matrix> one{ex::nonreciprocal4()};
    const SolveResult a = solve_multi(one), b = solve_single(ex::nonreciprocal4());
    CHECK(a.mu == b.mu);
    CHECK(a.star == b.star);
    CHECK(a.generators == b.generators);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(solve_multi(std::vector<Matrix>{}), UsageError);
    CHECK_THROWS_AS(solve_multi(std::vector<Matrix>{ex::reciprocal4(), ex::ahp_criteria()}), UsageError);
    CHECK_THROWS_AS(solve_multi(std::vector<Matrix>{ex::reciprocal4(), ex::reciprocal4().to_additive()}),
                    UsageError);
    Matrix with_zero = ex::reciprocal4();
    with_zero(0, 3) = 0;
    CHECK_THROWS_AS(solve_multi(std::vector<Matrix>{ex::reciprocal4(), with_zero}), PreconditionError);
  }
}

TEST_CASE("solve_weighted") {
  SUBCASE("three criteria with weights (1, 1, 1/2)") {
    const SolveResult r = solve_weighted(ex::weighted(), mul_weights(ex::weighted_weights()));
    CHECK(approx_equal(r.aggregate, ex::weighted_b()));
    CHECK(r.mu.value() == doctest::Approx(2).epsilon(1e-12));
    const Matrix b_mu = scale_by(inv(r.mu), r.aggregate);
    CHECK(approx_equal(b_mu, ex::weighted_b_mu()));
    CHECK(approx_equal(r.star, ex::weighted_star()));
    CHECK(r.generators.cols() == 1);
    CHECK(approx_equal(r.representative, Matrix::column(kMul, ex::weighted_scores())));
  }
  SUBCASE("A2 as published is not reciprocal") {
    auto ms = ex::weighted();
    ms[1] = ex::weighted_a2_as_published();
    CHECK_FALSE(is_reciprocal(ms[1]));
    const SolveResult r = solve_weighted(ms, mul_weights(ex::weighted_weights()));
    CHECK(r.aggregate(1, 2) == doctest::Approx(3));
    CHECK(r.mu.value() == doctest::Approx(2 * std::sqrt(3.0)).epsilon(1e-12));
  }
  SUBCASE("unit weights match solve_multi") {
    const auto ms = ex::weighted();
    const SolveResult a = solve_weighted(ms, mul_weights({1, 1, 1}));
    const SolveResult b = solve_multi(ms);
    CHECK(a.mu == b.mu);
    CHECK(approx_equal(a.star, b.star));
  }
  SUBCASE("one weighted matrix scales mu but not the generators") {
    testing::Generator gen(13);
    for (int k = 0; k < 50; ++k) {
      const Matrix a = gen.positive(4, 4, kMul);
      const Scalar w(gen.value(kMul), kMul);
      const SolveResult plain = solve_single(a);
      const SolveResult weighted = solve_weighted(std::vector<Matrix>{a}, std::vector<Scalar>{w});
      CHECK(approx_equal(weighted.mu, otimes(w, plain.mu), kTol));
      CHECK(approx_equal(weighted.generators, plain.generators, kTol));
    }
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(solve_weighted(ex::weighted(), mul_weights({1, 1})), UsageError);
    CHECK_THROWS_AS(solve_weighted(ex::weighted(), mul_weights({1, 0, 1})), PreconditionError);
  }
}

TEST_CASE("objective equals the quadratic form of A (+) A^-") {
  testing::Generator gen(19);
  for (int k = 0; k < 500; ++k) {
    const Scale s = k % 2 ? kMul : kAdd;
    const std::size_t n = gen.index(1, 6);
    const Matrix a = gen.positive(n, n, s);
    const Matrix x = gen.positive(n, 1, s);
    const Scalar d = mat_distance(a, mat_mul(x, conj_transpose(x)));
    const Scalar q = quadratic_form(x, mat_add(a, conj_transpose(a)));
    CHECK(approx_equal(d, q, kTol));
  }
}

TEST_CASE("reciprocal input: aggregate is A and mu is its spectral radius") {
  testing::Generator gen(23);
  for (int k = 0; k < 200; ++k) {
    const Matrix a = gen.reciprocal(gen.index(1, 6), k % 2 ? kMul : kAdd);
    const SolveResult r = solve_single(a);
    CHECK(r.aggregate == a);
    CHECK(approx_equal(r.mu, spectral_radius(a).lambda, kTol));
  }
}

TEST_CASE("scaling the input leaves star and generators unchanged") {
  testing::Generator gen(29);
  for (int k = 0; k < 200; ++k) {
    const Scale s = k % 2 ? kMul : kAdd;
    const std::size_t n = gen.index(1, 6);
    const Matrix b = mat_add(gen.positive(n, n, s), gen.reciprocal(n, s));
    const Scalar c(gen.value(s), s);
    const SolveResult r1 = solve_aggregate(b);
    const SolveResult r2 = solve_aggregate(scale_by(c, b));
    CHECK(approx_equal(r2.mu, otimes(c, r1.mu), kTol));
    CHECK(approx_equal(r1.star, r2.star, kTol));
    CHECK(approx_equal(r1.generators, r2.generators, kTol));
  }
}

TEST_CASE("mu matches a brute-force grid minimum for n <= 3") {
  testing::Generator gen(31);
  constexpr double resolution = 0.01;
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = gen.index(1, 3);
    const Matrix a = gen.positive(n, n, kMul, 1.5);
    const SolveResult r = solve_single(a);
    const double grid = oracle::grid_min_objective(r.aggregate, resolution).to_additive().value();
    const double mu = r.mu.to_additive().value();
    CHECK(grid >= mu - kTol);
    CHECK(grid <= mu + resolution);
  }
}

TEST_CASE("solver optimality property suite") {
  const auto outcome = testing::check_solver_optimality(300, 300, 37);
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
}

TEST_CASE("scale duality property suite") {
  const auto outcome = testing::check_scale_duality(500, 41);
  INFO(outcome.first_failure);
  CHECK(outcome.ok());
}
