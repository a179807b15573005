#include "tropirank/ahp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tropirank {

std::string_view to_string(Normalization n) noexcept {
  switch (n) {
    case Normalization::none:
      return "none";
    case Normalization::max:
      return "max";
    case Normalization::sum:
      return "sum";
  }
  return "none";
}

Normalization parse_normalization(std::string_view name) {
  if (name == "none") return Normalization::none;
  if (name == "max") return Normalization::max;
  if (name == "sum") return Normalization::sum;
  throw UsageError("unknown normalization '" + std::string(name) + "'");
}

std::vector<double> normalize(std::span<const double> scores, Scale scale, Normalization how) {
  std::vector<double> out(scores.begin(), scores.end());
  if (how == Normalization::none || out.empty()) return out;
  if (how == Normalization::sum) {
    if (scale != Scale::multiplicative) {
      throw UsageError("sum normalization is only defined on the multiplicative scale");
    }
    const double total = std::accumulate(out.begin(), out.end(), 0.0);
    for (double& v : out) v /= total;
    return out;
  }
  const double top = *std::max_element(out.begin(), out.end());
  for (double& v : out) v = scale == Scale::multiplicative ? v / top : v - top;
  return out;
}

Ranking rank_scores(std::span<const double> scores, double tol) {
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
  Ranking ranking;
  for (std::size_t idx : order) {
    if (!ranking.empty() && approx_equal(scores[ranking.back().front()], scores[idx], tol)) {
      ranking.back().push_back(idx);
    } else {
      ranking.push_back({idx});
    }
  }
  for (auto& group : ranking) std::sort(group.begin(), group.end());
  return ranking;
}

std::vector<double> derive_weights(const Matrix& criteria, const SolveOptions& options) {
  return solve_single(criteria, options).representative.column_values(0);
}

RatingReport make_report(const SolveResult& result, Normalization how, double tol) {
  const Scale scale = result.aggregate.scale();
  RatingReport report{.mu = result.mu, .weights = {}, .generators = {}, .scores = {}, .ranking = {},
                      .generator_rankings = {}, .normalization = how, .scale = scale};
  for (std::size_t j = 0; j < result.generators.cols(); ++j) {
    report.generators.push_back(result.generators.column_values(j));
    report.generator_rankings.push_back(rank_scores(report.generators.back(), tol));
  }
  report.scores = normalize(result.representative.column_values(0), scale, how);
  report.ranking = rank_scores(report.scores, tol);
  report.ranking_stable =
      std::all_of(report.generator_rankings.begin(), report.generator_rankings.end(),
                  [&](const Ranking& r) { return r == report.generator_rankings.front(); });
  return report;
}

RatingReport run_ahp(const AhpProblem& problem, Normalization how, const SolveOptions& options) {
  if (!problem.criteria.is_square()) throw UsageError("criteria matrix must be square");
  if (problem.criteria.rows() != problem.alternatives.size()) {
    throw UsageError("criteria matrix has order " + std::to_string(problem.criteria.rows()) +
                     " but there are " + std::to_string(problem.alternatives.size()) +
                     " alternative matrices");
  }
  if (!problem.alternatives.empty() && problem.alternatives.front().scale() != problem.criteria.scale()) {
    throw UsageError("criteria and alternative matrices use different scales");
  }
  const std::vector<double> weights = derive_weights(problem.criteria, options);
  std::vector<Scalar> scalars;
  scalars.reserve(weights.size());
  for (double w : weights) scalars.emplace_back(w, problem.criteria.scale());

  RatingReport report =
      make_report(solve_weighted(problem.alternatives, scalars, options), how, options.tolerance);
  report.weights = weights;
  return report;
}

}  // namespace tropirank
