#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tropirank/ahp.hpp"
#include "tropirank/linalg.hpp"
#include "tropirank/solver.hpp"

namespace py = pybind11;
using namespace tropirank;

namespace {

using Rows = std::vector<std::vector<double>>;

Matrix to_matrix(const Rows& rows, const std::string& scale) {
  return Matrix::from_rows(parse_scale(scale), rows);
}

std::vector<Matrix> to_matrices(const std::vector<Rows>& list, const std::string& scale) {
  std::vector<Matrix> out;
  out.reserve(list.size());
  for (const auto& rows : list) out.push_back(to_matrix(rows, scale));
  return out;
}

std::vector<std::vector<double>> columns_of(const Matrix& m) {
  std::vector<std::vector<double>> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column_values(j));
  return out;
}

py::dict solve_result_dict(const SolveResult& r) {
  py::dict d;
  d["mu"] = r.mu.value();
  d["star"] = r.star.to_rows();
  d["generators"] = columns_of(r.generators);
  d["representative"] = r.representative.column_values(0);
  d["aggregate"] = r.aggregate.to_rows();
  return d;
}

py::dict report_dict(const RatingReport& r) {
  py::dict d;
  d["mu"] = r.mu.value();
  d["weights"] = r.weights;
  d["generators"] = r.generators;
  d["scores"] = r.scores;
  d["ranking"] = r.ranking;
  d["generator_rankings"] = r.generator_rankings;
  d["ranking_stable"] = r.ranking_stable;
  d["normalization"] = std::string(to_string(r.normalization));
  return d;
}

SpectralMethod method_of(const std::string& name) {
  if (name == "trace") return SpectralMethod::trace_powers;
  if (name == "karp") return SpectralMethod::karp;
  throw UsageError("unknown spectral method '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tropical rank-one approximation of pairwise comparison matrices";

  py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

  m.attr("DEFAULT_TOLERANCE") = kDefaultTolerance;

  m.def("mat_add", [](const Rows& a, const Rows& b, const std::string& scale) {
    return mat_add(to_matrix(a, scale), to_matrix(b, scale)).to_rows();
  }, py::arg("a"), py::arg("b"), py::arg("scale") = "multiplicative");

  m.def("mat_mul", [](const Rows& a, const Rows& b, const std::string& scale) {
    return mat_mul(to_matrix(a, scale), to_matrix(b, scale)).to_rows();
  }, py::arg("a"), py::arg("b"), py::arg("scale") = "multiplicative");

  m.def("conj_transpose", [](const Rows& a, const std::string& scale) {
    return conj_transpose(to_matrix(a, scale)).to_rows();
  }, py::arg("a"), py::arg("scale") = "multiplicative");

  m.def("trace", [](const Rows& a, const std::string& scale) {
    return trace(to_matrix(a, scale)).value();
  }, py::arg("a"), py::arg("scale") = "multiplicative");

  m.def("spectral_radius", [](const Rows& a, const std::string& scale, const std::string& method,
                              double tol) {
    const SpectralResult r = spectral_radius(to_matrix(a, scale), method_of(method), tol);
    py::dict d;
    d["lambda"] = r.lambda.value();
    d["witness_cycle"] = r.witness_cycle;
    return d;
  }, py::arg("a"), py::arg("scale") = "multiplicative", py::arg("method") = "trace",
     py::arg("tol") = kDefaultTolerance,
     "Spectral radius and a critical cycle (0-based node indices).");

  m.def("kleene_star", [](const Rows& a, const std::string& scale) {
    return kleene_star(to_matrix(a, scale)).to_rows();
  }, py::arg("a"), py::arg("scale") = "multiplicative");

  m.def("eigenspace_generators", [](const Rows& a, const std::string& scale, double tol) {
    return columns_of(eigenspace_generators(to_matrix(a, scale), tol));
  }, py::arg("a"), py::arg("scale") = "multiplicative", py::arg("tol") = kDefaultTolerance);

  m.def("reduce_generators", [](const Rows& c, const std::string& scale, double tol) {
    return columns_of(reduce_generators(to_matrix(c, scale), tol));
  }, py::arg("c"), py::arg("scale") = "multiplicative", py::arg("tol") = kDefaultTolerance);

  m.def("mat_distance", [](const Rows& a, const Rows& b, const std::string& scale) {
    return mat_distance(to_matrix(a, scale), to_matrix(b, scale)).value();
  }, py::arg("a"), py::arg("b"), py::arg("scale") = "multiplicative");

  m.def("check_matrix", [](const Rows& a, const std::string& scale, double tol) {
    const ConsistencyReport r = check_matrix(to_matrix(a, scale), tol);
    py::dict d;
    d["reciprocal"] = r.is_reciprocal;
    d["consistent"] = r.is_consistent;
    d["max_transitivity_violation"] = r.max_transitivity_violation;
    d["lambda"] = r.lambda.value();
    return d;
  }, py::arg("a"), py::arg("scale") = "multiplicative", py::arg("tol") = kDefaultTolerance);

  m.def("solve_single", [](const Rows& a, const std::string& scale, double tol) {
    return solve_result_dict(solve_single(to_matrix(a, scale), {.tolerance = tol}));
  }, py::arg("a"), py::arg("scale") = "multiplicative", py::arg("tol") = kDefaultTolerance);

  m.def("solve_multi", [](const std::vector<Rows>& as, const std::string& scale, double tol) {
    return solve_result_dict(solve_multi(to_matrices(as, scale), {.tolerance = tol}));
  }, py::arg("matrices"), py::arg("scale") = "multiplicative", py::arg("tol") = kDefaultTolerance);

  m.def("solve_weighted", [](const std::vector<Rows>& as, const std::vector<double>& ws,
                             const std::string& scale, double tol) {
    std::vector<Scalar> weights;
    for (double w : ws) weights.emplace_back(w, parse_scale(scale));
    return solve_result_dict(solve_weighted(to_matrices(as, scale), weights, {.tolerance = tol}));
  }, py::arg("matrices"), py::arg("weights"), py::arg("scale") = "multiplicative",
     py::arg("tol") = kDefaultTolerance);

  m.def("derive_weights", [](const Rows& c, const std::string& scale, double tol) {
    return derive_weights(to_matrix(c, scale), {.tolerance = tol});
  }, py::arg("criteria"), py::arg("scale") = "multiplicative", py::arg("tol") = kDefaultTolerance);

  m.def("run_ahp", [](const Rows& criteria, const std::vector<Rows>& alternatives,
                      const std::string& scale, const std::string& normalize, double tol) {
    const AhpProblem problem{to_matrix(criteria, scale), to_matrices(alternatives, scale)};
    return report_dict(run_ahp(problem, parse_normalization(normalize), {.tolerance = tol}));
  }, py::arg("criteria"), py::arg("alternatives"), py::arg("scale") = "multiplicative",
     py::arg("normalize") = "max", py::arg("tol") = kDefaultTolerance,
     "Two-level tropical AHP. Rankings use 0-based alternative indices.");

  m.def("rate", [](const std::vector<Rows>& as, std::optional<std::vector<double>> ws,
                   const std::string& scale, const std::string& normalize, double tol) {
    const std::vector<Matrix> matrices = to_matrices(as, scale);
    const SolveOptions options{.tolerance = tol};
    SolveResult result = [&] {
      if (ws) {
        std::vector<Scalar> weights;
        for (double w : *ws) weights.emplace_back(w, parse_scale(scale));
        return solve_weighted(matrices, weights, options);
      }
      return solve_multi(matrices, options);
    }();
    RatingReport report = make_report(result, parse_normalization(normalize), tol);
    report.weights = ws;
    return report_dict(report);
  }, py::arg("matrices"), py::arg("weights") = py::none(), py::arg("scale") = "multiplicative",
     py::arg("normalize") = "max", py::arg("tol") = kDefaultTolerance);

  m.def("rank_scores", [](const std::vector<double>& x, double tol) { return rank_scores(x, tol); },
        py::arg("scores"), py::arg("tol") = kDefaultTolerance);

  m.def("normalize", [](const std::vector<double>& x, const std::string& scale,
                        const std::string& how) {
    return normalize(x, parse_scale(scale), parse_normalization(how));
  }, py::arg("scores"), py::arg("scale") = "multiplicative", py::arg("how") = "max");
}
