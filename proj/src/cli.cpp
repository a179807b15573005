#include "tropirank/cli.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tropirank/ahp.hpp"
#include "tropirank/io.hpp"
#include "tropirank/linalg.hpp"
#include "tropirank/solver.hpp"

namespace tropirank::cli {

namespace {

struct Flags {
  std::string file;
  std::string scale;
  std::string normalize = "max";
  std::string format = "json";
  std::string matrix;
  std::string method = "trace";
  double tolerance = kDefaultTolerance;
  bool quiet = false;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file) throw io::InputError("cannot open '" + path + "'");
  buf << file.rdbuf();
  return buf.str();
}

io::InputDocument load(const Flags& flags, std::istream& in) {
  const std::string text = read_input(flags.file, in);
  std::optional<Scale> scale;
  if (!flags.scale.empty()) scale = parse_scale(flags.scale);
  if (flags.format == "csv") return io::parse_csv_document(text, scale.value_or(Scale::multiplicative));
  return io::parse_json_document(text, scale);
}

const Matrix& pick_matrix(const io::InputDocument& doc, const std::string& selector) {
  if (selector.empty()) {
    if (doc.matrices.size() != 1) {
      throw io::InputError("document holds " + std::to_string(doc.matrices.size()) +
                           " matrices; choose one with --matrix");
    }
    return doc.matrices.front().matrix;
  }
  for (const auto& m : doc.matrices) {
    if (m.name == selector) return m.matrix;
  }
  std::size_t index = 0;
  const auto [ptr, ec] = std::from_chars(selector.data(), selector.data() + selector.size(), index);
  if (ec == std::errc{} && ptr == selector.data() + selector.size() && index >= 1 &&
      index <= doc.matrices.size()) {
    return doc.matrices[index - 1].matrix;
  }
  throw io::InputError("no matrix named '" + selector + "'");
}

std::string format_vector(const std::vector<double>& v) {
  std::ostringstream os;
  os << std::setprecision(6) << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

void summarize(const RatingReport& report, std::ostream& err) {
  err << "mu = " << report.mu.value() << " (" << to_string(report.scale) << " scale)\n";
  if (report.weights) err << "weights: " << format_vector(*report.weights) << "\n";
  err << "scores: " << format_vector(report.scores) << "\n";
  err << "ranking: " << io::describe_ranking(report.ranking) << "\n";
  if (!report.ranking_stable) {
    err << "note: the " << report.generators.size()
        << " generators of the solution set rank the alternatives differently:\n";
    for (std::size_t g = 0; g < report.generators.size(); ++g) {
      err << "  generator " << g + 1 << " " << format_vector(report.generators[g]) << ": "
          << io::describe_ranking(report.generator_rankings[g]) << "\n";
    }
  }
}

int cmd_rate(const Flags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
  const io::InputDocument doc = load(flags, in);
  const Normalization how = parse_normalization(flags.normalize);
  const SolveOptions options{.tolerance = flags.tolerance};
  const std::vector<Matrix> matrices = doc.alternative_matrices();

  SolveResult result = [&] {
    if (doc.weights) {
      std::vector<Scalar> weights;
      for (double w : *doc.weights) weights.emplace_back(w, doc.scale);
      return solve_weighted(matrices, weights, options);
    }
    if (matrices.size() == 1) return solve_single(matrices.front(), options);
    return solve_multi(matrices, options);
  }();
  RatingReport report = make_report(result, how, flags.tolerance);
  report.weights = doc.weights;
  out << io::report_to_json(report, flags.tolerance).dump(2) << "\n";
  if (!flags.quiet) summarize(report, err);
  return kOk;
}

int cmd_ahp(const Flags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
  const io::InputDocument doc = load(flags, in);
  if (!doc.criteria) throw io::InputError("ahp requires a \"criteria\" matrix");
  const Normalization how = parse_normalization(flags.normalize);
  const AhpProblem problem{*doc.criteria, doc.alternative_matrices()};
  const RatingReport report = run_ahp(problem, how, SolveOptions{.tolerance = flags.tolerance});
  out << io::report_to_json(report, flags.tolerance).dump(2) << "\n";
  if (!flags.quiet) summarize(report, err);
  return kOk;
}

int cmd_check(const Flags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
  const io::InputDocument doc = load(flags, in);
  const ConsistencyReport report = check_matrix(pick_matrix(doc, flags.matrix), flags.tolerance);
  out << io::consistency_to_json(report).dump(2) << "\n";
  if (!flags.quiet) {
    err << "reciprocal: " << std::boolalpha << report.is_reciprocal
        << ", consistent: " << report.is_consistent << ", lambda = " << report.lambda.value()
        << "\n";
  }
  return kOk;
}

SpectralMethod parse_method(const std::string& name) {
  return name == "karp" ? SpectralMethod::karp : SpectralMethod::trace_powers;
}

int cmd_spectral(const Flags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
  const io::InputDocument doc = load(flags, in);
  const SpectralResult result =
      spectral_radius(pick_matrix(doc, flags.matrix), parse_method(flags.method), flags.tolerance);
  out << io::spectral_to_json(result).dump(2) << "\n";
  if (!flags.quiet) err << "lambda = " << result.lambda.value() << "\n";
  return kOk;
}

int cmd_star(const Flags& flags, std::istream& in, std::ostream& out, std::ostream& err) {
  const io::InputDocument doc = load(flags, in);
  const Matrix& a = pick_matrix(doc, flags.matrix);
  const SpectralResult spectral = spectral_radius(a, parse_method(flags.method), flags.tolerance);
  if (spectral.lambda.is_zero()) throw PreconditionError("spectral radius is zero");
  const Matrix star = kleene_star(scale_by(inv(spectral.lambda), a));
  nlohmann::json doc_out{{"lambda", spectral.lambda.value()}, {"star", star.to_rows()}};
  out << doc_out.dump(2) << "\n";
  if (!flags.quiet) err << "lambda = " << spectral.lambda.value() << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Rate alternatives from pairwise comparison matrices by tropical rank-one approximation",
               "tropirank"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&flags](CLI::App* sub, bool rating) {
    sub->add_option("file", flags.file, "Input file, '-' for stdin")->required();
    sub->add_option("--scale", flags.scale, "multiplicative | additive (overrides the document)")
        ->check(CLI::IsMember({"multiplicative", "mult", "additive", "add"}));
    sub->add_option("--format", flags.format, "Input format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--tolerance", flags.tolerance, "Relative equality tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_flag("--quiet,-q", flags.quiet, "Do not print the summary to stderr");
    if (rating) {
      sub->add_option("--normalize", flags.normalize, "Score normalization")
          ->check(CLI::IsMember({"none", "max", "sum"}))
          ->capture_default_str();
    } else {
      sub->add_option("--matrix", flags.matrix, "Matrix name or 1-based index");
    }
  };

  auto* rate = app.add_subcommand("rate", "Score vector from one, several or weighted matrices");
  add_common(rate, true);
  auto* ahp = app.add_subcommand("ahp", "Two-level tropical AHP (criteria + alternative matrices)");
  add_common(ahp, true);
  auto* check = app.add_subcommand("check", "Reciprocity, consistency and spectral radius");
  add_common(check, false);
  auto* spectral = app.add_subcommand("spectral", "Spectral radius and a critical cycle");
  add_common(spectral, false);
  auto* star = app.add_subcommand("star", "Kleene star of the matrix scaled by its spectral radius");
  add_common(star, false);
  for (auto* sub : {spectral, star}) {
    sub->add_option("--method", flags.method, "Spectral radius algorithm")
        ->check(CLI::IsMember({"trace", "karp"}))
        ->capture_default_str();
  }

  std::vector<const char*> argv{"tropirank"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (*rate) return cmd_rate(flags, in, out, err);
    if (*ahp) return cmd_ahp(flags, in, out, err);
    if (*check) return cmd_check(flags, in, out, err);
    if (*spectral) return cmd_spectral(flags, in, out, err);
    if (*star) return cmd_star(flags, in, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionViolated;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kPreconditionViolated;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kInvalidInput;
}

}  // namespace tropirank::cli
