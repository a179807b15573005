#pragma once

/**
 * @file io.hpp
 * @brief Input documents and JSON reports for the command-line tool.
 *
 * Input JSON:
 *
 *   {"scale": "multiplicative" | "additive",
 *    "matrices": [{"name": "A", "data": [[1, "1/3"], [3, 1]]}],
 *    "weights": [1, 0.5],          // optional
 *    "criteria": [[1, 2], ["1/2", 1]]}  // optional
 *
 * Entries are JSON numbers or strings holding a decimal or a fraction "p/q".
 * CSV input holds one matrix, one row per line, '#' starts a comment.
 */

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "tropirank/ahp.hpp"
#include "tropirank/linalg.hpp"
#include "tropirank/matrix.hpp"
#include "tropirank/solver.hpp"

namespace tropirank::io {

/// Malformed or invalid input document.
class InputError : public UsageError {
 public:
  using UsageError::UsageError;
};

struct NamedMatrix {
  std::string name;
  Matrix matrix;
};

struct InputDocument {
  Scale scale = Scale::multiplicative;
  std::vector<NamedMatrix> matrices;
  std::optional<std::vector<double>> weights;
  std::optional<Matrix> criteria;

  std::vector<Matrix> alternative_matrices() const;
};

/// Parses "3", "-0.25", "1e-3" or "2/3". Throws InputError.
double parse_number(std::string_view text);

/// scale_override, when set, wins over the document's "scale" key.
InputDocument parse_json_document(std::string_view text,
                                  std::optional<Scale> scale_override = std::nullopt);

InputDocument parse_csv_document(std::string_view text, Scale scale);

/// Alternative indices in the JSON output are 1-based.
nlohmann::json ranking_to_json(const Ranking& ranking);
nlohmann::json report_to_json(const RatingReport& report, double tol = kDefaultTolerance);
nlohmann::json consistency_to_json(const ConsistencyReport& report);
nlohmann::json spectral_to_json(const SpectralResult& result);

/// Short human-readable summary, e.g. "1 > 3 = 4 > 2".
std::string describe_ranking(const Ranking& ranking);

}  // namespace tropirank::io
