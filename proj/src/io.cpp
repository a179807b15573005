#include "tropirank/io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace tropirank::io {

namespace {

using nlohmann::json;

double parse_decimal(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("cannot parse number '" + std::string(text) + "'");
  }
  return value;
}

double entry_value(const json& entry, const std::string& where) {
  double value = 0.0;
  if (entry.is_number()) {
    value = entry.get<double>();
  } else if (entry.is_string()) {
    try {
      value = parse_number(entry.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  } else {
    throw InputError(where + ": expected a number or a numeric string");
  }
  if (!std::isfinite(value)) throw InputError(where + ": value must be finite");
  return value;
}

std::vector<std::vector<double>> parse_rows(const json& data, const std::string& where) {
  if (!data.is_array() || data.empty()) throw InputError(where + ": expected a non-empty array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const json& row = data[i];
    if (!row.is_array()) throw InputError(where + ": row " + std::to_string(i + 1) + " is not an array");
    std::vector<double> values;
    for (std::size_t j = 0; j < row.size(); ++j) {
      values.push_back(entry_value(row[j], where + "[" + std::to_string(i + 1) + "][" +
                                               std::to_string(j + 1) + "]"));
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

Matrix comparison_matrix(const std::vector<std::vector<double>>& rows, Scale scale,
                         const std::string& where) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw InputError(where + ": matrix is not square (row " + std::to_string(i + 1) + " has " +
                       std::to_string(rows[i].size()) + " entries, expected " +
                       std::to_string(n) + ")");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (scale == Scale::multiplicative && !(rows[i][j] > 0.0)) {
        throw InputError(where + ": entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") must be positive on the multiplicative scale");
      }
    }
  }
  return Matrix::from_rows(scale, rows);
}

void validate_shapes(const InputDocument& doc) {
  if (doc.matrices.empty()) throw InputError("document contains no matrices");
  const std::size_t n = doc.matrices.front().matrix.rows();
  for (const auto& m : doc.matrices) {
    if (m.matrix.rows() != n) {
      throw InputError("matrix '" + m.name + "' has order " + std::to_string(m.matrix.rows()) +
                       ", expected " + std::to_string(n));
    }
  }
}

}  // namespace

std::vector<Matrix> InputDocument::alternative_matrices() const {
  std::vector<Matrix> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(m.matrix);
  return out;
}

double parse_number(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  const double num = parse_decimal(text.substr(0, slash));
  const double den = parse_decimal(text.substr(slash + 1));
  if (den == 0.0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return num / den;
}

InputDocument parse_json_document(std::string_view text, std::optional<Scale> scale_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("top-level JSON value must be an object");

  InputDocument out;
  if (doc.contains("scale")) {
    if (!doc["scale"].is_string()) throw InputError("\"scale\" must be a string");
    try {
      out.scale = parse_scale(doc["scale"].get<std::string>());
    } catch (const UsageError& e) {
      throw InputError(e.what());
    }
  }
  if (scale_override) out.scale = *scale_override;

  if (!doc.contains("matrices") || !doc["matrices"].is_array()) {
    throw InputError("\"matrices\" must be an array");
  }
  const json& matrices = doc["matrices"];
  for (std::size_t k = 0; k < matrices.size(); ++k) {
    const json& entry = matrices[k];
    std::string name = "matrix " + std::to_string(k + 1);
    const json* data = &entry;
    if (entry.is_object()) {
      if (entry.contains("name")) {
        if (!entry["name"].is_string()) throw InputError(name + ": \"name\" must be a string");
        name = entry["name"].get<std::string>();
      }
      if (!entry.contains("data")) throw InputError(name + ": missing \"data\"");
      data = &entry["data"];
    }
    out.matrices.push_back({name, comparison_matrix(parse_rows(*data, name), out.scale, name)});
  }
  validate_shapes(out);

  if (doc.contains("weights") && !doc["weights"].is_null()) {
    const json& w = doc["weights"];
    if (!w.is_array()) throw InputError("\"weights\" must be an array");
    std::vector<double> weights;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double v = entry_value(w[i], "weights[" + std::to_string(i + 1) + "]");
      if (out.scale == Scale::multiplicative && v < 0.0) {
        throw InputError("weights must not be negative on the multiplicative scale");
      }
      weights.push_back(v);
    }
    if (weights.size() != out.matrices.size()) {
      throw InputError("got " + std::to_string(weights.size()) + " weights for " +
                       std::to_string(out.matrices.size()) + " matrices");
    }
    out.weights = std::move(weights);
  }

  if (doc.contains("criteria") && !doc["criteria"].is_null()) {
    out.criteria = comparison_matrix(parse_rows(doc["criteria"], "criteria"), out.scale, "criteria");
  }
  return out;
}

InputDocument parse_csv_document(std::string_view text, Scale scale) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_number(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("CSV input contains no rows");
  InputDocument out;
  out.scale = scale;
  out.matrices.push_back({"csv", comparison_matrix(rows, scale, "csv")});
  return out;
}

nlohmann::json ranking_to_json(const Ranking& ranking) {
  json out = json::array();
  for (const auto& group : ranking) {
    json g = json::array();
    for (std::size_t idx : group) g.push_back(idx + 1);
    out.push_back(std::move(g));
  }
  return out;
}

nlohmann::json report_to_json(const RatingReport& report, double tol) {
  json out;
  out["scale"] = std::string(to_string(report.scale));
  out["mu"] = report.mu.value();
  out["lambda_consistent"] = approx_equal(report.mu, Scalar::one(report.scale), tol);
  out["generators"] = report.generators;
  out["scores"] = report.scores;
  out["ranking"] = ranking_to_json(report.ranking);
  json per_generator = json::array();
  for (const auto& r : report.generator_rankings) per_generator.push_back(ranking_to_json(r));
  out["generator_rankings"] = std::move(per_generator);
  out["ranking_stable"] = report.ranking_stable;
  if (report.weights) out["weights"] = *report.weights;
  out["normalization"] = std::string(to_string(report.normalization));
  return out;
}

nlohmann::json consistency_to_json(const ConsistencyReport& report) {
  return {{"reciprocal", report.is_reciprocal},
          {"consistent", report.is_consistent},
          {"max_transitivity_violation", report.max_transitivity_violation},
          {"lambda", report.lambda.value()}};
}

nlohmann::json spectral_to_json(const SpectralResult& result) {
  json cycle = json::array();
  for (std::size_t v : result.witness_cycle) cycle.push_back(v + 1);
  return {{"lambda", result.lambda.value()}, {"witness_cycle", std::move(cycle)}};
}

std::string describe_ranking(const Ranking& ranking) {
  std::string out;
  for (std::size_t g = 0; g < ranking.size(); ++g) {
    if (g > 0) out += " > ";
    for (std::size_t k = 0; k < ranking[g].size(); ++k) {
      if (k > 0) out += " = ";
      out += std::to_string(ranking[g][k] + 1);
    }
  }
  return out;
}

}  // namespace tropirank::io
