#include "wreath/io.hpp"

#include <fstream>

#include "wreath/version.hpp"

namespace wreath::io {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a nonempty array of rows");
  const auto& first = j.at(0);
  if (!first.is_array() || first.empty()) throw FormatError("matrix rows must be nonempty arrays");
  Matrix m(static_cast<int>(j.size()), static_cast<int>(first.size()));
  for (int r = 0; r < m.rows(); ++r) {
    const auto& row = j.at(r);
    if (!row.is_array() || static_cast<int>(row.size()) != m.cols()) {
      throw FormatError("matrix row " + std::to_string(r) + " has the wrong length");
    }
    for (int c = 0; c < m.cols(); ++c) {
      const auto& cell = row.at(c);
      if (!cell.is_string()) throw FormatError("matrix entries must be strings");
      try {
        m.at(r, c) = parse_rational(cell.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bad matrix entry: ") + e.what());
      }
    }
  }
  return m;
}

json scheme_to_json(const Scheme& s, bool include_relation_matrix) {
  json j;
  j["format"] = "scheme.v1";
  j["order"] = s.order;
  j["classes"] = s.classes;
  json mats = json::array();
  for (const auto& a : s.adjacency) mats.push_back(matrix_to_json(a));
  j["matrices"] = std::move(mats);
  if (include_relation_matrix) j["relation_matrix"] = matrix_to_json(relation_matrix(s));
  return j;
}

Scheme scheme_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("scheme file must be a JSON object");
  for (const char* key : {"order", "classes", "matrices"}) {
    if (!j.contains(key)) throw FormatError(std::string("scheme file is missing \"") + key + "\"");
  }
  if (!j.at("order").is_number_integer() || !j.at("classes").is_number_integer()) {
    throw FormatError("\"order\" and \"classes\" must be integers");
  }
  const long long order = j.at("order").get<long long>();
  const long long classes = j.at("classes").get<long long>();
  const auto& mats = j.at("matrices");
  if (!mats.is_array() || static_cast<long long>(mats.size()) != classes + 1) {
    throw FormatError("\"matrices\" must list exactly classes + 1 matrices");
  }
  std::vector<Matrix> adjacency;
  adjacency.reserve(mats.size());
  for (const auto& entry : mats) {
    Matrix m = matrix_from_json(entry);
    if (m.rows() != order || m.cols() != order) {
      throw FormatError("matrix " + std::to_string(adjacency.size()) + " is " + m.shape() + ", expected " +
                        std::to_string(order) + "x" + std::to_string(order));
    }
    adjacency.push_back(std::move(m));
  }
  return validate(adjacency);
}

json report_to_json(const StructureReport& report, const std::map<std::string, long long>& timings) {
  json j;
  j["format"] = "report.v1";
  j["tool"] = "wreath";
  j["version"] = kVersion;
  j["factors"] = report.params.factors;
  j["order"] = report.params.order();
  j["base_point"] = report.base_point;
  j["dimensions"] = {
      {"algebra", report.dim_t},
      {"primary", report.dim_u},
      {"central_idempotents", report.f_nonzero},
      {"center", report.center_dim},
  };
  j["triple_regularity_run"] = report.triple_regularity_run;
  j["all_passed"] = report.all_passed();
  json checks = json::array();
  for (const auto& check : report.checks) {
    json c;
    c["name"] = check.name;
    c["passed"] = check.passed;
    if (!check.passed) c["witness"] = check.witness;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  if (!timings.empty()) j["timings_ms"] = timings;
  return j;
}

json recognition_to_json(const RecognitionResult& result) {
  json j;
  j["format"] = "recognition.v1";
  j["is_wreath"] = result.is_wreath;
  if (result.is_wreath) {
    j["factors"] = result.factors;
  } else {
    j["witness"] = {result.witness_i, result.witness_j};
  }
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace wreath::io
