#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "wreath/scheme.hpp"
#include "wreath/structure.hpp"

namespace wreath::io {

using json = nlohmann::json;

// Filesystem trouble: missing file, unwritable path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally broken input: invalid JSON, missing keys, wrong shapes.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrices are arrays of rows; entries are exact "p" or "p/q" strings.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);

// {"format": "scheme.v1", "order", "classes", "matrices", and, unless
// disabled, "relation_matrix"}.
json scheme_to_json(const Scheme& s, bool include_relation_matrix = true);

// Reads the shape back and validates the axioms; propagates ValidationError
// for a well-formed file that is not an association scheme.
Scheme scheme_from_json(const json& j);

// timings is optional extra content; leaving it empty keeps the report
// byte-identical across runs.
json report_to_json(const StructureReport& report, const std::map<std::string, long long>& timings = {});

json recognition_to_json(const RecognitionResult& result);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace wreath::io
