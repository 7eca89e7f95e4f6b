#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "maxent/solver.hpp"
#include "maxent/types.hpp"

// Problem-file ingestion and report rendering for the CLI. Problem files are
// JSON objects in one of two shapes:
//
//   {"potential": [...], "frequencies": [...]}   scalar tasks
//   {"X": [[...], ...], "y": [...]}              general inverse problem
//
// plus an optional "config" object overriding solver settings. Unknown keys
// are ignored, so an emitted report is itself a valid problem file.

namespace maxent::io {

struct ProblemFile {
  enum class Shape { scalar, matrix };

  Shape shape = Shape::scalar;
  std::vector<double> potential;            // scalar shape
  std::vector<double> frequencies;          // scalar shape
  std::vector<std::vector<double>> matrix;  // matrix shape: rows of X
  std::vector<double> target;               // matrix shape: y
  SolverConfig config;

  Potential potential_obj() const;
  Pmf frequencies_obj() const;
  ConstraintSystem system() const;
};

// Parses a problem file; throws ParseError with a line/column position on
// malformed JSON, InvalidInput/DimensionMismatch on shape violations.
ProblemFile parse_problem(const std::string& text);

// Reads from path, or from standard input when path is "-".
ProblemFile load_problem(const std::string& path);

enum class Format { json, csv, text };

Format parse_format(const std::string& name);

// Shortest exact decimal representation is used inside JSON; csv and text
// print through format_double.
std::string render_report(const nlohmann::json& report, Format format);

// %.17g: enough digits that parsing the string recovers the double exactly.
std::string format_double(double x);

}  // namespace maxent::io
