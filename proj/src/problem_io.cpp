#include "maxent/problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace maxent::io {

using nlohmann::json;

namespace {

// nlohmann reports byte offsets; convert to a line/column position.
std::string position_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "line " << line << ", column " << col;
  return os.str();
}

std::vector<double> number_vector(const json& j, const std::string& key) {
  if (!j.is_array() || j.empty())
    throw ParseError("field '" + key + "' must be a non-empty array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number())
      throw ParseError("field '" + key + "' must contain numbers only");
    out.push_back(v.get<double>());
  }
  return out;
}

void apply_config(const json& j, SolverConfig& cfg) {
  if (!j.is_object()) throw ParseError("'config' must be an object");
  if (j.contains("tol_residual")) cfg.tol_residual = j.at("tol_residual").get<double>();
  if (j.contains("max_iter")) cfg.max_iter = j.at("max_iter").get<int>();
  if (j.contains("lambda_blowup")) cfg.lambda_blowup = j.at("lambda_blowup").get<double>();
  if (j.contains("damping")) cfg.damping = j.at("damping").get<double>();
}

void flatten(const json& value, const std::string& key,
             std::vector<std::pair<std::string, std::string>>& out);

std::string scalar_text(const json& value) {
  if (value.is_number_float()) return format_double(value.get<double>());
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_string()) return value.get<std::string>();
  return value.dump();
}

std::string array_text(const json& value) {
  std::ostringstream os;
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (i > 0) os << (value[i - 1].is_array() ? "|" : ";");
    if (value[i].is_array())
      os << array_text(value[i]);
    else
      os << scalar_text(value[i]);
  }
  return os.str();
}

void flatten(const json& value, const std::string& key,
             std::vector<std::pair<std::string, std::string>>& out) {
  if (value.is_object()) {
    for (const auto& [k, v] : value.items())
      flatten(v, key.empty() ? k : key + "." + k, out);
  } else if (value.is_array()) {
    out.emplace_back(key, array_text(value));
  } else {
    out.emplace_back(key, scalar_text(value));
  }
}

}  // namespace

Potential ProblemFile::potential_obj() const { return Potential(potential); }

Pmf ProblemFile::frequencies_obj() const { return Pmf(frequencies); }

ConstraintSystem ProblemFile::system() const {
  return ConstraintSystem(matrix, target);
}

ProblemFile parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("problem file is not valid JSON (") +
                     position_of(text, e.byte) + "): " + e.what());
  }
  if (!j.is_object())
    throw ParseError("problem file must be a JSON object");

  const bool scalar_shape = j.contains("potential") || j.contains("frequencies");
  const bool matrix_shape = j.contains("X") || j.contains("y");
  if (scalar_shape && matrix_shape)
    throw InvalidInput(
        "problem file must use exactly one shape: {potential, frequencies} or {X, y}");
  if (!scalar_shape && !matrix_shape)
    throw InvalidInput(
        "problem file must contain {potential, frequencies} or {X, y}");

  ProblemFile file;
  try {
    if (scalar_shape) {
      if (!j.contains("potential") || !j.contains("frequencies"))
        throw InvalidInput("scalar problems need both 'potential' and 'frequencies'");
      file.shape = ProblemFile::Shape::scalar;
      file.potential = number_vector(j.at("potential"), "potential");
      file.frequencies = number_vector(j.at("frequencies"), "frequencies");
      if (file.potential.size() != file.frequencies.size())
        throw DimensionMismatch(
            "'potential' and 'frequencies' must have equal length");
    } else {
      if (!j.contains("X") || !j.contains("y"))
        throw InvalidInput("matrix problems need both 'X' and 'y'");
      file.shape = ProblemFile::Shape::matrix;
      const json& x = j.at("X");
      if (!x.is_array() || x.empty())
        throw ParseError("field 'X' must be a non-empty array of rows");
      for (const auto& row : x)
        file.matrix.push_back(number_vector(row, "X"));
      file.target = number_vector(j.at("y"), "y");
      const std::size_t m = file.matrix[0].size();
      for (const auto& row : file.matrix) {
        if (row.size() != m)
          throw DimensionMismatch("all rows of 'X' must have equal length");
      }
      if (file.target.size() != file.matrix.size())
        throw DimensionMismatch("'y' must have one entry per row of 'X'");
    }
    if (j.contains("config")) apply_config(j.at("config"), file.config);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed problem file: ") + e.what());
  }
  return file;
}

ProblemFile load_problem(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open problem file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    text = os.str();
  }
  return parse_problem(text);
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "text") return Format::text;
  throw InvalidInput("unknown format: " + name + " (expected json, csv or text)");
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string render_report(const json& report, Format format) {
  if (format == Format::json) return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> fields;
  flatten(report, "", fields);
  std::ostringstream os;
  if (format == Format::csv) {
    os << "key,value\n";
    for (const auto& [k, v] : fields) os << k << "," << v << "\n";
  } else {
    for (const auto& [k, v] : fields) os << k << " = " << v << "\n";
  }
  return os.str();
}

}  // namespace maxent::io
