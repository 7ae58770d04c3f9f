#include "framesteps/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace framesteps {

using nlohmann::json;

namespace {

json rational_to_json(const Rational& v) {
  if (v.is_integer()) return json(v.num());
  return json(v.str());
}

Rational rational_from_json(const json& value) {
  if (value.is_number_integer()) return Rational(value.get<long long>());
  if (value.is_number_float()) {
    double x = value.get<double>();
    if (x == std::floor(x) && std::fabs(x) < 9e15)
      return Rational(static_cast<long long>(x));
    throw std::invalid_argument("non-exact number in GT pattern; use \"p/q\"");
  }
  if (value.is_string()) {
    auto parsed = Rational::parse(value.get<std::string>());
    if (parsed) return *parsed;
    throw std::invalid_argument("malformed rational \"" +
                                value.get<std::string>() + "\"");
  }
  throw std::invalid_argument("expected integer or \"p/q\" string");
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw std::invalid_argument("malformed JSON");
  return doc;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

Tableau tableau_from(const json& doc) {
  if (!doc.contains("rows") || !doc["rows"].is_array())
    throw std::invalid_argument("tableau JSON needs a \"rows\" array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array())
      throw std::invalid_argument("tableau rows must be arrays");
    rows.push_back(row.get<std::vector<int>>());
  }
  if (doc.contains("inner")) {
    Partition inner(doc["inner"].get<std::vector<int>>());
    return Tableau::skew(std::move(inner), std::move(rows));
  }
  return Tableau::straight(std::move(rows));
}

GtPattern gt_from(const json& doc) {
  if (!doc.contains("shape") || !doc["shape"].is_string())
    throw std::invalid_argument("gt JSON needs a \"shape\" string");
  std::string shape = doc["shape"].get<std::string>();
  GtKind kind;
  if (shape == "triangular") {
    kind = GtKind::triangular;
  } else if (shape == "parallelogram") {
    kind = GtKind::parallelogram;
  } else {
    throw std::invalid_argument("gt shape must be triangular or parallelogram");
  }
  if (!doc.contains("rows") || !doc["rows"].is_array())
    throw std::invalid_argument("gt JSON needs a \"rows\" array");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) throw std::invalid_argument("gt rows must be arrays");
    std::vector<Rational> r;
    for (const auto& value : row) r.push_back(rational_from_json(value));
    rows.push_back(std::move(r));
  }
  return GtPattern(kind, std::move(rows));
}

Matrix matrix_from(const json& doc) {
  if (!doc.contains("rows") || !doc["rows"].is_array())
    throw std::invalid_argument("matrix JSON needs a \"rows\" array");
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["rows"])
    rows.push_back(row.get<std::vector<double>>());
  return Matrix::from_rows(rows);
}

}  // namespace

std::string tableau_to_json(const Tableau& t) {
  json doc;
  doc["kind"] = "tableau";
  if (!t.is_straight()) doc["inner"] = t.inner().trimmed().parts();
  doc["rows"] = t.rows();
  return doc.dump();
}

Tableau tableau_from_json(const std::string& text) {
  return tableau_from(parse_json(text));
}

std::string gt_to_json(const GtPattern& p) {
  json doc;
  doc["kind"] = "gt";
  doc["shape"] =
      p.kind() == GtKind::triangular ? "triangular" : "parallelogram";
  json rows = json::array();
  for (const auto& row : p.rows()) {
    json r = json::array();
    for (const auto& v : row) r.push_back(rational_to_json(v));
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump();
}

GtPattern gt_from_json(const std::string& text) {
  return gt_from(parse_json(text));
}

std::string matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["kind"] = "matrix";
  doc["rows"] = std::move(rows);
  return doc.dump();
}

std::string matrix_to_csv(const Matrix& m) {
  std::string out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ",";
      out += format_double(m(i, j));
    }
    out += "\n";
  }
  return out;
}

Matrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::istringstream stream(text);
  std::string line;
  while (std::getline(stream, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      try {
        std::size_t used = 0;
        double value = std::stod(field, &used);
        while (used < field.size() &&
               (field[used] == ' ' || field[used] == '\r' || field[used] == '\t'))
          ++used;
        if (used != field.size()) throw std::invalid_argument(field);
        row.push_back(value);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed CSV number \"" + field + "\"");
      }
    }
    rows.push_back(std::move(row));
  }
  return Matrix::from_rows(rows);
}

Document parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return matrix_from_csv(text);
  std::string kind = doc.value("kind", "");
  if (kind == "tableau") return tableau_from(doc);
  if (kind == "gt") return gt_from(doc);
  if (kind == "matrix") return matrix_from(doc);
  throw std::invalid_argument(
      "unknown document kind \"" + kind +
      "\" (expected tableau, gt, or matrix)");
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str());
}

}  // namespace framesteps
