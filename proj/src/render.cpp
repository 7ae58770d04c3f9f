#include "framesteps/render.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace framesteps {

namespace {

std::string format_entry(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
  if (s.size() >= width) return s;
  return std::string(width - s.size(), ' ') + s;
}

// Shared layout for triangle/parallelogram text: tokens per row (bottom to
// top), printed top row first, row i indented by (n-i) half-strides.
std::string staggered_rows(const std::vector<std::vector<std::string>>& rows) {
  std::size_t width = 1;
  for (const auto& row : rows)
    for (const auto& token : row) width = std::max(width, token.size());
  std::size_t stride = width + 2;
  std::string out;
  int n = static_cast<int>(rows.size());
  for (int i = n; i >= 1; --i) {
    std::string line(static_cast<std::size_t>(n - i) * stride / 2, ' ');
    const auto& row = rows[i - 1];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += std::string(stride - width, ' ');
      line += pad_left(row[j], width);
    }
    out += line;
    out += "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> gt_tokens(const GtPattern& p) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : p.rows()) {
    std::vector<std::string> tokens;
    for (const auto& v : row) tokens.push_back(v.str());
    rows.push_back(std::move(tokens));
  }
  return rows;
}

}  // namespace

std::string render_tableau_ascii(const Tableau& t) {
  if (t.empty()) return "(empty)\n";
  std::size_t width = 1;
  for (const auto& row : t.rows())
    for (int e : row) width = std::max(width, std::to_string(e).size());
  std::string out;
  for (int r = t.row_count() - 1; r >= 0; --r) {
    std::string line;
    for (int c = 0; c < t.inner().part(r); ++c) {
      if (!line.empty()) line += " ";
      line += pad_left(".", width);
    }
    for (int e : t.rows()[r]) {
      if (!line.empty()) line += " ";
      line += pad_left(std::to_string(e), width);
    }
    out += line;
    out += "\n";
  }
  return out;
}

std::string render_gt_ascii(const GtPattern& p) {
  if (p.row_count() == 0) return "(empty)\n";
  return staggered_rows(gt_tokens(p));
}

std::string render_eigensteps_ascii(const EigenstepTable& table) {
  if (table.rows.empty()) return "(empty)\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : table.rows) {
    std::vector<std::string> tokens;
    for (double v : row) tokens.push_back(format_entry(v));
    rows.push_back(std::move(tokens));
  }
  return staggered_rows(rows);
}

std::string render_tableau_latex(const Tableau& t) {
  std::string out = "\\begin{ytableau}\n";
  for (int r = t.row_count() - 1; r >= 0; --r) {
    std::string line;
    for (int c = 0; c < t.inner().part(r); ++c) {
      if (!line.empty()) line += " & ";
      line += "\\none";
    }
    for (int e : t.rows()[r]) {
      if (!line.empty()) line += " & ";
      line += std::to_string(e);
    }
    out += line;
    out += " \\\\\n";
  }
  out += "\\end{ytableau}\n";
  return out;
}

std::string render_gt_latex(const GtPattern& p) {
  std::string out = "\\begin{matrix}\n";
  int n = p.row_count();
  for (int i = n; i >= 1; --i) {
    std::string line;
    for (int k = 0; k < n - i; ++k) line += "& ";
    const auto& row = p.rows()[i - 1];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) line += " & & ";
      line += row[j].str();
    }
    out += line;
    out += " \\\\\n";
  }
  out += "\\end{matrix}\n";
  return out;
}

}  // namespace framesteps
