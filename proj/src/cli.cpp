#include "framesteps/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "framesteps/bridge.hpp"
#include "framesteps/render.hpp"
#include "framesteps/serialization.hpp"
#include "framesteps/spectral.hpp"

namespace framesteps {

namespace {

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

double env_tolerance() {
  const char* raw = std::getenv("FRAMESTEPS_TOL");
  if (raw == nullptr) return kDefaultTolerance;
  char* end = nullptr;
  double value = std::strtod(raw, &end);
  if (end == raw || value <= 0.0)
    throw std::invalid_argument("FRAMESTEPS_TOL must be a positive number");
  return value;
}

const Tableau& as_tableau(const Document& doc, const char* command) {
  if (const auto* t = std::get_if<Tableau>(&doc)) return *t;
  throw std::invalid_argument(std::string(command) + ": input must be a tableau");
}

const GtPattern& as_gt(const Document& doc, const char* command) {
  if (const auto* p = std::get_if<GtPattern>(&doc)) return *p;
  throw std::invalid_argument(std::string(command) + ": input must be a GT pattern");
}

const Matrix& as_matrix(const Document& doc, const char* command) {
  if (const auto* m = std::get_if<Matrix>(&doc)) return *m;
  throw std::invalid_argument(std::string(command) + ": input must be a matrix");
}

// Count of nonzero entries in the top row: the rank slot of an eigenstep
// pattern, used as the natural parallelogram width.
int top_row_rank(const GtPattern& p) {
  int count = 0;
  for (const auto& v : p.top_row())
    if (!v.is_zero()) ++count;
  return count;
}

int print_validation(const ValidationReport& report, std::ostream& out) {
  if (report.ok) {
    out << "ok\n";
    return 0;
  }
  for (const auto& v : report.violations)
    out << "violation: " << v.rule << " rule at row " << v.row << ", col "
        << v.col << " (" << v.detail << ")\n";
  return 1;
}

int cmd_validate(const std::string& path, std::ostream& out) {
  Document doc = load_document(path);
  if (const auto* t = std::get_if<Tableau>(&doc))
    return print_validation(validate_tableau(*t), out);
  if (const auto* p = std::get_if<GtPattern>(&doc))
    return print_validation(validate_gt(*p), out);
  const Matrix& m = std::get<Matrix>(doc);
  out << "ok (matrix " << m.rows() << "x" << m.cols() << ")\n";
  return 0;
}

int cmd_convert(const std::string& target, const std::string& path,
                std::ostream& out) {
  Document doc = load_document(path);
  if (std::holds_alternative<Matrix>(doc))
    throw std::invalid_argument("convert: input must be a tableau or GT pattern");

  if (target == "ssyt") {
    Tableau result;
    if (const auto* t = std::get_if<Tableau>(&doc)) {
      result = t->is_straight() ? *t : skew_to_straight(*t);
    } else {
      GtPattern p = std::get<GtPattern>(doc);
      if (p.kind() == GtKind::parallelogram) p = parallelogram_to_triangular(p);
      result = gt_to_ssyt(p);
    }
    out << tableau_to_json(result) << "\n";
    return 0;
  }
  if (target == "skew") {
    Tableau result;
    if (const auto* t = std::get_if<Tableau>(&doc)) {
      result = t->is_straight() ? strip_to_skew(*t) : *t;
    } else {
      GtPattern p = std::get<GtPattern>(doc);
      if (p.kind() == GtKind::triangular)
        p = triangular_to_parallelogram(p, std::max(1, top_row_rank(p)));
      result = gt_to_skew(p);
    }
    out << tableau_to_json(result) << "\n";
    return 0;
  }
  if (target == "gt") {
    GtPattern result;
    if (const auto* t = std::get_if<Tableau>(&doc)) {
      result = t->is_straight() ? ssyt_to_gt(*t) : skew_to_gt(*t);
    } else {
      result = std::get<GtPattern>(doc);
    }
    out << gt_to_json(result) << "\n";
    return 0;
  }
  // parallelogram
  GtPattern result;
  if (const auto* t = std::get_if<Tableau>(&doc)) {
    result = t->is_straight() ? skew_to_gt(strip_to_skew(*t)) : skew_to_gt(*t);
  } else {
    GtPattern p = std::get<GtPattern>(doc);
    result = p.kind() == GtKind::parallelogram
                 ? p
                 : triangular_to_parallelogram(p, std::max(1, top_row_rank(p)));
  }
  out << gt_to_json(result) << "\n";
  return 0;
}

int cmd_complement(const std::string& map, const std::string& path, int n,
                   int d, std::ostream& out) {
  Document doc = load_document(path);
  if (map == "gamma") {
    const Tableau& t = as_tableau(doc, "complement --map gamma");
    if (n == 0) n = t.columns();
    if (d == 0) d = t.outer().rows();
    out << tableau_to_json(gamma_complement(t, n, d)) << "\n";
    return 0;
  }
  if (map == "boxcomp") {
    const Tableau& t = as_tableau(doc, "complement --map boxcomp");
    if (n == 0) n = t.max_entry();
    out << tableau_to_json(boxcomp(t, n)) << "\n";
    return 0;
  }
  if (map == "naimark") {
    const GtPattern& p = as_gt(doc, "complement --map naimark");
    if (n == 0) n = p.row_count();
    if (d == 0) d = top_row_rank(p);
    out << gt_to_json(naimark_map(p, n, d)) << "\n";
    return 0;
  }
  const GtPattern& p = as_gt(doc, "complement --map generalized");
  out << gt_to_json(generalized_complement(p)) << "\n";
  return 0;
}

int cmd_eigensteps(const std::string& path, bool outer, bool clear, double tol,
                   long long max_den, std::ostream& out, std::ostream& err) {
  const Matrix& m = as_matrix(load_document(path), "eigensteps");
  EigenstepTable table =
      outer ? outer_eigensteps(m, tol) : inner_eigensteps(m, tol);
  if (!clear) {
    out << render_eigensteps_ascii(table);
    return 0;
  }
  ClearResult result = clear_eigensteps(table, max_den, tol);
  if (!result.ok) {
    err << "not clearable: entry " << format_number(result.worst_value)
        << " at row " << result.worst_row << ", col " << result.worst_col
        << " is " << format_number(result.worst_error)
        << " away from the nearest rational with denominator <= " << max_den
        << "\n";
    return 1;
  }
  out << "l = " << result.constant.str() << "\n";
  out << render_gt_ascii(result.pattern);
  return 0;
}

int cmd_report(const std::string& path, double tol, std::ostream& out) {
  const Matrix& m = as_matrix(load_document(path), "report");
  FrameReport report = frame_report(m, tol);
  out << "dimension: " << report.dimension << "\n";
  out << "vectors: " << report.vector_count << "\n";
  out << "rank: " << report.rank << "\n";
  if (report.rank > 0) {
    out << "upper frame bound: " << format_number(report.upper_bound) << "\n";
    out << "lower frame bound: " << format_number(report.lower_bound) << "\n";
    out << "tight: " << (report.tight ? "yes" : "no") << "\n";
    out << "equal-norm: " << (report.equal_norm ? "yes" : "no") << "\n";
  } else {
    out << "frame bounds: none (zero frame)\n";
  }
  out << "norm-squares:";
  for (double w : report.norm_squares) out << " " << format_number(w);
  out << "\n";
  return 0;
}

int cmd_naimark_frame(const std::string& path, bool generalized, double tol,
                      std::ostream& out) {
  const Matrix& m = as_matrix(load_document(path), "naimark-frame");
  Matrix psi = naimark_frame(
      m, generalized ? NaimarkMode::generalized : NaimarkMode::tight, tol);
  out << matrix_to_csv(psi);
  return 0;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::istringstream stream(text);
  std::string field;
  while (std::getline(stream, field, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw CLI::ValidationError(std::string(what) +
                                 ": expected a comma-separated integer list");
    }
  }
  if (out.empty())
    throw CLI::ValidationError(std::string(what) + ": empty list");
  return out;
}

int cmd_enumerate(const std::string& shape_text, const std::string& weight_text,
                  bool count_only, std::uint64_t limit, std::ostream& out,
                  std::ostream& err) {
  Partition shape(parse_int_list(shape_text, "--shape"));
  WeightVector weight = parse_int_list(weight_text, "--weight");
  TableauEnumerator stream(shape, weight);
  if (!stream.diagnostic().empty()) {
    err << "error: " << stream.diagnostic() << "\n";
    return 1;
  }
  std::uint64_t emitted = 0;
  while (limit == 0 || emitted < limit) {
    auto t = stream.next();
    if (!t) break;
    ++emitted;
    if (!count_only) out << tableau_to_json(*t) << "\n";
  }
  if (count_only) {
    // exhaust to report the true total even when a limit was set
    while (stream.next()) {
    }
    out << stream.produced() << "\n";
  } else if (stream.exhausted()) {
    out << "count: " << stream.produced() << "\n";
  }
  return 0;
}

int cmd_verify_diagrams(int n, int d, std::ostream& out) {
  if (n < 2 || d < 1 || d >= n)
    throw CLI::ValidationError("verify-diagrams: need n >= 2 and 0 < d < n");

  std::uint64_t naimark_total = 0, naimark_ok = 0;
  {
    Partition shape(std::vector<int>(d, n));
    WeightVector weight(n, d);
    TableauEnumerator stream(shape, weight);
    while (auto t = stream.next()) {
      ++naimark_total;
      if (verify_naimark_diagram(*t, n, d)) ++naimark_ok;
    }
  }
  out << "naimark diagram (n=" << n << ", d=" << d << "): " << naimark_ok
      << "/" << naimark_total << " ok\n";

  // Every straight SSYT with at most 8 cells, entries in [n], and fewer than
  // n rows, swept shape by shape and weight by weight.
  constexpr int kMaxCells = 8;
  std::uint64_t box_total = 0, box_ok = 0;
  std::vector<int> shape_parts;
  std::vector<int> weight_parts(n, 0);
  auto sweep_weights = [&](const Partition& shape, auto&& self, int label,
                           int left) -> void {
    if (label == n - 1) {
      weight_parts[label] = left;
      TableauEnumerator stream(shape, weight_parts);
      while (auto t = stream.next()) {
        ++box_total;
        if (verify_boxcomp_diagram(*t, n)) ++box_ok;
      }
      return;
    }
    for (int w = 0; w <= left; ++w) {
      weight_parts[label] = w;
      self(shape, self, label + 1, left - w);
    }
  };
  auto sweep_shapes = [&](auto&& self, int remaining, int max_part) -> void {
    if (!shape_parts.empty()) {
      Partition shape(shape_parts);
      sweep_weights(shape, sweep_weights, 0, shape.cells());
    }
    if (remaining == 0 || static_cast<int>(shape_parts.size()) + 1 >= n) return;
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      shape_parts.push_back(part);
      self(self, remaining - part, part);
      shape_parts.pop_back();
    }
  };
  sweep_shapes(sweep_shapes, kMaxCells, kMaxCells);
  out << "boxcomp diagram (n=" << n << ", cells<=" << kMaxCells
      << "): " << box_ok << "/" << box_total << " ok\n";

  bool all_ok = naimark_ok == naimark_total && box_ok == box_total &&
                naimark_total > 0;
  return all_ok ? 0 : 1;
}

int cmd_render(const std::string& format, const std::string& path,
               std::ostream& out) {
  Document doc = load_document(path);
  if (const auto* t = std::get_if<Tableau>(&doc)) {
    out << (format == "latex" ? render_tableau_latex(*t)
                              : render_tableau_ascii(*t));
    return 0;
  }
  if (const auto* p = std::get_if<GtPattern>(&doc)) {
    out << (format == "latex" ? render_gt_latex(*p) : render_gt_ascii(*p));
    return 0;
  }
  throw std::invalid_argument("render: input must be a tableau or GT pattern");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"frames, eigensteps, GT patterns, and Young tableaux"};
  app.name("framesteps");
  app.require_subcommand(1);

  std::string file;
  std::string target, map, format = "ascii", shape_text, weight_text;
  bool outer = false, clear = false, generalized = false, count_only = false;
  double tol = 0.0;  // 0 = use FRAMESTEPS_TOL or the default
  long long max_den = kDefaultMaxDenominator;
  std::uint64_t limit = 0;
  int n = 0, d = 0;

  auto* validate = app.add_subcommand("validate", "check a file's invariants");
  validate->add_option("file", file)->required();

  auto* convert = app.add_subcommand("convert", "convert between tableaux and GT patterns");
  convert->add_option("--to", target, "target form")
      ->required()
      ->check(CLI::IsMember({"ssyt", "gt", "skew", "parallelogram"}));
  convert->add_option("file", file)->required();

  auto* complement = app.add_subcommand("complement", "apply a complement map");
  complement->add_option("--map", map, "which complement")
      ->required()
      ->check(CLI::IsMember({"gamma", "boxcomp", "naimark", "generalized"}));
  complement->add_option("--n", n, "label bound / vector count");
  complement->add_option("--d", d, "rank");
  complement->add_option("file", file)->required();

  auto* eigensteps = app.add_subcommand("eigensteps", "partial-spectrum table of a frame");
  eigensteps->add_flag("--outer", outer, "frame-operator side (d-wide rows)");
  eigensteps->add_flag("--clear", clear, "scale to the integer GT pattern");
  eigensteps->add_option("--tol", tol, "numeric tolerance")->check(CLI::PositiveNumber);
  eigensteps->add_option("--max-den", max_den, "largest denominator for clearing");
  eigensteps->add_option("matrix", file)->required();

  auto* report = app.add_subcommand("report", "frame bounds, rank, and norms");
  report->add_option("--tol", tol, "numeric tolerance")->check(CLI::PositiveNumber);
  report->add_option("matrix", file)->required();

  auto* naimark = app.add_subcommand("naimark-frame", "factor a Naimark complement");
  naimark->add_flag("--generalized", generalized, "use the largest eigenvalue bound");
  naimark->add_option("--tol", tol, "numeric tolerance")->check(CLI::PositiveNumber);
  naimark->add_option("matrix", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "stream SSYT of a shape and weight");
  enumerate->add_option("--shape", shape_text, "outer shape, e.g. 2,2")->required();
  enumerate->add_option("--weight", weight_text, "label multiplicities")->required();
  enumerate->add_flag("--count-only", count_only, "print only the total");
  enumerate->add_option("--limit", limit, "stop after this many tableaux");

  auto* verify = app.add_subcommand("verify-diagrams", "exhaustively check both commutative squares");
  verify->add_option("--n", n, "vector count")->required();
  verify->add_option("--d", d, "rank")->required();

  auto* render = app.add_subcommand("render", "pretty-print a tableau or GT pattern");
  render->add_option("--format", format, "ascii or latex")
      ->check(CLI::IsMember({"ascii", "latex"}));
  render->add_option("file", file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (tol == 0.0) tol = env_tolerance();
    if (validate->parsed()) return cmd_validate(file, out);
    if (convert->parsed()) return cmd_convert(target, file, out);
    if (complement->parsed()) return cmd_complement(map, file, n, d, out);
    if (eigensteps->parsed())
      return cmd_eigensteps(file, outer, clear, tol, max_den, out, err);
    if (report->parsed()) return cmd_report(file, tol, out);
    if (naimark->parsed()) return cmd_naimark_frame(file, generalized, tol, out);
    if (enumerate->parsed())
      return cmd_enumerate(shape_text, weight_text, count_only, limit, out, err);
    if (verify->parsed()) return cmd_verify_diagrams(n, d, out);
    if (render->parsed()) return cmd_render(format, file, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace framesteps
