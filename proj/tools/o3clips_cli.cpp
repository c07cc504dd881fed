// o3clips: clips queries, table regeneration, oracle sweeps, the
// piezoelectricity catalog and group dumps.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "o3clips/class_label.hpp"
#include "o3clips/clips_engine.hpp"
#include "o3clips/concrete_group.hpp"
#include "o3clips/piezo.hpp"
#include "o3clips/report.hpp"
#include "o3clips/verify.hpp"

namespace {

using namespace o3clips;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ClassLabel parse_or_usage(const std::string& text) {
  try {
    return parse_label(text);
  } catch (const LabelError& e) {
    throw UsageError(std::string(e.what()) + "\n  " + text + "\n  " +
                     std::string(e.position(), ' ') + "^");
  }
}

OutputFormat format_or_usage(const std::string& text) {
  try {
    return parse_output_format(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

/// "A..B" -> [A, B]; B < A is an empty range.
std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("range must look like A..B, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    if (a < 1) throw UsageError("range start must be >= 1 in '" + text + "'");
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("range must look like A..B, got '" + text + "'");
  }
}

// ---------------------------------------------------------------------------

struct ClipsArgs {
  std::string lhs, rhs;
  std::string method = "symbolic";
  std::string format = "text";
};

int run_clips(const ClipsArgs& args) {
  const ClassLabel lhs = parse_or_usage(args.lhs);
  const ClassLabel rhs = parse_or_usage(args.rhs);
  const OutputFormat format = format_or_usage(args.format);
  if (format == OutputFormat::Csv || format == OutputFormat::Markdown)
    throw UsageError("clips supports --format text or json");

  std::optional<ClassSet> symbolic, oracle;
  if (args.method == "symbolic" || args.method == "both") {
    ClipsEngine engine;
    symbolic = engine.clips(lhs, rhs);
  }
  if (args.method == "oracle" || args.method == "both") oracle = clips_direct_oracle(lhs, rhs);

  if (args.method != "both") {
    const ClassSet& result = symbolic ? *symbolic : *oracle;
    if (format == OutputFormat::Json)
      std::cout << render_clips_json(lhs, rhs, result) << '\n';
    else
      std::cout << format_set(result) << '\n';
    return kExitOk;
  }

  const bool match = *symbolic == *oracle;
  if (format == OutputFormat::Json) {
    nlohmann::ordered_json j;
    j["op"] = "clips";
    j["lhs"] = format_label(lhs);
    j["rhs"] = format_label(rhs);
    j["result"] = set_to_json(*symbolic);
    j["oracle"] = set_to_json(*oracle);
    j["verdict"] = match ? "MATCH" : "MISMATCH";
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "symbolic: " << format_set(*symbolic) << '\n'
              << "oracle:   " << format_set(*oracle) << '\n'
              << (match ? "MATCH" : "MISMATCH") << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

struct TableArgs {
  std::string n_range = "1..8";
  std::string m_range = "2..8";
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  std::string format = "text";
};

int run_table(const TableArgs& args) {
  const auto [n_lo, n_hi] = parse_range(args.n_range);
  const auto [m_lo, m_hi] = parse_range(args.m_range);
  const OutputFormat format = format_or_usage(args.format);

  std::vector<TableColumn> column_kinds;
  std::vector<TableRow> row_kinds;
  try {
    for (const auto& c : args.columns) column_kinds.push_back(parse_column_heading(c));
    for (const auto& r : args.rows) row_kinds.push_back(parse_row_heading(r));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (column_kinds.empty())
    column_kinds = {TableColumn::CyclicMinus, TableColumn::DihedralZ, TableColumn::DihedralD,
                    TableColumn::OctahedralMinus, TableColumn::O2Minus};
  if (row_kinds.empty())
    row_kinds = {TableRow::Cyclic,     TableRow::Dihedral,    TableRow::Tetrahedral,
                 TableRow::Octahedral, TableRow::Icosahedral, TableRow::SO2,
                 TableRow::O2};

  std::vector<std::pair<TableColumn, int>> columns;
  std::vector<std::pair<TableRow, int>> rows;
  if (n_lo <= n_hi && m_lo <= m_hi) {
    for (auto c : column_kinds) {
      if (!column_has_parameter(c)) {
        columns.emplace_back(c, 0);
        continue;
      }
      for (int n = std::max(n_lo, c == TableColumn::DihedralZ ? 2 : 1); n <= n_hi; ++n)
        columns.emplace_back(c, n);
    }
    for (auto r : row_kinds) {
      if (!row_has_parameter(r)) {
        rows.emplace_back(r, 0);
        continue;
      }
      for (int m = std::max(m_lo, r == TableRow::Dihedral ? 2 : 1); m <= m_hi; ++m)
        rows.emplace_back(r, m);
    }
  }
  std::cout << render_table(build_table(rows, columns), format);
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  int n_max = 8;
  int m_max = 8;
  std::uint64_t seed = OracleOptions{}.seed;
};

int run_verify(const VerifyArgs& args) {
  if (args.n_max < 1 || args.m_max < 1) throw UsageError("--n-max and --m-max must be >= 1");
  OracleOptions options;
  options.seed = args.seed;
  std::size_t matched = 0, total = 0;
  for (const auto& [c, n] : sweep_columns(args.n_max)) {
    for (const auto& [r, m] : sweep_rows(args.m_max)) {
      const CellVerdict v = verify_cell(c, n, r, m, options);
      ++total;
      const std::string cell = format_label(v.lhs) + " o " + column_caption(c, n);
      if (v.match()) {
        ++matched;
        std::cout << "MATCH     " << cell << '\n';
      } else {
        std::cout << "MISMATCH  " << cell << "  [" << v.branch << "]\n"
                  << "            symbolic: " << format_set(v.symbolic) << '\n'
                  << "            oracle:   " << format_set(v.oracle) << '\n';
      }
      std::cout.flush();
    }
  }
  std::cout << matched << '/' << total << " cells match\n";
  if (matched == total) {
    std::cout << "all cells match\n";
    return kExitOk;
  }
  std::cout << (total - matched) << " cells differ\n";
  return kExitMismatch;
}

// ---------------------------------------------------------------------------

struct PiezArgs {
  std::string format = "text";
  std::string golden;  // optional fixture, one label per line
};

ClassSet read_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read golden file '" + path + "'");
  ClassSet out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.insert(parse_or_usage(line));
  }
  return out;
}

int run_piez(const PiezArgs& args) {
  const OutputFormat format = format_or_usage(args.format);
  ClipsEngine engine;
  const IsotropyCatalog computed = compute_piez(engine);
  const ClassSet reference = args.golden.empty()
                                 ? builtin_isotropy(SpaceName::PiezLaw).classes
                                 : read_golden(args.golden);
  const SetDiff diff = diff_sets(computed.classes, reference);

  std::ostream& report = format == OutputFormat::Json ? std::cerr : std::cout;
  if (format == OutputFormat::Json) {
    std::cout << set_to_json(computed.classes).dump() << '\n';
  } else {
    for (const auto& l : computed.classes) std::cout << format_label(l) << '\n';
  }
  report << computed.classes.size() << " classes computed\n";
  if (args.golden.empty())
    report << "published list: " << printed_piez_law_labels().size() << " printed labels, "
           << reference.size() << " classes (D2^d and D2^z name the same class)\n";
  if (diff.empty()) {
    report << "MATCHES published list\n";
    return kExitOk;
  }
  report << "DIFFERS from reference list\n";
  if (!diff.missing.empty()) report << "missing: " << format_set(diff.missing) << '\n';
  if (!diff.extra.empty()) {
    report << "extra:   " << format_set(diff.extra) << '\n';
    for (const auto& line : explain_extras(engine, diff.extra)) report << "  " << line << '\n';
  }
  return kExitMismatch;
}

// ---------------------------------------------------------------------------

std::string kind_name(Kind k) {
  switch (k) {
    case Kind::TypeI: return "I";
    case Kind::TypeII: return "II";
    case Kind::TypeIII: return "III";
  }
  return "?";
}

int run_info(const std::string& text) {
  const ClassLabel label = parse_or_usage(text);
  const auto order = order_of(label);
  std::cout << "label: " << format_label(label) << '\n'
            << "type: " << kind_name(label.kind()) << '\n'
            << "order: " << (order ? std::to_string(*order) : std::string("infinite")) << '\n'
            << "proper part: " << format_label(proper_part(label)) << '\n';
  if (!label.finite()) return kExitOk;
  std::cout << "generators: " << reference_generators(label).size() << '\n';
  const AxisCatalog catalog = axis_catalog(label);
  auto summary = [](const std::vector<TaggedAxis>& axes) {
    if (axes.empty()) return std::string("none");
    std::map<int, int> by_order;
    for (const auto& a : axes) ++by_order[a.order];
    std::string out;
    for (const auto& [q, count] : by_order) {
      if (!out.empty()) out += ", ";
      out += std::to_string(count) + " x " + std::to_string(q) + "-fold";
    }
    return out;
  };
  std::cout << "primary axes: " << summary(catalog.primary_axes) << '\n'
            << "secondary axes: " << summary(catalog.secondary_axes) << '\n'
            << "ternary axes: " << summary(catalog.ternary_axes) << '\n';
  return kExitOk;
}

int run_materialize(const std::string& text, std::optional<std::uint64_t> seed) {
  const ClassLabel label = parse_or_usage(text);
  if (!label.finite())
    throw UsageError(format_label(label) +
                     " is infinite and has no finite element list; query it symbolically "
                     "with `o3clips clips` or `o3clips info`");
  RotationElement orientation = RotationElement::identity();
  if (seed) {
    std::mt19937_64 rng(*seed);
    orientation = detail::random_rotation(rng);
  }
  std::cout << dump_elements(label, materialize(label, orientation));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clips of conjugacy classes of closed O(3) subgroups", "o3clips"};
  app.require_subcommand(1);

  ClipsArgs clips_args;
  auto* clips = app.add_subcommand("clips", "clips of two classes");
  clips->add_option("LHS", clips_args.lhs, "first class label")->required();
  clips->add_option("RHS", clips_args.rhs, "second class label")->required();
  clips->add_option("--method", clips_args.method, "symbolic, oracle or both")
      ->check(CLI::IsMember({"symbolic", "oracle", "both"}));
  clips->add_option("--format", clips_args.format, "text or json");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "regenerate type II x type III cells");
  table->add_option("--n-range", table_args.n_range, "column parameter range A..B");
  table->add_option("--m-range", table_args.m_range, "row parameter range A..B");
  table->add_option("--columns", table_args.columns, "Z2n^- Dn^z D2n^d O^- O(2)^-")
      ->delimiter(',');
  table->add_option("--rows", table_args.rows, "Zm Dm T O I SO(2) O(2)")->delimiter(',');
  table->add_option("--format", table_args.format, "text, csv, markdown or json");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "compare closed forms with the oracle");
  verify->add_option("--n-max", verify_args.n_max, "largest column parameter");
  verify->add_option("--m-max", verify_args.m_max, "largest row parameter");
  verify->add_option("--seed", verify_args.seed, "oracle seed");

  PiezArgs piez_args;
  auto* piez = app.add_subcommand("piez", "isotropy classes of the piezoelectricity law");
  piez->add_option("--format", piez_args.format, "text or json");
  piez->add_option("--golden", piez_args.golden, "reference list, one label per line");

  std::string info_label;
  auto* info = app.add_subcommand("info", "facts about one class");
  info->add_option("LABEL", info_label, "class label")->required();

  std::string mat_label;
  std::optional<std::uint64_t> mat_seed;
  auto* mat = app.add_subcommand("materialize", "dump the elements of a finite class");
  mat->add_option("LABEL", mat_label, "class label")->required();
  mat->add_option("--seed", mat_seed, "conjugate by a seeded random rotation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*clips) return run_clips(clips_args);
    if (*table) return run_table(table_args);
    if (*verify) return run_verify(verify_args);
    if (*piez) return run_piez(piez_args);
    if (*info) return run_info(info_label);
    if (*mat) return run_materialize(mat_label, mat_seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
