// Text, CSV, Markdown and JSON renderings of class sets and table cells.

#ifndef O3CLIPS_REPORT_HPP_
#define O3CLIPS_REPORT_HPP_

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "class_label.hpp"
#include "clips_tables.hpp"

namespace o3clips {

enum class OutputFormat : std::uint8_t { Text, Json, Csv, Markdown };

inline OutputFormat parse_output_format(std::string_view s) {
  if (s == "text") return OutputFormat::Text;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "markdown" || s == "md") return OutputFormat::Markdown;
  throw std::invalid_argument("unknown format '" + std::string(s) + "'");
}

inline nlohmann::json set_to_json(const ClassSet& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& l : s) arr.push_back(format_label(l));
  return arr;
}

/// {"op", "lhs", "rhs", "result": [labels]}
inline std::string render_clips_json(const ClassLabel& lhs, const ClassLabel& rhs,
                                     const ClassSet& result) {
  nlohmann::ordered_json j;
  j["op"] = "clips";
  j["lhs"] = format_label(lhs);
  j["rhs"] = format_label(rhs);
  j["result"] = set_to_json(result);
  return j.dump();
}

inline std::string column_heading(TableColumn c) {
  switch (c) {
    case TableColumn::CyclicMinus: return "Z2n^-";
    case TableColumn::DihedralZ: return "Dn^z";
    case TableColumn::DihedralD: return "D2n^d";
    case TableColumn::OctahedralMinus: return "O^-";
    case TableColumn::O2Minus: return "O(2)^-";
  }
  return "?";
}

inline std::string row_heading(TableRow r) {
  switch (r) {
    case TableRow::Cyclic: return "Zm";
    case TableRow::Dihedral: return "Dm";
    case TableRow::Tetrahedral: return "T";
    case TableRow::Octahedral: return "O";
    case TableRow::Icosahedral: return "I";
    case TableRow::SO2: return "SO(2)";
    case TableRow::O2: return "O(2)";
  }
  return "?";
}

inline TableColumn parse_column_heading(std::string_view s) {
  for (auto c : {TableColumn::CyclicMinus, TableColumn::DihedralZ, TableColumn::DihedralD,
                 TableColumn::OctahedralMinus, TableColumn::O2Minus})
    if (column_heading(c) == s) return c;
  throw std::invalid_argument("unknown column '" + std::string(s) +
                              "' (expected Z2n^-, Dn^z, D2n^d, O^- or O(2)^-)");
}

inline TableRow parse_row_heading(std::string_view s) {
  for (auto r : {TableRow::Cyclic, TableRow::Dihedral, TableRow::Tetrahedral,
                 TableRow::Octahedral, TableRow::Icosahedral, TableRow::SO2, TableRow::O2})
    if (row_heading(r) == s) return r;
  throw std::invalid_argument("unknown row '" + std::string(s) +
                              "' (expected Zm, Dm, T, O, I, SO(2) or O(2))");
}

/// One evaluated cell of a regenerated table.
struct RenderedCell {
  std::size_t row_index;
  std::size_t column_index;
  ClassLabel row_class;     // H + Z2c
  ClassLabel column_class;  // type III class
  std::string branch;
  ClassSet result;
};

/// Captions are printed labels; D_{2n}^d at n = 1 keeps its own caption
/// although its class is D2^z.
struct TableDocument {
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<RenderedCell> cells;
};

inline std::string column_caption(TableColumn c, int n) {
  if (c == TableColumn::DihedralD && n == 1) return "D2^d";
  return format_label(column_label(c, n));
}

/// Evaluates every (row, column) cell in the given order.
inline TableDocument build_table(const std::vector<std::pair<TableRow, int>>& rows,
                                 const std::vector<std::pair<TableColumn, int>>& columns) {
  TableDocument doc;
  for (const auto& [r, m] : rows) doc.rows.push_back(format_label(row_label(r, m)));
  for (const auto& [c, n] : columns) doc.columns.push_back(column_caption(c, n));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto [r, m] = rows[i];
      const auto [c, n] = columns[j];
      TableCell cell = table_cell(c, n, r, m);
      doc.cells.push_back(
          {i, j, row_label(r, m), column_label(c, n), cell.branch, std::move(cell.result)});
    }
  return doc;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace detail

inline std::string render_table(const TableDocument& doc, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Json: {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& c : doc.cells) {
        nlohmann::ordered_json j;
        j["op"] = "clips";
        j["lhs"] = format_label(c.row_class);
        j["rhs"] = doc.columns[c.column_index];
        j["branch"] = c.branch;
        j["result"] = set_to_json(c.result);
        arr.push_back(j);
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "row,column,branch,result\n";
      for (const auto& c : doc.cells)
        out << detail::csv_field(format_label(c.row_class)) << ','
            << detail::csv_field(doc.columns[c.column_index]) << ','
            << detail::csv_field(c.branch) << ',' << detail::csv_field(format_set(c.result))
            << '\n';
      break;
    case OutputFormat::Markdown: {
      if (doc.cells.empty()) break;
      out << "| |";
      for (const auto& c : doc.columns) out << ' ' << c << " |";
      out << "\n|---|";
      for (std::size_t i = 0; i < doc.columns.size(); ++i) out << "---|";
      out << '\n';
      const std::size_t width = doc.columns.size();
      for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        out << "| " << doc.rows[i] << " |";
        for (std::size_t j = 0; j < width; ++j)
          out << ' ' << format_set(doc.cells[i * width + j].result) << " |";
        out << '\n';
      }
      break;
    }
    case OutputFormat::Text:
      for (const auto& c : doc.cells)
        out << doc.rows[c.row_index] << " o " << doc.columns[c.column_index] << " = "
            << format_set(c.result) << '\n';
      break;
  }
  return out.str();
}

}  // namespace o3clips

#endif  // O3CLIPS_REPORT_HPP_
