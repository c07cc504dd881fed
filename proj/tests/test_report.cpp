#include <gtest/gtest.h>

#include <string>

#include "o3clips/report.hpp"

using namespace o3clips;
using namespace o3clips::labels;

TEST(Report, ParseOutputFormat) {
  EXPECT_EQ(parse_output_format("text"), OutputFormat::Text);
  EXPECT_EQ(parse_output_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_output_format("markdown"), OutputFormat::Markdown);
  EXPECT_EQ(parse_output_format("md"), OutputFormat::Markdown);
  EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
}

TEST(Report, ClipsJsonIsCompact) {
  const std::string s =
      render_clips_json(cyclic_minus(2), parse_label("Z4+Z2c"), ClassSet{trivial(), cyclic_minus(2)});
  EXPECT_EQ(s, R"({"op":"clips","lhs":"Z4^-","rhs":"Z4+Z2c","result":["1","Z4^-"]})");
}

TEST(Report, HeadingsRoundTrip) {
  for (auto c : {TableColumn::CyclicMinus, TableColumn::DihedralZ, TableColumn::DihedralD,
                 TableColumn::OctahedralMinus, TableColumn::O2Minus})
    EXPECT_EQ(parse_column_heading(column_heading(c)), c);
  for (auto r : {TableRow::Cyclic, TableRow::Dihedral, TableRow::Tetrahedral,
                 TableRow::Octahedral, TableRow::Icosahedral, TableRow::SO2, TableRow::O2})
    EXPECT_EQ(parse_row_heading(row_heading(r)), r);
  EXPECT_THROW(parse_column_heading("Q"), std::invalid_argument);
}

TEST(Report, DihedralDCaptionsStayDistinct) {
  const TableDocument doc =
      build_table({{TableRow::Cyclic, 2}},
                  {{TableColumn::DihedralZ, 2}, {TableColumn::DihedralD, 1}});
  ASSERT_EQ(doc.columns.size(), 2u);
  EXPECT_EQ(doc.columns[0], "D2^z");
  EXPECT_EQ(doc.columns[1], "D2^d");
  ASSERT_EQ(doc.cells.size(), 2u);
  EXPECT_EQ(doc.cells[1].column_index, 1u);
}

TEST(Report, TextAndCsv) {
  const TableDocument doc = build_table({{TableRow::Cyclic, 4}}, {{TableColumn::CyclicMinus, 2}});
  EXPECT_EQ(render_table(doc, OutputFormat::Text), "Z4+Z2c o Z4^- = 1 Z4^-\n");
  const std::string csv = render_table(doc, OutputFormat::Csv);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "row,column,branch,result");
  EXPECT_NE(csv.find("Z4+Z2c,Z4^-,"), std::string::npos);
}

TEST(Report, CsvQuotesFieldsWithCommas) {
  EXPECT_EQ(detail::csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(detail::csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(detail::csv_field("plain"), "plain");
}

TEST(Report, JsonTableSchema) {
  const TableDocument doc = build_table({{TableRow::Octahedral, 0}, {TableRow::Dihedral, 3}},
                                        {{TableColumn::OctahedralMinus, 0}});
  const auto j = nlohmann::json::parse(render_table(doc, OutputFormat::Json));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  for (const auto& cell : j) {
    EXPECT_EQ(cell["op"], "clips");
    EXPECT_EQ(cell["rhs"], "O^-");
    EXPECT_TRUE(cell["branch"].is_string());
    EXPECT_TRUE(cell["result"].is_array());
    EXPECT_EQ(cell["result"][0], "1");
  }
  EXPECT_EQ(j[0]["lhs"], "O+Z2c");
}

TEST(Report, EmptyTable) {
  const TableDocument doc = build_table({}, {{TableColumn::CyclicMinus, 1}});
  EXPECT_EQ(render_table(doc, OutputFormat::Markdown), "");
  EXPECT_EQ(render_table(doc, OutputFormat::Text), "");
  EXPECT_EQ(render_table(doc, OutputFormat::Csv), "row,column,branch,result\n");
  EXPECT_EQ(render_table(doc, OutputFormat::Json), "[]\n");
}

TEST(Report, MarkdownGrid) {
  const TableDocument doc = build_table({{TableRow::Dihedral, 4}}, {{TableColumn::CyclicMinus, 1}});
  const std::string md = render_table(doc, OutputFormat::Markdown);
  EXPECT_EQ(md.substr(0, md.find('\n')), "| | Z2^- |");
  EXPECT_NE(md.find("| D4+Z2c |"), std::string::npos);
}
