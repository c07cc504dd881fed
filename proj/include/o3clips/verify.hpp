// Sweeps over the type II x type III cells comparing the closed forms with
// the oracle.

#ifndef O3CLIPS_VERIFY_HPP_
#define O3CLIPS_VERIFY_HPP_

#include <string>
#include <vector>

#include "clips_oracle.hpp"
#include "clips_tables.hpp"

namespace o3clips {

struct CellVerdict {
  TableColumn column;
  int n;
  TableRow row;
  int m;
  ClassLabel lhs;  // row class H + Z2c
  ClassLabel rhs;  // column class
  std::string branch;
  ClassSet symbolic;
  ClassSet oracle;
  bool match() const { return symbolic == oracle; }
};

/// Column headings with parameter in [1, n_max] (D^z from 2), then O^- and O(2)^-.
inline std::vector<std::pair<TableColumn, int>> sweep_columns(int n_max) {
  std::vector<std::pair<TableColumn, int>> out;
  for (int n = 1; n <= n_max; ++n) out.emplace_back(TableColumn::CyclicMinus, n);
  for (int n = 2; n <= n_max; ++n) out.emplace_back(TableColumn::DihedralZ, n);
  for (int n = 1; n <= n_max; ++n) out.emplace_back(TableColumn::DihedralD, n);
  out.emplace_back(TableColumn::OctahedralMinus, 0);
  out.emplace_back(TableColumn::O2Minus, 0);
  return out;
}

/// Finite rows: Z_m and D_m for m in [2, m_max], then T, O, I.
inline std::vector<std::pair<TableRow, int>> sweep_rows(int m_max) {
  std::vector<std::pair<TableRow, int>> out;
  for (int m = 2; m <= m_max; ++m) out.emplace_back(TableRow::Cyclic, m);
  for (int m = 2; m <= m_max; ++m) out.emplace_back(TableRow::Dihedral, m);
  out.emplace_back(TableRow::Tetrahedral, 0);
  out.emplace_back(TableRow::Octahedral, 0);
  out.emplace_back(TableRow::Icosahedral, 0);
  return out;
}

inline CellVerdict verify_cell(TableColumn column, int n, TableRow row, int m,
                               const OracleOptions& options = {}) {
  const TableCell cell = table_cell(column, n, row, m);
  const ClassLabel lhs = row_label(row, m);
  const ClassLabel rhs = column_label(column, n);
  const ClassSet oracle =
      rhs.finite() ? clips_oracle(lhs, rhs, options) : clips_oracle_axial(lhs, rhs);
  return {column, n, row, m, lhs, rhs, cell.branch, cell.result, oracle};
}

inline std::vector<CellVerdict> verify_sweep(int n_max, int m_max,
                                             const OracleOptions& options = {}) {
  std::vector<CellVerdict> out;
  for (const auto& [c, n] : sweep_columns(n_max))
    for (const auto& [r, m] : sweep_rows(m_max)) out.push_back(verify_cell(c, n, r, m, options));
  return out;
}

}  // namespace o3clips

#endif  // O3CLIPS_VERIFY_HPP_
