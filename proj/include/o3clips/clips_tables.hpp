// Closed-form clips of a type II class H + Z2c with a type III class.
// Rows are indexed by the inner group H, columns by the type III class.
// Every cell implicitly contains the trivial class.

#ifndef O3CLIPS_CLIPS_TABLES_HPP_
#define O3CLIPS_CLIPS_TABLES_HPP_

#include <numeric>
#include <stdexcept>
#include <string>

#include "class_label.hpp"

namespace o3clips {

enum class TableColumn : std::uint8_t {
  CyclicMinus,      // Z_{2n}^-, n >= 1
  DihedralZ,        // D_n^z, n >= 2
  DihedralD,        // D_{2n}^d, n >= 1 (n = 1 is D_2^z)
  OctahedralMinus,  // O^-
  O2Minus,          // O(2)^-
};

enum class TableRow : std::uint8_t {
  Cyclic,  // Z_m, m >= 1
  Dihedral,  // D_m, m >= 2
  Tetrahedral,
  Octahedral,
  Icosahedral,
  SO2,
  O2,
};

struct TableCell {
  ClassSet result;
  std::string branch;  // which case of the closed form applied
};

/// The derived parameters shared by the closed forms.
struct ClipsHelperParams {
  int n = 0;
  int m = 0;
  int d = 0;  // gcd(m, n)

  /// d_k = gcd(k, n)
  int dn(int k) const { return std::gcd(k, n); }
  /// d'_k = gcd(k, m)
  int dm(int k) const { return std::gcd(k, m); }
};

inline bool column_has_parameter(TableColumn c) {
  return c == TableColumn::CyclicMinus || c == TableColumn::DihedralZ ||
         c == TableColumn::DihedralD;
}

inline bool row_has_parameter(TableRow r) {
  return r == TableRow::Cyclic || r == TableRow::Dihedral;
}

/// The type III class heading a column. D_2^d (n = 1) comes back as D_2^z.
inline ClassLabel column_label(TableColumn c, int n) {
  switch (c) {
    case TableColumn::CyclicMinus: return canonicalize(labels::cyclic_minus(n));
    case TableColumn::DihedralZ: return canonicalize(labels::dihedral_z(n));
    case TableColumn::DihedralD: return canonicalize(labels::dihedral_d(n));
    case TableColumn::OctahedralMinus: return labels::octahedral_minus();
    case TableColumn::O2Minus: return labels::o2_minus();
  }
  throw std::logic_error("bad column");
}

/// The type II class H + Z2c of a row.
inline ClassLabel row_label(TableRow r, int m) {
  switch (r) {
    case TableRow::Cyclic: return labels::with_center(labels::z_sub(m));
    case TableRow::Dihedral: return labels::with_center(labels::d_sub(m));
    case TableRow::Tetrahedral: return labels::with_center(labels::tetrahedral());
    case TableRow::Octahedral: return labels::with_center(labels::octahedral());
    case TableRow::Icosahedral: return labels::with_center(labels::icosahedral());
    case TableRow::SO2: return labels::with_center(labels::so2());
    case TableRow::O2: return labels::with_center(labels::o2());
  }
  throw std::logic_error("bad row");
}

/// Z(n): Z_2 for even n, Z_2^- for odd n.
inline ClassLabel zee(int n) {
  return n % 2 == 0 ? labels::cyclic(2) : labels::cyclic_minus(1);
}

/// Gamma(m, n) by the parities of m and n.
inline ClassSet gamma(int m, int n) {
  const bool me = m % 2 == 0;
  const bool ne = n % 2 == 0;
  if (me && ne) return {labels::dihedral(2), labels::dihedral_z(2)};
  if (me) return {labels::dihedral_z(2)};
  if (ne) return {labels::cyclic(2)};
  return {labels::cyclic_minus(1)};
}

/// The common part of the octahedral entries of the D_{2n}^d column.
inline ClassSet ell_octa(int n) {
  const int d3 = std::gcd(3, n);
  ClassSet out{labels::trivial(), labels::cyclic(2), labels::cyclic_minus(1),
               labels::z_sub(d3), labels::d_sub(d3), labels::dz_sub(d3)};
  out.merge(gamma(n, 3));
  return out;
}

namespace detail {

using namespace labels;

inline TableCell cyclic_minus_column(const ClipsHelperParams& p, TableRow row) {
  const int n = p.n, m = p.m, d = p.d;
  switch (row) {
    case TableRow::Cyclic:
      if ((m / d) % 2 == 0) return {{z_minus_sub(2 * d)}, "m/d even"};
      return {{z_sub(d)}, "m/d odd"};
    case TableRow::Dihedral:
      if ((m / d) % 2 == 0) return {{z_minus_sub(2 * d), zee(n)}, "m/d even"};
      return {{z_sub(d), zee(n)}, "m/d odd"};
    case TableRow::Octahedral:
      if (n % 4 == 0) return {{cyclic(2), z_sub(p.dn(3)), cyclic(4)}, "4|n"};
      if (n % 2 == 0) return {{cyclic(2), z_sub(p.dn(3)), z_minus_sub(4)}, "n even, 4!|n"};
      return {{cyclic_minus(1), z_sub(p.dn(3))}, "n odd"};
    case TableRow::Tetrahedral: return {{z_sub(p.dn(3)), zee(n)}, ""};
    case TableRow::Icosahedral: return {{zee(n), z_sub(p.dn(3)), z_sub(p.dn(5))}, ""};
    case TableRow::SO2: return {{z_minus_sub(2 * n)}, ""};
    case TableRow::O2: return {{zee(n), z_minus_sub(2 * n)}, ""};
  }
  throw std::logic_error("bad row");
}

inline TableCell dihedral_z_column(const ClipsHelperParams& p, TableRow row) {
  const int n = p.n, m = p.m, d = p.d;
  const int d2 = p.dn(2), d3 = p.dn(3), d4 = p.dn(4), d5 = p.dn(5);
  switch (row) {
    case TableRow::Cyclic:
      if (m % 2 != 0) return {{z_sub(d)}, "m odd"};
      return {{z_sub(d), cyclic_minus(1)}, "m even"};
    case TableRow::Dihedral:
      if (m % 2 == 0)
        return {{z_sub(d), cyclic_minus(1), dz_sub(d2), dz_sub(d)}, "m even"};
      return {{z_sub(d), cyclic_minus(1), z_sub(d2), dz_sub(d)}, "m odd"};
    case TableRow::Octahedral:
      return {{z_sub(d2), z_sub(d3), z_sub(d4), cyclic_minus(1), dz_sub(d2), dz_sub(d3),
               dz_sub(d4)},
              ""};
    case TableRow::Tetrahedral:
      return {{cyclic_minus(1), z_sub(d2), z_sub(d3), dz_sub(d2)}, ""};
    case TableRow::Icosahedral:
      return {{z_sub(d2), z_sub(d3), z_sub(d5), cyclic_minus(1), dz_sub(d2), dz_sub(d3),
               dz_sub(d5)},
              ""};
    case TableRow::SO2: return {{cyclic_minus(1), z_sub(n)}, ""};
    case TableRow::O2: return {{dz_sub(d2), dz_sub(n)}, ""};
  }
  throw std::logic_error("bad row");
}

inline TableCell dihedral_d_column(const ClipsHelperParams& p, TableRow row) {
  const int n = p.n, m = p.m, d = p.d;
  const int d3 = p.dn(3), d5 = p.dn(5);
  switch (row) {
    case TableRow::Cyclic:
      if ((m / d) % 2 == 0)
        return {{cyclic(2), cyclic_minus(1), z_minus_sub(2 * d)}, "m/d even"};
      if (m % 2 == 0) return {{cyclic(2), cyclic_minus(1), z_sub(d)}, "m even, m/d odd"};
      return {{z_sub(d)}, "m odd"};
    case TableRow::Dihedral: {
      TableCell c;
      if ((m / d) % 2 == 0) {
        c = {{cyclic(2), cyclic_minus(1), z_minus_sub(2 * d), dd_sub(2 * d)}, "m/d even"};
      } else if (m % 2 == 0) {
        c = {{cyclic(2), cyclic_minus(1), z_sub(d), d_sub(d), dz_sub(d)}, "m even, m/d odd"};
      } else {
        c = {{z_sub(d), d_sub(d), dz_sub(d)}, "m odd"};
      }
      c.result.merge(gamma(m, n));
      return c;
    }
    case TableRow::Octahedral: {
      TableCell c;
      if (n % 4 == 0) {
        c = {{dihedral(2), dihedral_z(2), cyclic(4), dihedral(4), dihedral_z(4)}, "4|n"};
      } else if (n % 2 == 0) {
        c = {{dihedral(2), dihedral_z(2), z_minus_sub(4), dd_sub(4)}, "n even, 4!|n"};
      } else {
        c = {{dihedral_z(2)}, "n odd"};
      }
      c.result.merge(ell_octa(n));
      return c;
    }
    case TableRow::Tetrahedral: {
      TableCell c{{cyclic(2), cyclic_minus(1), z_sub(d3)}, ""};
      c.result.merge(gamma(2, n));
      return c;
    }
    case TableRow::Icosahedral: {
      TableCell c{{cyclic(2), cyclic_minus(1), z_sub(d3), d_sub(d3), dz_sub(d3), z_sub(d5),
                   d_sub(d5), dz_sub(d5)},
                  ""};
      c.result.merge(gamma(2, n));
      c.result.merge(gamma(3, n));
      c.result.merge(gamma(5, n));
      return c;
    }
    case TableRow::SO2: return {{cyclic(2), cyclic_minus(1), z_minus_sub(2 * n)}, ""};
    case TableRow::O2:
      return {{zee(n), d_sub(p.dn(2)), dihedral_z(2), dd_sub(2 * n)}, ""};
  }
  throw std::logic_error("bad row");
}

inline TableCell octahedral_minus_column(const ClipsHelperParams& p, TableRow row) {
  const int m = p.m;
  const int e2 = p.dm(2), e3 = p.dm(3);
  switch (row) {
    case TableRow::Cyclic:
      if (m % 4 == 0) return {{z_sub(e3), cyclic_minus(1), z_minus_sub(4)}, "4|m"};
      return {{z_sub(e2), z_sub(e3), z_minus_sub(e2)}, "4!|m"};
    case TableRow::Dihedral:
      if (m % 4 == 0)
        return {{cyclic(2), z_sub(e3), cyclic_minus(1), z_minus_sub(4), dz_sub(e3),
                 dihedral_z(2), dd_sub(4)},
                "4|m"};
      if (m % 2 == 0)
        return {{cyclic(2), z_sub(e3), cyclic_minus(1), dihedral(2), dz_sub(e3),
                 dihedral_z(2)},
                "m even, 4!|m"};
      return {{cyclic(2), z_sub(e3), cyclic_minus(1), dz_sub(e3)}, "m odd"};
    case TableRow::Octahedral:
      return {{cyclic(2), cyclic(3), cyclic_minus(1), z_minus_sub(4), dihedral_z(2),
               dihedral_z(3), dd_sub(4), octahedral_minus()},
              ""};
    case TableRow::Tetrahedral:
      return {{cyclic(2), cyclic(3), cyclic_minus(1), dihedral(2), dihedral_z(2),
               tetrahedral()},
              ""};
    case TableRow::Icosahedral:
      return {{cyclic(2), cyclic_minus(1), dihedral(2), dihedral_z(2), cyclic(3),
               dihedral_z(3), tetrahedral()},
              ""};
    case TableRow::SO2: return {{cyclic(3), cyclic_minus(1), z_minus_sub(4)}, ""};
    case TableRow::O2: return {{cyclic_minus(1), dihedral_z(3), dd_sub(4)}, ""};
  }
  throw std::logic_error("bad row");
}

inline TableCell o2_minus_column(const ClipsHelperParams& p, TableRow row) {
  const int m = p.m;
  switch (row) {
    case TableRow::Cyclic: return {{z_sub(m), z_minus_sub(p.dm(2))}, ""};
    case TableRow::Dihedral:
      if (m % 2 == 0)
        return {{z_sub(m), cyclic_minus(1), dihedral_z(2), dz_sub(m)}, "m even"};
      return {{z_sub(m), cyclic(2), cyclic_minus(1), dz_sub(m)}, "m odd"};
    case TableRow::Octahedral:
      return {{cyclic(2), cyclic(3), cyclic(4), cyclic_minus(1), dihedral_z(2),
               dihedral_z(3), dihedral_z(4)},
              ""};
    case TableRow::Tetrahedral:
      return {{cyclic(2), cyclic(3), cyclic_minus(1), dihedral_z(2)}, ""};
    case TableRow::Icosahedral:
      return {{cyclic(2), cyclic(3), cyclic(5), cyclic_minus(1), dihedral_z(2),
               dihedral_z(3), dihedral_z(5)},
              ""};
    case TableRow::SO2: return {{cyclic_minus(1), so2()}, ""};
    case TableRow::O2: return {{dihedral_z(2), o2_minus()}, ""};
  }
  throw std::logic_error("bad row");
}

}  // namespace detail

/// Evaluates one cell. Parameters outside the tabulated ranges throw
/// std::invalid_argument; the D_{2n}^d formula is accepted at n = 1.
inline TableCell table_cell(TableColumn column, int n, TableRow row, int m) {
  if (!column_has_parameter(column)) n = 0;
  if (!row_has_parameter(row)) m = 0;
  const int min_n = column == TableColumn::DihedralZ ? 2 : 1;
  if (column_has_parameter(column) && n < min_n)
    throw std::invalid_argument("table_cell: column parameter " + std::to_string(n) +
                                " out of range");
  const int min_m = row == TableRow::Dihedral ? 2 : 1;
  if (row_has_parameter(row) && m < min_m)
    throw std::invalid_argument("table_cell: row parameter " + std::to_string(m) +
                                " out of range");

  ClipsHelperParams p{n, m, std::gcd(m, n)};
  TableCell cell;
  switch (column) {
    case TableColumn::CyclicMinus: cell = detail::cyclic_minus_column(p, row); break;
    case TableColumn::DihedralZ: cell = detail::dihedral_z_column(p, row); break;
    case TableColumn::DihedralD: cell = detail::dihedral_d_column(p, row); break;
    case TableColumn::OctahedralMinus: cell = detail::octahedral_minus_column(p, row); break;
    case TableColumn::O2Minus: cell = detail::o2_minus_column(p, row); break;
  }
  cell.result.insert(labels::trivial());
  return cell;
}

/// Locates a canonical type III label in the column headings.
inline std::pair<TableColumn, int> column_of(const ClassLabel& raw) {
  const ClassLabel c = canonicalize(raw);
  switch (c.family) {
    case Family::CyclicMinus: return {TableColumn::CyclicMinus, c.n};
    case Family::DihedralZ: return {TableColumn::DihedralZ, c.n};
    case Family::DihedralD: return {TableColumn::DihedralD, c.n};
    case Family::OctahedralMinus: return {TableColumn::OctahedralMinus, 0};
    case Family::O2Minus: return {TableColumn::O2Minus, 0};
    default: throw std::invalid_argument("column_of: " + format_label(c) + " is not type III");
  }
}

/// Locates the inner group of a canonical type II label in the row headings.
inline std::pair<TableRow, int> row_of(const ClassLabel& raw) {
  const ClassLabel c = canonicalize(raw);
  if (!c.central) throw std::invalid_argument("row_of: " + format_label(c) + " is not type II");
  switch (c.family) {
    case Family::Trivial: return {TableRow::Cyclic, 1};
    case Family::Cyclic: return {TableRow::Cyclic, c.n};
    case Family::Dihedral: return {TableRow::Dihedral, c.n};
    case Family::Tetrahedral: return {TableRow::Tetrahedral, 0};
    case Family::Octahedral: return {TableRow::Octahedral, 0};
    case Family::Icosahedral: return {TableRow::Icosahedral, 0};
    case Family::SO2: return {TableRow::SO2, 0};
    case Family::O2: return {TableRow::O2, 0};
    default:
      throw std::invalid_argument("row_of: no table row for " + format_label(c));
  }
}

/// clips of a type II class with a type III class, via the closed forms.
inline ClassSet clips_type2_type3(const ClassLabel& type2, const ClassLabel& type3) {
  const auto [row, m] = row_of(type2);
  const auto [column, n] = column_of(type3);
  return table_cell(column, n, row, m).result;
}

}  // namespace o3clips

#endif  // O3CLIPS_CLIPS_TABLES_HPP_
