// Conjugacy classes of closed O(3) subgroups: labels, canonical forms,
// orders, ordering and the ASCII label grammar.
//
//   label := "1" | "Z" INT | "D" INT | "T" | "O" | "I"
//          | "SO(2)" | "O(2)" | "SO(3)" | "O(3)"
//          | "Z" INT "^-" | "D" INT "^z" | "D" INT "^d" | "O^-" | "O(2)^-"
//          | base "+Z2c"
//
// Subscripts are printed as group orders: "Z6^-" is Z_6^- (order 6) and
// "D6^d" is D_6^d (order 12).

#ifndef O3CLIPS_CLASS_LABEL_HPP_
#define O3CLIPS_CLASS_LABEL_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace o3clips {

enum class Family : std::uint8_t {
  // type I (and the inner group of type II)
  Trivial,
  Cyclic,       // Z_n
  Dihedral,     // D_n
  Tetrahedral,  // T
  Octahedral,   // O
  Icosahedral,  // I
  SO2,
  O2,
  SO3,
  // type III
  CyclicMinus,      // Z_{2n}^-, order 2n
  DihedralZ,        // D_n^z, order 2n
  DihedralD,        // D_{2n}^d, order 4n
  OctahedralMinus,  // O^-
  O2Minus,          // O(2)^-
};

enum class Kind : std::uint8_t { TypeI, TypeII, TypeIII };

/// Thrown for text that is not a label, or a label that denotes no group.
/// `position()` is the 0-based offset into the parsed text (0 for labels
/// built programmatically).
class LabelError : public std::invalid_argument {
public:
  LabelError(const std::string& what, std::size_t position = 0)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

constexpr bool is_type_three_family(Family f) {
  return f >= Family::CyclicMinus;
}

constexpr bool has_parameter(Family f) {
  return f == Family::Cyclic || f == Family::Dihedral ||
         f == Family::CyclicMinus || f == Family::DihedralZ ||
         f == Family::DihedralD;
}

constexpr bool is_infinite_family(Family f) {
  return f == Family::SO2 || f == Family::O2 || f == Family::SO3 ||
         f == Family::O2Minus;
}

/// A conjugacy class of a closed O(3) subgroup. `central` marks the type II
/// companion H + Z2c of a type I group H. The parameter `n` is only
/// meaningful for the families where `has_parameter` holds and is 0
/// otherwise.
struct ClassLabel {
  Family family = Family::Trivial;
  int n = 0;
  bool central = false;

  constexpr Kind kind() const {
    if (is_type_three_family(family)) return Kind::TypeIII;
    return central ? Kind::TypeII : Kind::TypeI;
  }
  constexpr bool finite() const { return !is_infinite_family(family); }

  friend constexpr bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

// Factories. They do not canonicalize; see canonicalize().
namespace labels {

constexpr ClassLabel trivial() { return {Family::Trivial, 0, false}; }
constexpr ClassLabel cyclic(int n) { return {Family::Cyclic, n, false}; }
constexpr ClassLabel dihedral(int n) { return {Family::Dihedral, n, false}; }
constexpr ClassLabel tetrahedral() { return {Family::Tetrahedral, 0, false}; }
constexpr ClassLabel octahedral() { return {Family::Octahedral, 0, false}; }
constexpr ClassLabel icosahedral() { return {Family::Icosahedral, 0, false}; }
constexpr ClassLabel so2() { return {Family::SO2, 0, false}; }
constexpr ClassLabel o2() { return {Family::O2, 0, false}; }
constexpr ClassLabel so3() { return {Family::SO3, 0, false}; }
constexpr ClassLabel o3() { return {Family::SO3, 0, true}; }
/// Z_{2n}^-.
constexpr ClassLabel cyclic_minus(int n) { return {Family::CyclicMinus, n, false}; }
constexpr ClassLabel dihedral_z(int n) { return {Family::DihedralZ, n, false}; }
/// D_{2n}^d.
constexpr ClassLabel dihedral_d(int n) { return {Family::DihedralD, n, false}; }
constexpr ClassLabel octahedral_minus() { return {Family::OctahedralMinus, 0, false}; }
constexpr ClassLabel o2_minus() { return {Family::O2Minus, 0, false}; }

constexpr ClassLabel with_center(ClassLabel inner) {
  inner.central = true;
  return inner;
}

}  // namespace labels

namespace detail {

inline std::string family_debug_name(Family f) {
  switch (f) {
    case Family::Trivial: return "Trivial";
    case Family::Cyclic: return "Cyclic";
    case Family::Dihedral: return "Dihedral";
    case Family::Tetrahedral: return "Tetrahedral";
    case Family::Octahedral: return "Octahedral";
    case Family::Icosahedral: return "Icosahedral";
    case Family::SO2: return "SO2";
    case Family::O2: return "O2";
    case Family::SO3: return "SO3";
    case Family::CyclicMinus: return "CyclicMinus";
    case Family::DihedralZ: return "DihedralZ";
    case Family::DihedralD: return "DihedralD";
    case Family::OctahedralMinus: return "OctahedralMinus";
    case Family::O2Minus: return "O2Minus";
  }
  return "?";
}

}  // namespace detail

/// Returns the unique canonical representative of the class of `raw`.
///
/// Applies Z_1 -> 1, D_1 -> Z_2, D_1^z -> Z_2^-, D_2^d -> D_2^z and drops
/// the parameter of parameterless families. Throws LabelError for labels
/// that denote no group (zero or negative parameters, type III with
/// `central`).
inline ClassLabel canonicalize(ClassLabel raw) {
  using labels::cyclic;
  if (raw.central && is_type_three_family(raw.family))
    throw LabelError("type III class " + detail::family_debug_name(raw.family) +
                     " has no Z2c companion");
  if (!has_parameter(raw.family)) {
    raw.n = 0;
    return raw;
  }
  if (raw.n < 1)
    throw LabelError(detail::family_debug_name(raw.family) +
                     " needs a parameter >= 1, got " + std::to_string(raw.n));
  ClassLabel out = raw;
  switch (raw.family) {
    case Family::Cyclic:
      if (raw.n == 1) out = labels::trivial();
      break;
    case Family::Dihedral:
      if (raw.n == 1) out = cyclic(2);
      break;
    case Family::DihedralZ:
      if (raw.n == 1) out = labels::cyclic_minus(1);
      break;
    case Family::DihedralD:
      if (raw.n == 1) out = labels::dihedral_z(2);
      break;
    default:
      break;
  }
  out.central = raw.central;
  return out;
}

inline bool is_canonical(const ClassLabel& label) {
  try {
    return canonicalize(label) == label;
  } catch (const LabelError&) {
    return false;
  }
}

// Constructors taking the printed subscript, as the clips tables write
// them (Z_{2d}^-, D_{d_2}^z, ...). All of them return canonical labels.
namespace labels {

inline ClassLabel z_sub(int k) { return canonicalize(cyclic(k)); }
inline ClassLabel d_sub(int k) { return canonicalize(dihedral(k)); }
inline ClassLabel dz_sub(int k) { return canonicalize(dihedral_z(k)); }

/// Z_k^- for a printed subscript k. The formal Z_1^- is the trivial class:
/// the improper coset it would add is empty.
inline ClassLabel z_minus_sub(int k) {
  if (k == 1) return trivial();
  if (k < 1 || k % 2 != 0)
    throw LabelError("Z" + std::to_string(k) + "^- needs an even subscript");
  return cyclic_minus(k / 2);
}

/// D_k^d for a printed subscript k (k even).
inline ClassLabel dd_sub(int k) {
  if (k < 2 || k % 2 != 0)
    throw LabelError("D" + std::to_string(k) + "^d needs an even subscript");
  return canonicalize(dihedral_d(k / 2));
}

}  // namespace labels

/// Group order; std::nullopt for the infinite groups SO(2), O(2), O(2)^-,
/// SO(3) and their type II companions.
inline std::optional<int> order_of(const ClassLabel& label) {
  int base = 0;
  switch (label.family) {
    case Family::Trivial: base = 1; break;
    case Family::Cyclic: base = label.n; break;
    case Family::Dihedral: base = 2 * label.n; break;
    case Family::Tetrahedral: base = 12; break;
    case Family::Octahedral: base = 24; break;
    case Family::Icosahedral: base = 60; break;
    case Family::CyclicMinus: base = 2 * label.n; break;
    case Family::DihedralZ: base = 2 * label.n; break;
    case Family::DihedralD: base = 4 * label.n; break;
    case Family::OctahedralMinus: base = 24; break;
    case Family::SO2:
    case Family::O2:
    case Family::SO3:
    case Family::O2Minus:
      return std::nullopt;
  }
  return label.central ? 2 * base : base;
}

/// The inner type I group of a type II label, or the label itself.
constexpr ClassLabel inner_of(ClassLabel label) {
  label.central = false;
  return label;
}

/// Gamma_+ = Gamma intersected with SO(3), as a class.
inline ClassLabel proper_part(const ClassLabel& label) {
  switch (label.family) {
    case Family::CyclicMinus: return labels::z_sub(label.n);
    case Family::DihedralZ: return labels::cyclic(label.n);
    case Family::DihedralD: return labels::d_sub(label.n);
    case Family::OctahedralMinus: return labels::tetrahedral();
    case Family::O2Minus: return labels::so2();
    default: return inner_of(label);
  }
}

// ---------------------------------------------------------------------------
// Canonical ordering

namespace detail {

inline int family_rank(Family f) {
  switch (f) {
    case Family::Trivial: return 0;
    case Family::Cyclic: return 1;
    case Family::CyclicMinus: return 2;
    case Family::Dihedral: return 3;
    case Family::DihedralZ: return 4;
    case Family::DihedralD: return 5;
    case Family::Tetrahedral: return 6;
    case Family::Octahedral: return 7;
    case Family::OctahedralMinus: return 8;
    case Family::Icosahedral: return 9;
    default: return 10;
  }
}

// Position of an infinite class in the fixed tail of the order.
inline int infinite_slot(const ClassLabel& l) {
  if (l.family == Family::SO2) return l.central ? 2 : 0;
  if (l.family == Family::O2) return l.central ? 3 : 1;
  if (l.family == Family::O2Minus) return 4;
  return l.central ? 6 : 5;  // SO(3), O(3)
}

inline auto sort_key(const ClassLabel& l) {
  if (!l.finite()) return std::make_tuple(1, infinite_slot(l), 0, 0);
  int rank = family_rank(l.family) + (l.central ? 10 : 0);
  return std::make_tuple(0, *order_of(l), rank, l.n);
}

}  // namespace detail

/// Strict total order on canonical labels: finite classes by (order,
/// family rank, parameter), then SO(2), O(2), SO(2)+Z2c, O(2)+Z2c,
/// O(2)^-, SO(3), O(3).
inline std::strong_ordering canonical_compare(const ClassLabel& a,
                                              const ClassLabel& b) {
  return detail::sort_key(a) <=> detail::sort_key(b);
}

struct CanonicalLess {
  bool operator()(const ClassLabel& a, const ClassLabel& b) const {
    return canonical_compare(a, b) < 0;
  }
};

// ---------------------------------------------------------------------------
// Formatting and parsing

inline std::string format_label(const ClassLabel& label) {
  std::string base;
  switch (label.family) {
    case Family::Trivial: base = "1"; break;
    case Family::Cyclic: base = "Z" + std::to_string(label.n); break;
    case Family::Dihedral: base = "D" + std::to_string(label.n); break;
    case Family::Tetrahedral: base = "T"; break;
    case Family::Octahedral: base = "O"; break;
    case Family::Icosahedral: base = "I"; break;
    case Family::SO2: base = "SO(2)"; break;
    case Family::O2: base = "O(2)"; break;
    case Family::SO3:
      return label.central ? "O(3)" : "SO(3)";
    case Family::CyclicMinus: return "Z" + std::to_string(2 * label.n) + "^-";
    case Family::DihedralZ: return "D" + std::to_string(label.n) + "^z";
    case Family::DihedralD: return "D" + std::to_string(2 * label.n) + "^d";
    case Family::OctahedralMinus: return "O^-";
    case Family::O2Minus: return "O(2)^-";
  }
  return label.central ? base + "+Z2c" : base;
}

inline std::ostream& operator<<(std::ostream& os, const ClassLabel& label) {
  return os << format_label(label);
}

namespace detail {

class LabelParser {
public:
  explicit LabelParser(std::string_view text) : text_(text) {}

  ClassLabel parse() {
    if (text_.empty()) fail("empty label", 0);
    ClassLabel raw = parse_base();
    const std::size_t suffix_at = pos_;
    if (consume("+Z2c")) {
      if (raw.kind() == Kind::TypeIII)
        fail("type III class cannot take +Z2c", suffix_at);
      if (raw.family == Family::SO3)
        fail("write O(3) instead of SO(3)+Z2c", suffix_at);
      raw.central = true;
    }
    if (pos_ != text_.size()) fail("unexpected trailing characters", pos_);
    return raw;
  }

private:
  [[noreturn]] void fail(const std::string& why, std::size_t at) const {
    throw LabelError("cannot parse label '" + std::string(text_) + "' at " +
                         std::to_string(at) + ": " + why,
                     at);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  int parse_int() {
    const std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("integer too large", start);
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer", start);
    if (value < 1) fail("integer must be >= 1", start);
    return static_cast<int>(value);
  }

  ClassLabel semantic(ClassLabel (*make)(int), int k, std::size_t at) const {
    try {
      return make(k);
    } catch (const LabelError& e) {
      throw LabelError(std::string(e.what()), at);
    }
  }

  ClassLabel parse_base() {
    if (consume("SO(2)")) return labels::so2();
    if (consume("SO(3)")) return labels::so3();
    if (consume("O(3)")) {
      if (pos_ < text_.size() && text_[pos_] == '+')
        fail("O(3) already contains Z2c", pos_);
      return labels::o3();
    }
    if (consume("O(2)^-")) return labels::o2_minus();
    if (consume("O(2)")) return labels::o2();
    if (consume("O^-")) return labels::octahedral_minus();
    if (consume("1")) return labels::trivial();
    if (consume("T")) return labels::tetrahedral();
    if (consume("I")) return labels::icosahedral();
    if (consume("O")) return labels::octahedral();
    const std::size_t at = pos_;
    if (consume("Z")) {
      const int k = parse_int();
      if (consume("^-")) return semantic(labels::z_minus_sub, k, at);
      return labels::z_sub(k);
    }
    if (consume("D")) {
      const int k = parse_int();
      if (consume("^z")) return labels::dz_sub(k);
      if (consume("^d")) return semantic(labels::dd_sub, k, at);
      return labels::d_sub(k);
    }
    fail("unknown class symbol", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the ASCII grammar and returns the canonical label.
inline ClassLabel parse_label(std::string_view text) {
  return canonicalize(detail::LabelParser(text).parse());
}

// ---------------------------------------------------------------------------
// ClassSet

/// Duplicate-free set of canonical labels, iterated in canonical order.
class ClassSet {
public:
  using const_iterator = std::vector<ClassLabel>::const_iterator;

  ClassSet() = default;
  ClassSet(std::initializer_list<ClassLabel> members) {
    for (const auto& m : members) insert(m);
  }

  /// Canonicalizes `label` before inserting. Returns false if present.
  bool insert(const ClassLabel& label) {
    const ClassLabel c = canonicalize(label);
    auto it = std::lower_bound(members_.begin(), members_.end(), c, CanonicalLess{});
    if (it != members_.end() && *it == c) return false;
    members_.insert(it, c);
    return true;
  }

  void merge(const ClassSet& other) {
    for (const auto& m : other) insert(m);
  }

  bool contains(const ClassLabel& label) const {
    const ClassLabel c = canonicalize(label);
    return std::binary_search(members_.begin(), members_.end(), c, CanonicalLess{});
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  const std::vector<ClassLabel>& members() const { return members_; }

  friend bool operator==(const ClassSet&, const ClassSet&) = default;

private:
  std::vector<ClassLabel> members_;
};

/// Space separated canonical spellings, e.g. "1 Z2 Z2^-".
inline std::string format_set(const ClassSet& set) {
  std::string out;
  for (const auto& m : set) {
    if (!out.empty()) out += ' ';
    out += format_label(m);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const ClassSet& set) {
  return os << '{' << format_set(set) << '}';
}

/// Memberwise H -> H + Z2c of a set of type I classes.
inline ClassSet with_center(const ClassSet& set) {
  ClassSet out;
  for (const auto& m : set) out.insert(labels::with_center(m));
  return out;
}

}  // namespace o3clips

#endif  // O3CLIPS_CLASS_LABEL_HPP_
