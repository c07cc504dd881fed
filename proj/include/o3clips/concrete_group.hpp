// Finite closed O(3) subgroups as explicit sets of orthogonal matrices:
// generation, characteristic axes, intersection and class recognition.
// Infinite axial groups are represented by membership predicates.

#ifndef O3CLIPS_CONCRETE_GROUP_HPP_
#define O3CLIPS_CONCRETE_GROUP_HPP_

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "class_label.hpp"
#include "rotation.hpp"

namespace o3clips {

/// Largest group order close_group will generate.
inline constexpr int kOrderCap = 256;

inline constexpr double kGoldenRatio = std::numbers::phi;

class GroupOrderError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class RecognitionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a finite-only operation receives an infinite class.
class InfiniteClassError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A finite set of O(3) elements, usually a group.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::vector<RotationElement> elements)
      : elements_(std::move(elements)) {}

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<RotationElement>& elements() const { return elements_; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  bool contains(const RotationElement& x, double eps = kEpsEqual) const {
    for (const auto& y : elements_)
      if (y.approx_equal(x, eps)) return true;
    return false;
  }

  /// Adds x unless an equal element is present.
  bool insert(const RotationElement& x) {
    if (contains(x)) return false;
    elements_.push_back(x);
    return true;
  }

  ElementSet conjugated_by(const RotationElement& g) const {
    std::vector<RotationElement> out;
    out.reserve(elements_.size());
    for (const auto& x : elements_) out.push_back(x.conjugated_by(g));
    return ElementSet(std::move(out));
  }

  /// Identity, closure under product and inverse, by exhaustive check.
  bool is_group() const {
    if (!contains(RotationElement::identity())) return false;
    for (const auto& x : elements_) {
      if (!contains(x.inverse())) return false;
      for (const auto& y : elements_)
        if (!contains(x * y)) return false;
    }
    return true;
  }

  /// Smallest max-norm distance between two distinct members.
  double min_separation() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < elements_.size(); ++i)
      for (std::size_t j = i + 1; j < elements_.size(); ++j)
        best = std::min(best, max_distance(elements_[i].matrix(), elements_[j].matrix()));
    return best;
  }

private:
  std::vector<RotationElement> elements_;
};

/// Fixed-point closure of the generators under multiplication.
/// Throws GroupOrderError once more than `cap` elements appear.
inline ElementSet close_group(const std::vector<RotationElement>& generators,
                              int cap = kOrderCap) {
  ElementSet group(std::vector<RotationElement>{RotationElement::identity()});
  std::vector<RotationElement> frontier{RotationElement::identity()};
  while (!frontier.empty()) {
    std::vector<RotationElement> next;
    for (const auto& x : frontier) {
      for (const auto& g : generators) {
        const RotationElement y = x * g;
        if (group.insert(y)) {
          if (static_cast<int>(group.size()) > cap)
            throw GroupOrderError("group generation exceeded " + std::to_string(cap) +
                                  " elements");
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return group;
}

inline ElementSet intersect(const ElementSet& a, const ElementSet& b) {
  std::vector<RotationElement> out;
  for (const auto& x : a)
    if (b.contains(x)) out.push_back(x);
  return ElementSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Reference generators

namespace detail {

inline void require_finite(const ClassLabel& label, const char* what) {
  if (!label.finite())
    throw InfiniteClassError(std::string(what) + ": " + format_label(label) +
                             " is infinite; use the symbolic clips rules "
                             "(clips_infinite) for infinite classes");
}

inline RotationElement half_turn(const Vec3& axis) {
  return rotation_about(axis, std::numbers::pi);
}

/// Generators of a finite type I group in the reference orientation.
inline std::vector<RotationElement> type_one_generators(const ClassLabel& l) {
  constexpr double pi = std::numbers::pi;
  const Vec3 diag{{1.0, 1.0, 1.0}};
  switch (l.family) {
    case Family::Trivial: return {};
    case Family::Cyclic: return {rodrigues(e3, 2.0 * pi / l.n)};
    case Family::Dihedral: return {rodrigues(e3, 2.0 * pi / l.n), half_turn(e1)};
    case Family::Tetrahedral:
      return {half_turn(e3), half_turn(e1), rotation_about(diag, 2.0 * pi / 3.0)};
    case Family::Octahedral:
      return {rodrigues(e3, pi / 2.0), half_turn(e1),
              rotation_about(diag, 2.0 * pi / 3.0)};
    case Family::Icosahedral:
      return {half_turn(e3), rotation_about(diag, 2.0 * pi / 3.0),
              rotation_about(Vec3{{1.0, 0.0, kGoldenRatio}}, 2.0 * pi / 5.0)};
    default:
      throw std::logic_error("not a finite type I family");
  }
}

/// Gamma_+ and the coset representative gamma of a finite type III class,
/// Gamma = Gamma_+ u (-gamma Gamma_+).
struct TypeThreeConstruction {
  ClassLabel proper;
  RotationElement gamma;
};

inline TypeThreeConstruction type_three_construction(const ClassLabel& l) {
  constexpr double pi = std::numbers::pi;
  switch (l.family) {
    case Family::CyclicMinus:
      return {labels::z_sub(l.n), rodrigues(e3, pi / l.n)};
    case Family::DihedralZ:
      return {labels::cyclic(l.n), half_turn(e1)};
    case Family::DihedralD:
      return {labels::d_sub(l.n), rodrigues(e3, pi / l.n)};
    case Family::OctahedralMinus:
      return {labels::tetrahedral(), rodrigues(e3, pi / 2.0)};
    default:
      throw std::logic_error("not a finite type III family");
  }
}

}  // namespace detail

/// The generators listed for each finite class, reference orientation.
/// Type II adds -Id to the inner generators.
inline std::vector<RotationElement> reference_generators(const ClassLabel& raw) {
  constexpr double pi = std::numbers::pi;
  const ClassLabel label = canonicalize(raw);
  detail::require_finite(label, "reference_generators");
  switch (label.kind()) {
    case Kind::TypeI: return detail::type_one_generators(label);
    case Kind::TypeII: {
      auto gens = detail::type_one_generators(inner_of(label));
      gens.push_back(RotationElement::minus_identity());
      return gens;
    }
    case Kind::TypeIII: break;
  }
  switch (label.family) {
    case Family::CyclicMinus: return {-rodrigues(e3, pi / label.n)};
    case Family::DihedralD: return {-rodrigues(e3, pi / label.n), detail::half_turn(e1)};
    case Family::DihedralZ: return {rodrigues(e3, 2.0 * pi / label.n), -detail::half_turn(e1)};
    case Family::OctahedralMinus:
      return {-rodrigues(e3, pi / 2.0), -detail::half_turn(Vec3{{0.0, 1.0, -1.0}})};
    default: throw std::logic_error("unhandled type III family");
  }
}

/// Materializes a finite class, conjugated by `orientation`.
/// Type III groups are built as Gamma_+ u (-gamma Gamma_+).
inline ElementSet materialize(const ClassLabel& raw,
                              const RotationElement& orientation = RotationElement::identity()) {
  const ClassLabel label = canonicalize(raw);
  detail::require_finite(label, "materialize");
  if (orientation.determinant() != 1)
    throw std::invalid_argument("materialize: orientation must be a proper rotation");
  ElementSet group;
  if (label.kind() == Kind::TypeIII) {
    const auto construction = detail::type_three_construction(label);
    const ElementSet proper = close_group(detail::type_one_generators(construction.proper));
    std::vector<RotationElement> all = proper.elements();
    for (const auto& h : proper) all.push_back(-(construction.gamma * h));
    group = ElementSet(std::move(all));
  } else {
    group = close_group(reference_generators(label));
  }
  return group.conjugated_by(orientation);
}

// ---------------------------------------------------------------------------
// Axis catalogs

struct TaggedAxis {
  Vec3 axis;   // unit vector
  int order;   // rotation order about the axis in the proper companion group
};

/// Characteristic axes of a finite class in the reference orientation.
/// Cyclic/dihedral families: primary = e3, secondary = the b_i. T, O, O^-:
/// primary = e_i, secondary = s_{t_j}, ternary = a_{c_k}. I: primary =
/// five-fold u_i, secondary = three-fold v_j, ternary = two-fold w_k.
struct AxisCatalog {
  std::vector<TaggedAxis> primary_axes;
  std::vector<TaggedAxis> secondary_axes;
  std::vector<TaggedAxis> ternary_axes;

  std::vector<TaggedAxis> all() const {
    std::vector<TaggedAxis> out = primary_axes;
    out.insert(out.end(), secondary_axes.begin(), secondary_axes.end());
    out.insert(out.end(), ternary_axes.begin(), ternary_axes.end());
    return out;
  }
  std::size_t size() const {
    return primary_axes.size() + secondary_axes.size() + ternary_axes.size();
  }
};

namespace detail {

// b_1 = e1, b_k = R(e3, step) b_{k-1}.
inline std::vector<TaggedAxis> secondary_axes(int count, double step) {
  std::vector<TaggedAxis> out;
  for (int k = 0; k < count; ++k)
    out.push_back({Vec3{{std::cos(k * step), std::sin(k * step), 0.0}}, 2});
  return out;
}

inline std::vector<TaggedAxis> tagged(std::initializer_list<Vec3> vs, int order) {
  std::vector<TaggedAxis> out;
  for (const auto& v : vs) out.push_back({normalized(v), order});
  return out;
}

inline AxisCatalog cubic_catalog(int coordinate_axis_order, bool with_face_diagonals) {
  AxisCatalog c;
  c.primary_axes = tagged({e1, e2, e3}, coordinate_axis_order);
  c.secondary_axes = tagged({Vec3{{1, 1, 1}}, Vec3{{1, -1, -1}}, Vec3{{-1, 1, -1}},
                             Vec3{{-1, -1, 1}}},
                            3);
  if (with_face_diagonals)
    c.ternary_axes = tagged({Vec3{{1, 1, 0}}, Vec3{{1, -1, 0}}, Vec3{{1, 0, 1}},
                             Vec3{{1, 0, -1}}, Vec3{{0, 1, 1}}, Vec3{{0, 1, -1}}},
                            2);
  return c;
}

// The printed icosahedral axis lists describe the group conjugated by
// R(e3, pi/2); they are rotated back into the generator orientation.
inline AxisCatalog icosahedral_catalog() {
  const double p = kGoldenRatio;
  const double q = 1.0 / kGoldenRatio;
  const RotationElement back = rodrigues(e3, -std::numbers::pi / 2.0);
  auto rotate = [&](std::vector<TaggedAxis> axes) {
    for (auto& a : axes) a.axis = back.matrix() * a.axis;
    return axes;
  };
  AxisCatalog c;
  c.primary_axes = rotate(tagged({Vec3{{1 + 3 * p, 0, 2 + p}}, Vec3{{2 + p, 1 + 3 * p, 0}},
                                  Vec3{{0, 2 + p, -(1 + 3 * p)}}, Vec3{{0, -(2 + p), -(1 + 3 * p)}},
                                  Vec3{{1 + 3 * p, 0, -(2 + p)}}, Vec3{{2 + p, -(1 + 3 * p), 0}}},
                                 5));
  c.secondary_axes = rotate(tagged({Vec3{{1, 1, 1}}, Vec3{{p, q, 0}}, Vec3{{1, 1, -1}},
                                    Vec3{{0, p, -q}}, Vec3{{0, p, q}}, Vec3{{-1, 1, 1}},
                                    Vec3{{-p, q, 0}}, Vec3{{-1, 1, -1}}, Vec3{{-q, 0, -p}},
                                    Vec3{{q, 0, -p}}},
                                   3));
  c.ternary_axes = rotate(tagged(
      {Vec3{{1, p + 1, 1 + q}}, Vec3{{1 + q, 1, p + 1}}, Vec3{{p + 1, 1 + q, 1}},
       Vec3{{p, 0, 0}}, Vec3{{p + 1, 1 + q, -1}}, Vec3{{p + 1, -(1 + q), 1}},
       Vec3{{1 + q, -1, p + 1}}, Vec3{{p + 1, -(1 + q), -1}}, Vec3{{1, p + 1, -(1 + q)}},
       Vec3{{0, p, 0}}, Vec3{{-1, p + 1, 1 + q}}, Vec3{{0, 0, p}},
       Vec3{{-(1 + q), 1, p + 1}}, Vec3{{-1, p + 1, -(1 + q)}}, Vec3{{-(1 + q), -1, p + 1}}},
      2));
  return c;
}

}  // namespace detail

inline AxisCatalog axis_catalog(const ClassLabel& raw) {
  constexpr double pi = std::numbers::pi;
  const ClassLabel label = canonicalize(raw);
  detail::require_finite(label, "axis_catalog");
  AxisCatalog c;
  switch (label.family) {
    case Family::Trivial: break;
    case Family::Cyclic: c.primary_axes = {{e3, label.n}}; break;
    case Family::Dihedral:
      c.primary_axes = {{e3, label.n}};
      c.secondary_axes = detail::secondary_axes(label.n, pi / label.n);
      if (label.n == 2) c.primary_axes[0].order = 2;
      break;
    case Family::CyclicMinus: c.primary_axes = {{e3, 2 * label.n}}; break;
    case Family::DihedralZ:
      c.primary_axes = {{e3, label.n}};
      c.secondary_axes = detail::secondary_axes(label.n, pi / label.n);
      break;
    case Family::DihedralD:
      // b_{2k+1} carry proper half turns, b_{2k} improper ones.
      c.primary_axes = {{e3, 2 * label.n}};
      c.secondary_axes = detail::secondary_axes(2 * label.n, pi / (2 * label.n));
      break;
    case Family::Tetrahedral: c = detail::cubic_catalog(2, false); break;
    case Family::Octahedral:
    case Family::OctahedralMinus: c = detail::cubic_catalog(4, true); break;
    case Family::Icosahedral: c = detail::icosahedral_catalog(); break;
    default: break;
  }
  return c;
}

/// Distinct axis lines of the non-trivial elements (excluding +-Id), each
/// tagged with the order of the rotation subgroup of the proper companion
/// group about that line. Derived from the elements only.
inline std::vector<TaggedAxis> axis_lines(const ElementSet& set) {
  std::vector<TaggedAxis> lines;
  for (const auto& x : set) {
    const AxisAngle aa = axis_angle(x);
    if (aa.angle < 1e-7) continue;  // +-Id
    const Vec3 line = line_representative(aa.axis);
    bool found = false;
    for (auto& l : lines) {
      if (same_line(l.axis, line)) {
        ++l.order;
        found = true;
        break;
      }
    }
    if (!found) lines.push_back({line, 2});
  }
  return lines;
}

// ---------------------------------------------------------------------------
// Recognition

/// Classifies a finite group of proper rotations.
inline ClassLabel recognize_so3(const ElementSet& set) {
  for (const auto& x : set)
    if (!x.proper()) throw RecognitionError("recognize_so3: improper element present");
  const int order = static_cast<int>(set.size());
  if (order == 1) return labels::trivial();
  const auto lines = axis_lines(set);
  if (lines.empty()) throw RecognitionError("recognize_so3: no rotation axes");
  int k = 0;
  for (const auto& l : lines) k = std::max(k, l.order);
  if (lines.size() == 1) {
    if (k != order) throw RecognitionError("recognize_so3: inconsistent cyclic group");
    return labels::cyclic(order);
  }
  if (order == 2 * k) return canonicalize(labels::dihedral(k));
  auto count = [&](int q) {
    int c = 0;
    for (const auto& l : lines) c += l.order == q ? 1 : 0;
    return c;
  };
  if (order == 12 && k == 3 && count(3) == 4 && count(2) == 3) return labels::tetrahedral();
  if (order == 24 && k == 4 && count(4) == 3 && count(3) == 4 && count(2) == 6)
    return labels::octahedral();
  if (order == 60 && k == 5 && count(5) == 6 && count(3) == 10 && count(2) == 15)
    return labels::icosahedral();
  throw RecognitionError("recognize_so3: unclassifiable group of order " +
                         std::to_string(order));
}

/// Classifies a finite closed subgroup of O(3) by its Gamma_+/Gamma_- split.
inline ClassLabel recognize(const ElementSet& set) {
  if (!set.is_group()) throw RecognitionError("recognize: set is not closed");
  std::vector<RotationElement> plus, minus;
  for (const auto& x : set) (x.proper() ? plus : minus).push_back(x);
  const ElementSet proper(plus);
  if (minus.empty()) return recognize_so3(proper);
  if (plus.size() != minus.size())
    throw RecognitionError("recognize: |Gamma_+| != |Gamma_-|");
  const bool has_minus_identity = [&] {
    for (const auto& x : minus)
      if (x.approx_equal(RotationElement::minus_identity())) return true;
    return false;
  }();
  if (has_minus_identity) return labels::with_center(recognize_so3(proper));

  std::vector<RotationElement> tilde = plus;
  for (const auto& x : minus) tilde.push_back(-x);
  const ClassLabel big = recognize_so3(ElementSet(std::move(tilde)));
  const ClassLabel small = recognize_so3(proper);
  const int small_order = static_cast<int>(plus.size());

  // (Z_{2n}, Z_n), (D_n, Z_n), (D_{2n}, D_n), (O, T)
  if (big.family == Family::Cyclic && big.n == 2 * small_order)
    return labels::cyclic_minus(small_order);
  if (big.family == Family::Dihedral) {
    if (small.family == Family::Cyclic || small.family == Family::Trivial)
      return canonicalize(labels::dihedral_z(big.n));
    if (small.family == Family::Dihedral && big.n == 2 * small.n)
      return canonicalize(labels::dihedral_d(small.n));
  }
  // D_2 = D_2^z and D_1 = Z_2 appear with Cyclic(2) as the small group.
  if (big.family == Family::Cyclic && big.n == 2 && small.family == Family::Trivial)
    return labels::cyclic_minus(1);
  if (big.family == Family::Octahedral && small.family == Family::Tetrahedral)
    return labels::octahedral_minus();
  throw RecognitionError("recognize: pair (" + format_label(big) + ", " +
                         format_label(small) + ") is not a type III construction");
}

// ---------------------------------------------------------------------------
// Infinite axial groups as membership predicates

/// A conjugate of SO(2), O(2), O(2)^- or their type II companions, given
/// by its primary axis, or SO(3)/O(3).
class InfiniteGroup {
public:
  InfiniteGroup(const ClassLabel& raw, const Vec3& axis)
      : label_(canonicalize(raw)), axis_(normalized(axis)) {
    if (label_.finite()) throw std::invalid_argument("InfiniteGroup needs an infinite class");
  }

  const ClassLabel& label() const { return label_; }
  const Vec3& axis() const { return axis_; }

  bool contains(const RotationElement& x) const {
    const AxisAngle aa = axis_angle(x);
    const bool improper = aa.determinant == -1;
    if (label_.family == Family::SO3) return label_.central || !improper;
    const bool identity_part = aa.angle < 1e-7;
    const bool on_axis = identity_part || same_line(aa.axis, axis_);
    const bool perpendicular_half_turn =
        !identity_part && std::abs(aa.angle - std::numbers::pi) < 1e-7 &&
        std::abs(dot(aa.axis, axis_)) < 1e-7;
    switch (label_.family) {
      case Family::SO2:
        return (label_.central || !improper) && on_axis;
      case Family::O2:
        return (label_.central || !improper) && (on_axis || perpendicular_half_turn);
      case Family::O2Minus:
        return improper ? perpendicular_half_turn : on_axis;
      default:
        return false;
    }
  }

  ElementSet intersect(const ElementSet& finite) const {
    std::vector<RotationElement> out;
    for (const auto& x : finite)
      if (contains(x)) out.push_back(x);
    return ElementSet(std::move(out));
  }

private:
  ClassLabel label_;
  Vec3 axis_;
};

// ---------------------------------------------------------------------------
// Dump format

/// "# label=<label> order=<k>" followed by one element per line, nine
/// row-major entries with 17 significant digits.
inline std::string dump_elements(const ClassLabel& label, const ElementSet& set) {
  std::ostringstream out;
  out << "# label=" << format_label(label) << " order=" << set.size() << '\n';
  char buf[32];
  for (const auto& x : set) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double v = x.matrix()(i, j);
        if (v == 0.0) v = 0.0;  // no negative zero
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out << buf << (i == 2 && j == 2 ? '\n' : ' ');
      }
  }
  return out.str();
}

}  // namespace o3clips

#endif  // O3CLIPS_CONCRETE_GROUP_HPP_
