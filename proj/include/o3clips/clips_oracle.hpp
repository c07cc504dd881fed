// Brute-force clips: intersect a materialized group with conjugates of a
// second one and classify every intersection that appears.
//
// Conjugators are not sampled from a grid. If the intersection K of G1 and
// g G2 g^-1 has two distinct axis lines, g maps two catalogued lines of G2
// onto two catalogued lines of G1 and is fixed by that frame up to signs.
// If K has one line, a generic turn about that line after alignment
// produces exactly K. K with no lines shows up under random conjugators.

#ifndef O3CLIPS_CLIPS_ORACLE_HPP_
#define O3CLIPS_CLIPS_ORACLE_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "class_label.hpp"
#include "concrete_group.hpp"

namespace o3clips {

struct OracleOptions {
  std::uint64_t seed = 0x5eed;
  int random_conjugators = 64;
};

namespace detail {

/// One representative line per orbit of the group acting on its own lines.
inline std::vector<Vec3> orbit_representatives(const std::vector<Vec3>& lines,
                                               const ElementSet& group) {
  std::vector<Vec3> reps;
  std::vector<bool> seen(lines.size(), false);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(lines[i]);
    for (const auto& x : group) {
      const Vec3 image = x.matrix() * lines[i];
      for (std::size_t j = 0; j < lines.size(); ++j)
        if (!seen[j] && same_line(image, lines[j])) seen[j] = true;
    }
  }
  return reps;
}

inline std::vector<Vec3> line_list(const ElementSet& g) {
  std::vector<Vec3> out;
  for (const auto& l : axis_lines(g)) out.push_back(l.axis);
  return out;
}

inline RotationElement random_rotation(std::mt19937_64& rng) {
  // Uniform unit quaternion.
  std::normal_distribution<double> normal;
  double q[4];
  double s = 0.0;
  do {
    s = 0.0;
    for (double& c : q) {
      c = normal(rng);
      s += c * c;
    }
  } while (s < 1e-6);
  s = std::sqrt(s);
  for (double& c : q) c /= s;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  Mat3 r;
  r.m = {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
          {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
          {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
  return RotationElement(r);
}

/// Fast membership in a fixed finite group: trace and determinant filter
/// before the full comparison.
class GroupIndex {
public:
  explicit GroupIndex(const ElementSet& g) : group_(g) {
    for (const auto& x : g) traces_.push_back(x.matrix().trace());
  }

  bool contains(const RotationElement& x) const {
    const double t = x.matrix().trace();
    const auto& els = group_.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
      if (std::abs(traces_[i] - t) > 1e-7) continue;
      if (els[i].approx_equal(x)) return true;
    }
    return false;
  }

private:
  const ElementSet& group_;
  std::vector<double> traces_;
};

/// Classes of G1 cap g G2 g^-1 over the given conjugators.
class IntersectionCollector {
public:
  IntersectionCollector(const ElementSet& g1, const ElementSet& g2) : g1_(g1), index2_(g2) {}

  void add(const RotationElement& g) {
    // x in g G2 g^-1  <=>  g^-1 x g in G2
    const RotationElement gi = g.inverse();
    std::vector<RotationElement> k;
    for (const auto& x : g1_)
      if (index2_.contains(gi * x * g)) k.push_back(x);
    // Equal subgroups (same order, same members) are classified once.
    for (const auto& prior : seen_)
      if (prior.size() == k.size() && same_members(prior, k)) return;
    result_.insert(recognize(ElementSet(k)));
    seen_.push_back(std::move(k));
  }

  const ClassSet& result() const { return result_; }

private:
  static bool same_members(const std::vector<RotationElement>& a,
                           const std::vector<RotationElement>& b) {
    for (const auto& x : a) {
      bool found = false;
      for (const auto& y : b)
        if (x.approx_equal(y)) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    return true;
  }

  const ElementSet& g1_;
  GroupIndex index2_;
  std::vector<std::vector<RotationElement>> seen_;
  ClassSet result_;
};

// A fixed irrational turn; any angle that is not a rational multiple of pi
// with small denominator works.
inline constexpr double kGenericAngle = 0.7853981633974483 * 1.2360679774997896;

}  // namespace detail

/// clips of two finite classes, computed on explicit matrices.
inline ClassSet clips_oracle(const ClassLabel& a, const ClassLabel& b,
                             const OracleOptions& options = {}) {
  const ElementSet g1 = materialize(a);
  const ElementSet g2 = materialize(b);
  detail::IntersectionCollector collect(g1, g2);
  collect.add(RotationElement::identity());

  const auto lines1 = detail::line_list(g1);
  const auto lines2 = detail::line_list(g2);
  const auto reps1 = detail::orbit_representatives(lines1, g1);
  const auto reps2 = detail::orbit_representatives(lines2, g2);

  for (const auto& a2 : reps2) {
    for (const auto& b1 : reps1) {
      for (const Vec3& target : {b1, -b1}) {
        const RotationElement align = aligner(a2, target);
        collect.add(align);
        collect.add(rodrigues(target, detail::kGenericAngle) * align);
      }
      for (const auto& a2p : lines2) {
        if (same_line(a2p, a2)) continue;
        const double ca = dot(a2, a2p);
        for (const auto& b1p : lines1) {
          if (same_line(b1p, b1)) continue;
          const double cb = dot(b1, b1p);
          if (std::abs(std::abs(ca) - std::abs(cb)) > 1e-9) continue;
          for (int s1 : {1, -1})
            for (int s2 : {1, -1}) {
              const Vec3 t1 = static_cast<double>(s1) * b1;
              const Vec3 t2 = static_cast<double>(s2) * b1p;
              if (std::abs(dot(t1, t2) - ca) > 1e-9) continue;
              collect.add(frame_aligner(a2, a2p, t1, t2));
            }
        }
      }
    }
  }

  std::seed_seq seq{static_cast<std::uint64_t>(options.seed),
                    static_cast<std::uint64_t>(canonicalize(a).n) * 131u +
                        static_cast<std::uint64_t>(canonicalize(a).family),
                    static_cast<std::uint64_t>(canonicalize(b).n) * 131u +
                        static_cast<std::uint64_t>(canonicalize(b).family)};
  std::mt19937_64 rng(seq);
  for (int i = 0; i < options.random_conjugators; ++i)
    collect.add(detail::random_rotation(rng));
  return collect.result();
}

/// clips of a finite class with an axial infinite class (SO(2), O(2),
/// O(2)^- and their Z2c companions): intersect with the predicate group
/// for every candidate primary direction.
inline ClassSet clips_oracle_axial(const ClassLabel& finite, const ClassLabel& axial) {
  const ElementSet g = materialize(finite);
  const auto lines = detail::line_list(g);
  std::vector<Vec3> directions = lines;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      directions.push_back(normalized(cross(lines[i], lines[j])));
    // A perpendicular that is generic within the plane.
    const Vec3 helper = std::abs(lines[i][0]) < 0.9 ? e1 : e2;
    const Vec3 p = normalized(cross(lines[i], helper));
    directions.push_back(rodrigues(lines[i], detail::kGenericAngle).matrix() * p);
  }
  directions.push_back(normalized(Vec3{{0.3141592653589793, -0.2718281828459045, 0.9}}));

  ClassSet out;
  for (const auto& u : directions) {
    const InfiniteGroup h(axial, u);
    out.insert(recognize(h.intersect(g)));
  }
  return out;
}

}  // namespace o3clips

#endif  // O3CLIPS_CLIPS_ORACLE_HPP_
