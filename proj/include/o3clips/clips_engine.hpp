// clips of conjugacy classes: reduction rules, closed-form tables for
// type II x type III, the oracle for finite pairs and fixed rules for pairs
// of axial infinite classes. Results are memoized per engine.

#ifndef O3CLIPS_CLIPS_ENGINE_HPP_
#define O3CLIPS_CLIPS_ENGINE_HPP_

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "class_label.hpp"
#include "clips_oracle.hpp"
#include "clips_tables.hpp"

namespace o3clips {

/// Outcome of the reduction rules for one pair.
struct Reduction {
  std::string rule;
  std::optional<ClassSet> result;  // set when the rules decide the pair outright
  ClassLabel lhs{}, rhs{};         // otherwise: clips(lhs, rhs) ...
  bool add_center = false;         // ... with every member lifted to H + Z2c
};

inline bool is_axial(const ClassLabel& l) {
  return l.family == Family::SO2 || l.family == Family::O2 || l.family == Family::O2Minus;
}

/// Applies the rewrite rules. Returns std::nullopt for base pairs: finite
/// or axial type I x type I and type III x type III.
inline std::optional<Reduction> clips_reduce(const ClassLabel& a_raw, const ClassLabel& b_raw) {
  ClassLabel a = canonicalize(a_raw);
  ClassLabel b = canonicalize(b_raw);
  if (a.family == Family::Trivial && !a.central) return Reduction{"1 x X", ClassSet{a}};
  if (b.family == Family::Trivial && !b.central) return Reduction{"X x 1", ClassSet{b}};
  if (a == labels::o3()) return Reduction{"O(3) x X", ClassSet{b}};
  if (b == labels::o3()) return Reduction{"X x O(3)", ClassSet{a}};
  if (a == labels::so3()) return Reduction{"SO(3) x X", ClassSet{proper_part(b)}};
  if (b == labels::so3()) return Reduction{"X x SO(3)", ClassSet{proper_part(a)}};

  if (static_cast<int>(a.kind()) > static_cast<int>(b.kind())) std::swap(a, b);
  const Kind ka = a.kind(), kb = b.kind();
  if (ka == Kind::TypeI && kb == Kind::TypeII) {
    Reduction r{"I x II -> I x inner"};
    r.lhs = a;
    r.rhs = inner_of(b);
    return r;
  }
  if (ka == Kind::TypeII && kb == Kind::TypeII) {
    Reduction r{"II x II -> (inner x inner) + Z2c"};
    r.lhs = inner_of(a);
    r.rhs = inner_of(b);
    r.add_center = true;
    return r;
  }
  if (ka == Kind::TypeI && kb == Kind::TypeIII) {
    Reduction r{"I x III -> I x Gamma_+"};
    r.lhs = a;
    r.rhs = proper_part(b);
    return r;
  }
  if (ka == Kind::TypeII && kb == Kind::TypeIII)
    return Reduction{"II x III table", clips_type2_type3(a, b)};
  return std::nullopt;
}

/// Pairs of axial classes (and the pairs of type II axial classes with
/// O(2)^-, which the intersection argument settles directly).
inline std::optional<ClassSet> clips_axial_pair(const ClassLabel& a_raw,
                                                const ClassLabel& b_raw) {
  using namespace labels;
  ClassLabel a = canonicalize(a_raw), b = canonicalize(b_raw);
  if (!is_axial(a) || !is_axial(b)) return std::nullopt;
  if (CanonicalLess{}(b, a)) std::swap(a, b);
  if (a.central && b.central) return std::nullopt;
  if (a == so2() && b == so2()) return ClassSet{trivial(), so2()};
  if (a == so2() && b == o2()) return ClassSet{trivial(), cyclic(2), so2()};
  if (a == o2() && b == o2()) return ClassSet{cyclic(2), dihedral(2), o2()};
  if (a == o2_minus() && b == o2_minus()) return ClassSet{cyclic_minus(1), o2_minus()};
  // SO(2)+Z2c(v) or O(2)+Z2c(v) against O(2)^-(u): v = u, v perpendicular
  // to u, or generic (where -R(u x v, pi) survives for O(2)+Z2c).
  if (a == with_center(so2()) && b == o2_minus())
    return ClassSet{trivial(), cyclic_minus(1), so2()};
  if (a == with_center(o2()) && b == o2_minus())
    return ClassSet{cyclic_minus(1), dihedral_z(2), o2_minus()};
  return std::nullopt;
}

/// Where type II x type III pairs come from.
enum class TypeTwoThreeSource : std::uint8_t {
  PrintedTables,  // the closed forms in clips_tables.hpp
  Oracle,         // matrix intersections, axial rules for infinite pairs
};

class ClipsEngine {
public:
  explicit ClipsEngine(TypeTwoThreeSource source = TypeTwoThreeSource::PrintedTables,
                       OracleOptions options = {})
      : source_(source), options_(options) {}

  TypeTwoThreeSource source() const { return source_; }

  ClassSet clips(const ClassLabel& a_raw, const ClassLabel& b_raw) {
    ClassLabel a = canonicalize(a_raw), b = canonicalize(b_raw);
    if (CanonicalLess{}(b, a)) std::swap(a, b);
    const auto key = std::make_pair(a, b);
    {
      std::lock_guard lock(mutex_);
      if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    ClassSet result = compute(a, b);
    std::lock_guard lock(mutex_);
    cache_.emplace(key, result);
    return result;
  }

  /// Union of clips over all member pairs.
  ClassSet clips_families(const ClassSet& f1, const ClassSet& f2) {
    ClassSet out;
    for (const auto& a : f1)
      for (const auto& b : f2) out.merge(clips(a, b));
    return out;
  }

  /// a <= b: some conjugate of a is a subgroup of b.
  bool class_leq(const ClassLabel& a, const ClassLabel& b) {
    return clips(a, b).contains(a);
  }

  std::size_t cache_size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
  }

private:
  ClassSet compute(const ClassLabel& a, const ClassLabel& b) {
    const bool mixed_two_three =
        (a.kind() == Kind::TypeII && b.kind() == Kind::TypeIII) ||
        (a.kind() == Kind::TypeIII && b.kind() == Kind::TypeII);
    if (mixed_two_three && source_ == TypeTwoThreeSource::Oracle &&
        a != labels::o3() && b != labels::o3())
      return base(a, b);
    if (auto r = clips_reduce(a, b)) {
      if (r->result) return *r->result;
      const ClassSet inner = clips(r->lhs, r->rhs);
      return r->add_center ? with_center(inner) : inner;
    }
    return base(a, b);
  }

  ClassSet base(const ClassLabel& a, const ClassLabel& b) {
    if (a.finite() && b.finite()) return clips_oracle(a, b, options_);
    if (a.finite() && is_axial(b)) return clips_oracle_axial(a, b);
    if (b.finite() && is_axial(a)) return clips_oracle_axial(b, a);
    if (auto r = clips_axial_pair(a, b)) return *r;
    throw std::logic_error("clips: no rule for " + format_label(a) + " x " + format_label(b));
  }

  TypeTwoThreeSource source_;
  OracleOptions options_;
  mutable std::mutex mutex_;
  struct PairLess {
    bool operator()(const std::pair<ClassLabel, ClassLabel>& x,
                    const std::pair<ClassLabel, ClassLabel>& y) const {
      const auto c = canonical_compare(x.first, y.first);
      if (c != 0) return c < 0;
      return canonical_compare(x.second, y.second) < 0;
    }
  };
  std::map<std::pair<ClassLabel, ClassLabel>, ClassSet, PairLess> cache_;
};

/// clips computed on matrices wherever one side is finite, without the
/// reduction rules or tables. Pairs of infinite classes use the
/// oracle-source engine.
inline ClassSet clips_direct_oracle(const ClassLabel& a_raw, const ClassLabel& b_raw,
                                    const OracleOptions& options = {}) {
  const ClassLabel a = canonicalize(a_raw), b = canonicalize(b_raw);
  if (a.finite() && b.finite()) return clips_oracle(a, b, options);
  if (a.finite()) return clips_oracle_axial(a, b);
  if (b.finite()) return clips_oracle_axial(b, a);
  ClipsEngine engine(TypeTwoThreeSource::Oracle, options);
  return engine.clips(a, b);
}

}  // namespace o3clips

#endif  // O3CLIPS_CLIPS_ENGINE_HPP_
