// Isotropy-class catalogs for elasticity, piezoelectricity and permittivity
// tensors, and their composition into the full piezoelectricity law.

#ifndef O3CLIPS_PIEZO_HPP_
#define O3CLIPS_PIEZO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "class_label.hpp"
#include "clips_engine.hpp"

namespace o3clips {

enum class SpaceName : std::uint8_t { Ela, Piez, Sym, PiezLaw };

struct IsotropyCatalog {
  SpaceName space_name;
  ClassSet classes;
};

inline std::string_view space_name_string(SpaceName s) {
  switch (s) {
    case SpaceName::Ela: return "Ela";
    case SpaceName::Piez: return "Piez";
    case SpaceName::Sym: return "Sym";
    case SpaceName::PiezLaw: return "PiezLaw";
  }
  return "?";
}

inline SpaceName parse_space_name(std::string_view s) {
  for (SpaceName n : {SpaceName::Ela, SpaceName::Piez, SpaceName::Sym, SpaceName::PiezLaw})
    if (space_name_string(n) == s) return n;
  throw std::invalid_argument("unknown tensor space '" + std::string(s) + "'");
}

namespace detail {

inline ClassSet parse_all(const std::vector<std::string_view>& names) {
  ClassSet out;
  for (auto n : names) out.insert(parse_label(n));
  return out;
}

}  // namespace detail

/// The labels of the 25-class list exactly as printed, D2^d included.
inline const std::vector<std::string_view>& printed_piez_law_labels() {
  static const std::vector<std::string_view> names{
      "1",     "Z2",     "Z3",     "Z4",     "D2",     "D3",     "D4",
      "SO(2)", "O(2)",   "O(3)",   "Z2+Z2c", "D2+Z2c", "D3+Z2c", "D4+Z2c",
      "O+Z2c", "O(2)+Z2c", "Z2^-", "Z4^-",   "D2^z",   "D3^z",   "D4^z",
      "D2^d",  "D4^d",   "D6^d",   "O^-",    "O(2)^-"};
  return names;
}

/// The published catalogs, canonicalized.
inline IsotropyCatalog builtin_isotropy(SpaceName space) {
  switch (space) {
    case SpaceName::Ela:
      return {space, detail::parse_all({"1", "Z2+Z2c", "D2+Z2c", "D3+Z2c", "D4+Z2c", "O+Z2c",
                                        "O(2)+Z2c", "O(3)"})};
    case SpaceName::Piez:
      return {space, detail::parse_all({"1", "Z2", "Z3", "D2^z", "D3^z", "Z2^-", "Z4^-", "D2",
                                        "D3", "D4^d", "D6^d", "SO(2)", "O(2)", "O(2)^-",
                                        "O^-", "O(3)"})};
    case SpaceName::Sym:
      return {space, detail::parse_all({"D2+Z2c", "O(2)+Z2c", "O(3)"})};
    case SpaceName::PiezLaw: {
      ClassSet s;
      for (auto n : printed_piez_law_labels()) s.insert(parse_label(n));
      return {space, s};
    }
  }
  throw std::invalid_argument("unknown tensor space");
}

/// Left fold of clips_families over the catalogs.
inline ClassSet isotropy_direct_sum(ClipsEngine& engine,
                                    const std::vector<IsotropyCatalog>& catalogs) {
  if (catalogs.empty()) throw std::invalid_argument("isotropy_direct_sum: no catalogs");
  ClassSet acc = catalogs.front().classes;
  for (std::size_t i = 1; i < catalogs.size(); ++i)
    acc = engine.clips_families(acc, catalogs[i].classes);
  return acc;
}

inline IsotropyCatalog compute_piez(ClipsEngine& engine) {
  return {SpaceName::PiezLaw,
          isotropy_direct_sum(engine, {builtin_isotropy(SpaceName::Ela),
                                       builtin_isotropy(SpaceName::Piez),
                                       builtin_isotropy(SpaceName::Sym)})};
}

/// Differences between a computed set and a reference set.
struct SetDiff {
  ClassSet missing;  // in reference, not computed
  ClassSet extra;    // computed, not in reference
  bool empty() const { return missing.empty() && extra.empty(); }
};

inline SetDiff diff_sets(const ClassSet& computed, const ClassSet& reference) {
  SetDiff d;
  for (const auto& c : reference)
    if (!computed.contains(c)) d.missing.insert(c);
  for (const auto& c : computed)
    if (!reference.contains(c)) d.extra.insert(c);
  return d;
}

/// For each extra class: the (Ela x Piez) member and Sym member pairs whose
/// clips produced it. One line per source pair.
inline std::vector<std::string> explain_extras(ClipsEngine& engine, const ClassSet& extra) {
  std::vector<std::string> lines;
  const auto ela = builtin_isotropy(SpaceName::Ela).classes;
  const auto piez = builtin_isotropy(SpaceName::Piez).classes;
  const auto sym = builtin_isotropy(SpaceName::Sym).classes;
  for (const auto& a : ela)
    for (const auto& b : piez)
      for (const auto& ab : engine.clips(a, b))
        for (const auto& c : sym)
          for (const auto& r : engine.clips(ab, c))
            if (extra.contains(r))
              lines.push_back(format_label(r) + " <- (" + format_label(a) + " o " +
                              format_label(b) + " -> " + format_label(ab) + ") o " +
                              format_label(c));
  return lines;
}

}  // namespace o3clips

#endif  // O3CLIPS_PIEZO_HPP_
