#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "o3clips/piezo.hpp"

using namespace o3clips;
using namespace o3clips::labels;

namespace {

ClassSet parse_set(const std::string& text) {
  ClassSet s;
  std::istringstream in(text);
  std::string name;
  while (in >> name) s.insert(parse_label(name));
  return s;
}

ClassSet read_fixture(const std::string& name) {
  std::ifstream in(std::string(O3CLIPS_FIXTURE_DIR) + "/" + name);
  EXPECT_TRUE(in) << name;
  ClassSet s;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') s.insert(parse_label(line));
  return s;
}

// Engine output, identical for both sources: the published 25 classes plus
// 1+Z2c, which II x II pairs such as D2+Z2c o D2+Z2c produce directly.
const char* kComputed =
    "1 Z2 Z2^- 1+Z2c Z3 Z4 Z4^- D2 D2^z Z2+Z2c D3 D3^z D4 D4^z D4^d D2+Z2c D6^d "
    "D3+Z2c D4+Z2c O^- O+Z2c SO(2) O(2) O(2)+Z2c O(2)^- O(3)";

}  // namespace

TEST(Piezo, CatalogSizes) {
  EXPECT_EQ(builtin_isotropy(SpaceName::Ela).classes.size(), 8u);
  EXPECT_EQ(builtin_isotropy(SpaceName::Piez).classes.size(), 16u);
  EXPECT_EQ(builtin_isotropy(SpaceName::Sym).classes.size(), 3u);
}

TEST(Piezo, FixturesMatchBuiltins) {
  EXPECT_EQ(read_fixture("ela.txt"), builtin_isotropy(SpaceName::Ela).classes);
  EXPECT_EQ(read_fixture("piez.txt"), builtin_isotropy(SpaceName::Piez).classes);
  EXPECT_EQ(read_fixture("sym.txt"), builtin_isotropy(SpaceName::Sym).classes);
  EXPECT_EQ(read_fixture("piezlaw.txt"), builtin_isotropy(SpaceName::PiezLaw).classes);
}

TEST(Piezo, PrintedListCollapsesToTwentyFive) {
  EXPECT_EQ(printed_piez_law_labels().size(), 26u);
  EXPECT_EQ(builtin_isotropy(SpaceName::PiezLaw).classes.size(), 25u);
}

TEST(Piezo, SpaceNames) {
  for (auto s : {SpaceName::Ela, SpaceName::Piez, SpaceName::Sym, SpaceName::PiezLaw})
    EXPECT_EQ(parse_space_name(space_name_string(s)), s);
  EXPECT_THROW(parse_space_name("Foo"), std::invalid_argument);
}

TEST(Piezo, ComputedLawClasses) {
  ClipsEngine engine;
  const ClassSet computed = compute_piez(engine).classes;
  EXPECT_EQ(computed, parse_set(kComputed));
  const SetDiff diff = diff_sets(computed, builtin_isotropy(SpaceName::PiezLaw).classes);
  EXPECT_TRUE(diff.missing.empty());
  EXPECT_EQ(diff.extra, parse_set("1+Z2c"));
  EXPECT_FALSE(explain_extras(engine, diff.extra).empty());
}

TEST(Piezo, OracleSourceGivesSameLaw) {
  ClipsEngine engine(TypeTwoThreeSource::Oracle);
  EXPECT_EQ(compute_piez(engine).classes, parse_set(kComputed));
}

TEST(Piezo, FoldOrderDoesNotMatter) {
  ClipsEngine engine;
  const auto e = builtin_isotropy(SpaceName::Ela), p = builtin_isotropy(SpaceName::Piez),
             s = builtin_isotropy(SpaceName::Sym);
  const ClassSet a = isotropy_direct_sum(engine, {e, p, s});
  EXPECT_EQ(isotropy_direct_sum(engine, {s, e, p}), a);
  EXPECT_EQ(isotropy_direct_sum(engine, {p, s, e}), a);
  EXPECT_THROW(isotropy_direct_sum(engine, {}), std::invalid_argument);
}

TEST(Piezo, LeastAndGreatestClasses) {
  ClipsEngine engine;
  const ClassSet computed = compute_piez(engine).classes;
  for (const auto& c : computed) {
    EXPECT_TRUE(engine.class_leq(trivial(), c)) << format_label(c);
    EXPECT_TRUE(engine.class_leq(c, o3())) << format_label(c);
  }
}

TEST(Piezo, CorruptedReferenceDiff) {
  ClipsEngine engine;
  const SetDiff diff =
      diff_sets(compute_piez(engine).classes, read_fixture("piezlaw_corrupted.txt"));
  EXPECT_EQ(diff.missing, parse_set("D5"));
  EXPECT_EQ(diff.extra, parse_set("1+Z2c O^-"));
}
