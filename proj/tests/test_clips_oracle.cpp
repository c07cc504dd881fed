#include <gtest/gtest.h>

#include <string>

#include "o3clips/clips_engine.hpp"
#include "o3clips/clips_oracle.hpp"

using namespace o3clips;
using namespace o3clips::labels;

namespace {

ClassSet parse_set(const std::string& text) {
  ClassSet s;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find(' ', start);
    if (end == std::string::npos) end = text.size();
    s.insert(parse_label(text.substr(start, end - start)));
    start = end + 1;
  }
  return s;
}

ClassSet oracle(const char* a, const char* b) {
  return clips_direct_oracle(parse_label(a), parse_label(b));
}

}  // namespace

TEST(ClipsOracle, SharedAxisOnly) {
  EXPECT_EQ(oracle("Z2", "Z2"), parse_set("1 Z2"));
  EXPECT_EQ(oracle("Z3", "Z4"), parse_set("1"));
}

// Values computed by the oracle and checked by hand against the axis
// geometry: a D2 frame fixes its tetrahedron, so T o T has no lone D2 while
// the two icosahedra through one tetrahedron meet in T.
TEST(ClipsOracle, PolyhedralPairs) {
  EXPECT_EQ(oracle("T", "T"), parse_set("1 Z2 Z3 T"));
  EXPECT_EQ(oracle("O", "O"), parse_set("1 Z2 Z3 Z4 D2 D3 D4 O"));
  EXPECT_EQ(oracle("I", "I"), parse_set("1 Z2 Z3 Z5 D3 D5 T I"));
  EXPECT_EQ(oracle("T", "O"), parse_set("1 Z2 Z3 D2 T"));
  EXPECT_EQ(oracle("I", "O"), parse_set("1 Z2 Z3 D2 D3 T"));
}

TEST(ClipsOracle, DihedralPairs) {
  EXPECT_EQ(oracle("D2", "D2"), parse_set("1 Z2 D2"));
  EXPECT_EQ(oracle("D3", "D3"), parse_set("1 Z2 Z3 D3"));
  EXPECT_EQ(oracle("D4", "D6"), parse_set("1 Z2 D2"));
}

TEST(ClipsOracle, TypeThreePairs) {
  EXPECT_EQ(oracle("Z4^-", "Z4+Z2c"), parse_set("1 Z4^-"));
  EXPECT_EQ(oracle("O^-", "O^-"), parse_set("1 Z2^- Z3 Z4^- D3^z O^-"));
  EXPECT_EQ(oracle("D4^d", "D4^d"), parse_set("1 Z2 Z2^- Z4^- D2 D4^d"));
}

TEST(ClipsOracle, AxialPredicate) {
  EXPECT_EQ(oracle("O(2)", "D3"), parse_set("1 Z2 D3"));
  EXPECT_EQ(oracle("SO(2)", "O"), parse_set("1 Z2 Z3 Z4"));
  EXPECT_EQ(oracle("O(2)^-", "D4^d"), parse_set("1 Z2 Z2^- D2^z"));
  EXPECT_EQ(oracle("SO(3)", "D4^d"), parse_set("D2"));
  EXPECT_EQ(oracle("O(3)", "D4^d"), parse_set("D4^d"));
}

TEST(ClipsOracle, SelfMembershipAndSymmetry) {
  for (const char* name : {"Z5", "D4", "T", "Z6^-", "D3^z", "D6^d", "O^-", "D2+Z2c"}) {
    const ClassLabel l = parse_label(name);
    EXPECT_TRUE(clips_oracle(l, l).contains(l)) << name;
  }
  for (auto [a, b] : {std::pair{"D4^z", "O"}, std::pair{"D6^d", "T+Z2c"},
                      std::pair{"Z8^-", "D4"}, std::pair{"I", "D5^z"}})
    EXPECT_EQ(oracle(a, b), oracle(b, a)) << a << " " << b;
}

TEST(ClipsOracle, SeedDoesNotChangeResult) {
  OracleOptions a, b;
  b.seed = 987654321;
  for (auto [x, y] : {std::pair{"O", "D4^d"}, std::pair{"I+Z2c", "O^-"}, std::pair{"D6", "D8^z"}})
    EXPECT_EQ(clips_oracle(parse_label(x), parse_label(y), a),
              clips_oracle(parse_label(x), parse_label(y), b));
}

TEST(ClipsOracle, OrbitRepresentatives) {
  const ElementSet o = materialize(octahedral());
  const auto reps = detail::orbit_representatives(detail::line_list(o), o);
  EXPECT_EQ(reps.size(), 3u);
  const ElementSet i = materialize(icosahedral());
  EXPECT_EQ(detail::orbit_representatives(detail::line_list(i), i).size(), 3u);
}
