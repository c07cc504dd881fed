#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "o3clips/class_label.hpp"

using namespace o3clips;
using namespace o3clips::labels;

TEST(ClassLabel, ParseFormatRoundTrip) {
  const std::vector<std::string> texts{
      "1",     "Z2",    "Z7",     "D2",     "D9",       "T",        "O",     "I",
      "SO(2)", "O(2)",  "SO(3)",  "O(3)",   "Z2^-",     "Z6^-",     "D4^z",  "D5^z",
      "D4^d",  "D6^d",  "O^-",    "O(2)^-", "1+Z2c",    "Z2+Z2c",   "D3+Z2c", "O+Z2c",
      "I+Z2c", "SO(2)+Z2c", "O(2)+Z2c"};
  for (const auto& t : texts) {
    const ClassLabel l = parse_label(t);
    EXPECT_EQ(format_label(l), t) << t;
    EXPECT_EQ(parse_label(format_label(l)), l) << t;
  }
}

TEST(ClassLabel, CanonicalCollapses) {
  EXPECT_EQ(parse_label("Z1"), trivial());
  EXPECT_EQ(parse_label("D1"), cyclic(2));
  EXPECT_EQ(parse_label("D1^z"), cyclic_minus(1));
  EXPECT_EQ(parse_label("D2^d"), dihedral_z(2));
  EXPECT_EQ(parse_label("Z1^-"), trivial());
  EXPECT_EQ(canonicalize(dihedral_d(1)), dihedral_z(2));
  EXPECT_EQ(format_label(canonicalize(dihedral_d(3))), "D6^d");
  EXPECT_EQ(format_label(cyclic_minus(2)), "Z4^-");
}

TEST(ClassLabel, ParseErrorsCarryPosition) {
  try {
    parse_label("D3^q");
    FAIL();
  } catch (const LabelError& e) {
    EXPECT_EQ(e.position(), 2u);
  }
  try {
    parse_label("Z3^-");  // odd subscript
    FAIL();
  } catch (const LabelError& e) {
    EXPECT_EQ(e.position(), 0u);
  }
  EXPECT_THROW(parse_label(""), LabelError);
  EXPECT_THROW(parse_label("Z0"), LabelError);
  EXPECT_THROW(parse_label("O^-+Z2c"), LabelError);
  EXPECT_THROW(parse_label("SO(3)+Z2c"), LabelError);
  EXPECT_THROW(parse_label("D3^d"), LabelError);
  EXPECT_THROW(parse_label("Q"), LabelError);
  EXPECT_THROW(canonicalize(cyclic_minus(0)), LabelError);
  EXPECT_THROW(canonicalize(with_center(octahedral_minus())), LabelError);
}

TEST(ClassLabel, Orders) {
  EXPECT_EQ(order_of(trivial()), 1);
  EXPECT_EQ(order_of(cyclic(5)), 5);
  EXPECT_EQ(order_of(dihedral(5)), 10);
  EXPECT_EQ(order_of(tetrahedral()), 12);
  EXPECT_EQ(order_of(octahedral()), 24);
  EXPECT_EQ(order_of(icosahedral()), 60);
  EXPECT_EQ(order_of(cyclic_minus(3)), 6);
  EXPECT_EQ(order_of(dihedral_z(4)), 8);
  EXPECT_EQ(order_of(dihedral_d(3)), 12);
  EXPECT_EQ(order_of(octahedral_minus()), 24);
  EXPECT_EQ(order_of(with_center(icosahedral())), 120);
  EXPECT_FALSE(order_of(so2()).has_value());
  EXPECT_FALSE(order_of(o2_minus()).has_value());
  EXPECT_FALSE(order_of(o3()).has_value());
}

TEST(ClassLabel, KindsAndProperParts) {
  EXPECT_EQ(parse_label("D4").kind(), Kind::TypeI);
  EXPECT_EQ(parse_label("D4+Z2c").kind(), Kind::TypeII);
  EXPECT_EQ(parse_label("O(3)").kind(), Kind::TypeII);
  EXPECT_EQ(parse_label("D4^d").kind(), Kind::TypeIII);
  EXPECT_EQ(proper_part(parse_label("Z6^-")), cyclic(3));
  EXPECT_EQ(proper_part(parse_label("Z2^-")), trivial());
  EXPECT_EQ(proper_part(parse_label("D5^z")), cyclic(5));
  EXPECT_EQ(proper_part(parse_label("D8^d")), dihedral(4));
  EXPECT_EQ(proper_part(parse_label("D4^d")), dihedral(2));
  EXPECT_EQ(proper_part(parse_label("O^-")), tetrahedral());
  EXPECT_EQ(proper_part(parse_label("O(2)^-")), so2());
  EXPECT_EQ(proper_part(parse_label("O(3)")), so3());
  EXPECT_EQ(inner_of(parse_label("T+Z2c")), tetrahedral());
}

TEST(ClassLabel, OrderingIsByOrderThenFamily) {
  const ClassSet s{o3(), octahedral_minus(), cyclic(2), cyclic_minus(1), trivial(),
                   so2(), dihedral_z(2), cyclic_minus(2), dihedral(2)};
  EXPECT_EQ(format_set(s), "1 Z2 Z2^- Z4^- D2 D2^z O^- SO(2) O(3)");
}

TEST(ClassSet, DeduplicatesAfterCanonicalization) {
  ClassSet s;
  EXPECT_TRUE(s.insert(dihedral_z(2)));
  EXPECT_FALSE(s.insert(dihedral_d(1)));
  EXPECT_FALSE(s.insert(parse_label("D2^d")));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.contains(dihedral_d(1)));
  s.merge(ClassSet{trivial(), dihedral_z(2)});
  EXPECT_EQ(s.size(), 2u);
}

TEST(ClassSet, WithCenterLiftsMembers) {
  const ClassSet s{trivial(), cyclic(2), so3()};
  EXPECT_EQ(format_set(with_center(s)), "1+Z2c Z2+Z2c O(3)");
}

TEST(ClassLabel, SubscriptConstructors) {
  EXPECT_EQ(z_minus_sub(4), cyclic_minus(2));
  EXPECT_EQ(z_minus_sub(1), trivial());
  EXPECT_THROW(z_minus_sub(3), LabelError);
  EXPECT_EQ(dd_sub(2), dihedral_z(2));
  EXPECT_EQ(dd_sub(8), dihedral_d(4));
  EXPECT_EQ(dz_sub(1), cyclic_minus(1));
  EXPECT_EQ(d_sub(1), cyclic(2));
  EXPECT_EQ(z_sub(1), trivial());
}
