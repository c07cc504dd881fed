#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "o3clips/clips_oracle.hpp"
#include "o3clips/concrete_group.hpp"

using namespace o3clips;
using namespace o3clips::labels;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<ClassLabel> finite_catalog(int max_param) {
  std::vector<ClassLabel> out{trivial(), tetrahedral(), octahedral(), icosahedral(),
                              octahedral_minus()};
  for (int n = 2; n <= max_param; ++n) {
    out.push_back(cyclic(n));
    out.push_back(dihedral(n));
    out.push_back(dihedral_z(n));
  }
  for (int n = 1; n <= max_param; ++n) out.push_back(cyclic_minus(n));
  for (int n = 2; n <= max_param; ++n) out.push_back(dihedral_d(n));
  const std::size_t type_one = out.size();
  for (std::size_t i = 0; i < type_one; ++i)
    if (out[i].kind() == Kind::TypeI) out.push_back(with_center(out[i]));
  return out;
}

}  // namespace

TEST(ConcreteGroup, OrdersMatchGeneratorTable) {
  for (const auto& l : finite_catalog(8)) {
    const ElementSet g = materialize(l);
    EXPECT_EQ(static_cast<int>(g.size()), *order_of(l)) << format_label(l);
  }
}

TEST(ConcreteGroup, ClosureAudit) {
  for (const auto& l : finite_catalog(6)) {
    const ElementSet g = materialize(l);
    EXPECT_TRUE(g.is_group()) << format_label(l);
    EXPECT_GT(g.min_separation(), 1e-3) << format_label(l);
  }
}

TEST(ConcreteGroup, GeneratorRouteEqualsCosetConstruction) {
  for (const auto& l : finite_catalog(8)) {
    const ElementSet a = materialize(l);
    const ElementSet b = close_group(reference_generators(l));
    ASSERT_EQ(a.size(), b.size()) << format_label(l);
    EXPECT_EQ(intersect(a, b).size(), a.size()) << format_label(l);
  }
}

TEST(ConcreteGroup, IcosahedralGeneratorUsesGoldenRatio) {
  const Vec3 axis{{1.0, 0.0, (1.0 + std::sqrt(5.0)) / 2.0}};
  const RotationElement r = rotation_about(axis, 2 * pi / 5);
  RotationElement p = r;
  for (int k = 1; k < 5; ++k) p = p * r;
  EXPECT_TRUE(p.approx_equal(RotationElement::identity()));
  EXPECT_EQ(materialize(icosahedral()).size(), 60u);
  // The misprinted (1 + sqrt 5)/5 does not close to a group of order 60.
  const Vec3 wrong{{1.0, 0.0, (1.0 + std::sqrt(5.0)) / 5.0}};
  EXPECT_THROW(close_group({rotation_about(e3, pi), rotation_about(Vec3{{1, 1, 1}}, 2 * pi / 3),
                            rotation_about(wrong, 2 * pi / 5)}),
               GroupOrderError);
}

TEST(ConcreteGroup, CyclicMinusFourElements) {
  // Z4^- = Z2 u -R(e3, pi/2) Z2
  const ElementSet g = materialize(cyclic_minus(2));
  ASSERT_EQ(g.size(), 4u);
  EXPECT_TRUE(g.contains(RotationElement::identity()));
  EXPECT_TRUE(g.contains(rodrigues(e3, pi)));
  EXPECT_TRUE(g.contains(-rodrigues(e3, pi / 2)));
  EXPECT_TRUE(g.contains(-rodrigues(e3, 3 * pi / 2)));
  EXPECT_FALSE(g.contains(RotationElement::minus_identity()));
}

TEST(ConcreteGroup, RecognitionRoundTripUnderRandomOrientations) {
  std::mt19937_64 rng(42);
  for (const auto& l : finite_catalog(7)) {
    for (int k = 0; k < 3; ++k) {
      const RotationElement g = detail::random_rotation(rng);
      EXPECT_EQ(recognize(materialize(l, g)), l) << format_label(l);
    }
  }
}

TEST(ConcreteGroup, RecognizeRejectsNonGroups) {
  ElementSet bad(std::vector<RotationElement>{RotationElement::identity(),
                                              -rodrigues(e3, pi / 3)});
  EXPECT_THROW(recognize(bad), RecognitionError);
}

TEST(ConcreteGroup, CatalogCoversEveryAxisLine) {
  for (const auto& l : finite_catalog(6)) {
    if (l.central) continue;
    const ElementSet g = materialize(l);
    const auto lines = axis_lines(g);
    const AxisCatalog catalog = axis_catalog(l);
    EXPECT_EQ(lines.size(), catalog.size()) << format_label(l);
    for (const auto& a : catalog.all()) {
      const RotationElement r = rodrigues(a.axis, 2 * pi / a.order);
      EXPECT_TRUE(g.contains(r) || g.contains(-r)) << format_label(l);
    }
  }
}

TEST(ConcreteGroup, IcosahedralCatalogCounts) {
  const AxisCatalog c = axis_catalog(icosahedral());
  EXPECT_EQ(c.primary_axes.size(), 6u);
  EXPECT_EQ(c.secondary_axes.size(), 10u);
  EXPECT_EQ(c.ternary_axes.size(), 15u);
  const ElementSet g = materialize(icosahedral());
  for (const auto& a : c.primary_axes) EXPECT_TRUE(g.contains(rodrigues(a.axis, 2 * pi / 5)));
}

TEST(ConcreteGroup, DihedralDSecondaryAxesAlternate) {
  const int n = 3;
  const ElementSet g = materialize(dihedral_d(n));
  const AxisCatalog c = axis_catalog(dihedral_d(n));
  ASSERT_EQ(c.secondary_axes.size(), static_cast<std::size_t>(2 * n));
  for (std::size_t k = 0; k < c.secondary_axes.size(); ++k) {
    const RotationElement r = rodrigues(c.secondary_axes[k].axis, pi);
    if (k % 2 == 0)
      EXPECT_TRUE(g.contains(r));
    else
      EXPECT_TRUE(g.contains(-r));
  }
}

TEST(ConcreteGroup, InfiniteLabelsAreRefused) {
  EXPECT_THROW(materialize(o2()), InfiniteClassError);
  EXPECT_THROW(axis_catalog(so2()), InfiniteClassError);
}

TEST(ConcreteGroup, AxialPredicates) {
  const InfiniteGroup so2_group(so2(), e3), o2_group(o2(), e3), o2m(o2_minus(), e3),
      o2c(with_center(o2()), e3);
  const RotationElement turn = rodrigues(e3, 0.37);
  const RotationElement flip = rodrigues(e1, pi);
  EXPECT_TRUE(so2_group.contains(turn));
  EXPECT_FALSE(so2_group.contains(flip));
  EXPECT_TRUE(o2_group.contains(flip));
  EXPECT_FALSE(o2_group.contains(-flip));
  EXPECT_TRUE(o2m.contains(-flip));
  EXPECT_FALSE(o2m.contains(flip));
  EXPECT_FALSE(o2m.contains(RotationElement::minus_identity()));
  EXPECT_TRUE(o2c.contains(RotationElement::minus_identity()));
  EXPECT_TRUE(o2c.contains(-turn));
  EXPECT_TRUE(InfiniteGroup(o3(), e1).contains(-turn));
  EXPECT_FALSE(InfiniteGroup(so3(), e1).contains(-turn));
}

TEST(ConcreteGroup, DumpFormat) {
  const std::string dump = dump_elements(cyclic_minus(1), materialize(cyclic_minus(1)));
  std::istringstream in(dump);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "# label=Z2^- order=2");
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    double v;
    int count = 0;
    while (row >> v) ++count;
    EXPECT_EQ(count, 9);
    ++lines;
  }
  EXPECT_EQ(lines, 2);
  EXPECT_EQ(dump.find("-0 "), std::string::npos);
}
