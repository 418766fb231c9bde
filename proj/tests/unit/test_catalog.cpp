#include <gtest/gtest.h>

#include <set>

#include "rotarr/catalog.hpp"

using namespace rotarr;

namespace {

std::size_t reflections(const MatrixGroup& g) {
  std::size_t n = 0;
  for (const auto& f : g.fixed_spaces()) n += f.dim() + 1 == g.ambient() ? 1 : 0;
  return n;
}

}  // namespace

TEST(Catalog, OrdersAndReflectionCounts) {
  struct Row {
    const char* label;
    std::size_t order, refl;
  };
  for (const Row& r : {Row{"A1", 2, 1}, Row{"A2", 6, 3}, Row{"B2", 8, 4}, Row{"A3", 24, 6}, Row{"B3", 48, 9},
                       Row{"H3", 120, 15}, Row{"A4", 120, 10}, Row{"B4", 384, 16}, Row{"D4", 192, 12},
                       Row{"F4", 1152, 24}, Row{"H4", 14400, 60}}) {
    const MatrixGroup g = catalog_group(r.label);
    EXPECT_EQ(g.order(), r.order) << r.label;
    EXPECT_EQ(reflections(g), r.refl) << r.label;
    EXPECT_TRUE(is_reflection_group(g).generates) << r.label;
  }
  for (unsigned k = 2; k <= 12; ++k) {
    const MatrixGroup g = catalog_group("I2(" + std::to_string(k) + ")");
    EXPECT_EQ(g.order(), 2 * k);
    EXPECT_EQ(reflections(g), k);
  }
}

TEST(Catalog, LabelsRoundTrip) {
  for (const char* l : {"A4", "I2(7)xI2(12)", "H3x1", "B3xA1", "A1xA1x1x1", "I2(5)xA1x1"}) {
    EXPECT_EQ(format_label(parse_label(l)), l);
  }
  const auto f = parse_label("I2(7)xA1");
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(f[0].family, 'I');
  EXPECT_EQ(f[0].k, 7u);
  EXPECT_EQ(f[1].degree(), 1u);
  EXPECT_THROW(parse_label("Q7"), UnknownLabel);
  EXPECT_THROW(parse_label("I2(1)"), UnknownLabel);
  EXPECT_THROW(parse_label("A5"), UnknownLabel);
  EXPECT_THROW(parse_label(""), UnknownLabel);
}

TEST(Catalog, ProductsAndPadding) {
  const MatrixGroup g = catalog_group("B3x1");
  EXPECT_EQ(g.ambient(), 4u);
  EXPECT_EQ(g.order(), 48u);
  EXPECT_EQ(catalog_group("I2(3)xI2(5)").order(), 60u);
  EXPECT_EQ(catalog_group("A1xA1xA1xA1").order(), 16u);
  EXPECT_EQ(catalog_group("1x1x1x1").order(), 1u);
  const MatrixGroup d = direct_sum(catalog_group("A2"), catalog_group("A1"));
  EXPECT_EQ(d.ambient(), 3u);
  EXPECT_EQ(d.order(), 12u);
  EXPECT_EQ(embed_group(catalog_group("A2"), 24).conductor(), 24u);
  EXPECT_EQ(pad_trivial(catalog_group("H3"), 1).ambient(), 4u);
}

TEST(Catalog, EntriesAndEnumeration) {
  EXPECT_EQ(catalog_entry("H4").conductor_required, 5u);
  EXPECT_TRUE(catalog_entry("H3x1").big_factor);
  EXPECT_FALSE(catalog_entry("I2(5)xI2(5)").big_factor);
  EXPECT_EQ(big_factor_catalog().size(), 11u);
  for (unsigned k : {4u, 6u, 8u}) {
    const auto entries = enumerate_degree4_catalog(k);
    // 11 big-factor, pairs p <= q, three tails per I2(k), five A1/trivial products.
    const std::size_t n = k - 1;
    EXPECT_EQ(entries.size(), 11 + n * (n + 1) / 2 + 3 * n + 5);
    std::set<std::string> labels;
    for (const auto& e : entries) {
      EXPECT_EQ(e.degree, 4u);
      labels.insert(e.label);
    }
    EXPECT_EQ(labels.size(), entries.size());
  }
}

TEST(Catalog, GroupsAreShared) {
  const MatrixGroup a = catalog_group("F4");
  const MatrixGroup b = catalog_group("F4");
  EXPECT_EQ(&a.elements(), &b.elements());
}
