#include <gtest/gtest.h>

#include "rotarr/arrangements.hpp"
#include "rotarr/groups.hpp"

using namespace rotarr;

namespace {

MatrixF diag2(unsigned L, const CycNum& a, const CycNum& b) {
  return MatrixF(2, 2, std::vector<CycNum>{a, CycNum(L), CycNum(L), b});
}

}  // namespace

TEST(Groups, TrivialGroup) {
  const MatrixGroup g;
  EXPECT_EQ(g.order(), 1u);
  EXPECT_FALSE(is_rotation_group(g).generates);
  EXPECT_TRUE(is_reflection_group(g).generates);
}

TEST(Groups, RealifyConvention) {
  const unsigned L = 4;
  const MatrixF z(1, 1, std::vector<CycNum>{CycNum(L, 2L) + CycNum(L, 3L) * imaginary_unit(L)});
  const MatrixF r = realify(z);
  ASSERT_EQ(r.rows(), 2u);
  EXPECT_EQ(r(0, 0), CycNum(L, 2L));
  EXPECT_EQ(r(0, 1), CycNum(L, -3L));
  EXPECT_EQ(r(1, 0), CycNum(L, 3L));
  EXPECT_EQ(r(1, 1), CycNum(L, 2L));
}

TEST(Groups, GmpnOrders) {
  for (unsigned m = 1; m <= 8; ++m) EXPECT_EQ(realified_gm12(m).order(), 2u * m * m) << m;
  for (auto [m, p] : std::vector<std::pair<unsigned, unsigned>>{{4, 2}, {6, 3}, {6, 2}, {3, 3}}) {
    std::vector<MatrixF> gens;
    for (const auto& g : gmpn_generators(m, p, 2)) gens.push_back(realify(g));
    const MatrixGroup g = closure(4, lcm_conductor(4, m), gens);
    EXPECT_EQ(g.order(), 2u * m * m / p) << m << "," << p;
  }
}

TEST(Groups, ClosureCap) {
  EXPECT_THROW(realified_gm12(20, 100), GroupTooLarge);
}

TEST(Groups, ClassifyElements) {
  const unsigned L = 12;
  const CycNum one(L, 1L);
  EXPECT_EQ(classify(realify(diag2(L, one, one))).tag, ElementTag::identity);
  const MatrixF rot = realify(diag2(L, zeta_power(L, 4), one));
  EXPECT_EQ(classify(rot).tag, ElementTag::rotation);
  EXPECT_EQ(classify(rot).fix_codim, 2u);
  EXPECT_EQ(classify(realify(diag2(L, zeta_power(L, 4), zeta_power(L, 8)))).fix_codim, 4u);
  MatrixF refl = MatrixF::identity(4, 1);
  refl.set(0, 0, CycNum(1, -1L));
  EXPECT_EQ(classify(refl).tag, ElementTag::reflection);
  EXPECT_STREQ(to_string(ElementTag::bireflection_plus), "bireflection_plus");
}

TEST(Groups, IndexAndProducts) {
  const MatrixGroup g = realified_gm12(3);
  EXPECT_EQ(g.elements()[0], MatrixF::identity(4, g.conductor()));
  for (std::size_t a = 0; a < g.order(); a += 5) {
    for (std::size_t b = 0; b < g.order(); b += 3) {
      EXPECT_EQ(g.elements()[g.product_index(a, b)], g.elements()[a] * g.elements()[b]);
    }
  }
  EXPECT_EQ(g.index_of(g.elements()[7]), 7u);
  EXPECT_FALSE(g.index_of(MatrixF::identity(4, g.conductor()) + MatrixF::identity(4, g.conductor())));
}

TEST(Groups, RotationGroupCertificate) {
  for (unsigned m = 2; m <= 6; ++m) {
    const MatrixGroup g = realified_gm12(m);
    const auto cert = is_rotation_group(g);
    EXPECT_TRUE(cert.generates);
    EXPECT_FALSE(is_reflection_group(g).generates);
    const auto sub = generated_subgroup(g, cert.generators);
    EXPECT_EQ(sub.size(), g.order());
    for (std::size_t i : cert.generators) EXPECT_EQ(classify(g.elements()[i]).fix_codim, 2u);
    for (std::size_t i = 1; i < g.order(); ++i) {
      const auto c = g.fixed_spaces()[i].dim();
      EXPECT_TRUE(c == 2 || c == 0) << "element " << i;
    }
  }
}

TEST(Groups, OneDimensionalGm12IsGeneratedBySwap) {
  // G(1,1,2) = {1, swap}; the realified swap fixes {y = x}, a plane.
  const MatrixGroup g = realified_gm12(1);
  EXPECT_EQ(g.order(), 2u);
  EXPECT_TRUE(is_rotation_group(g).generates);
}

TEST(Groups, FixedSpacesOfSubsets) {
  const MatrixGroup g = realified_gm12(3);
  const unsigned L = g.conductor();
  const CycNum one(L, 1L);
  const auto a = g.index_of(realify(diag2(L, zeta_power(L, L / 3), one)));
  const auto b = g.index_of(realify(diag2(L, one, zeta_power(L, L / 3))));
  ASSERT_TRUE(a && b);
  EXPECT_TRUE(fixed_space_of_subset(g, {*a, *b}).is_zero());
  EXPECT_TRUE(fixed_space_of_subset(g, {0}).is_full());
  std::vector<std::size_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  EXPECT_TRUE(fixed_space_of_subset(g, all).is_zero());
  // Stabilizer of {y = x} is {1, swap}.
  EXPECT_EQ(pointwise_stabilizer(g, plane_y_zeta_x(3, 0)).size(), 2u);
  EXPECT_EQ(pointwise_stabilizer(g, Subspace::zero(4, L)).size(), g.order());
  EXPECT_EQ(pointwise_stabilizer(g, Subspace::full(4, L)).size(), 1u);
}
