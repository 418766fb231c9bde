#include <gtest/gtest.h>

#include <random>

#include "rotarr/cyclo.hpp"
#include "rotarr/modular.hpp"
#include "rotarr/real_embedding.hpp"

using namespace rotarr;

namespace {

CycNum random_element(std::mt19937_64& rng, unsigned L, int height = 5) {
  std::vector<Rational> c(euler_phi(L));
  for (auto& x : c) x = Rational(static_cast<long>(rng() % (2 * height + 1)) - height, static_cast<long>(rng() % 4) + 1);
  for (auto& x : c) x.canonicalize();
  return CycNum::from_coeffs(L, c);
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(-2, 4)), "-1/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Cyclotomic, PolynomialsOfSmallConductor) {
  // Phi_1 = x - 1, Phi_4 = x^2 + 1, Phi_5 = x^4 + x^3 + x^2 + x + 1, Phi_12 = x^4 - x^2 + 1
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<Integer>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<Integer>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(5), (std::vector<Integer>{1, 1, 1, 1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<Integer>{1, 0, -1, 0, 1}));
  EXPECT_EQ(euler_phi(20), 8u);
  EXPECT_EQ(lcm_conductor(4, 6), 12u);
}

TEST(Cyclotomic, RootOfUnityRelations) {
  const CycNum z = zeta_power(5, 1);
  CycNum sum(5);
  for (int j = 0; j < 5; ++j) sum += zeta_power(5, j);
  EXPECT_TRUE(sum.is_zero());
  CycNum p(5, 1L);
  for (int j = 0; j < 5; ++j) p *= z;
  EXPECT_TRUE(p.is_one());
  const CycNum i = imaginary_unit(4);
  EXPECT_EQ(i * i, CycNum(4, -1L));
  EXPECT_EQ(zeta_power(8, -1), zeta_power(8, 7));
}

TEST(Cyclotomic, InverseOracle) {
  const CycNum a = CycNum(5, 3L) + zeta_power(5, 1);
  EXPECT_TRUE((a * a.inv()).is_one());
  EXPECT_THROW(CycNum(7).inv(), ArithmeticError);
}

TEST(Cyclotomic, SqrtFiveAndSqrtThree) {
  const CycNum s5 = zeta_power(5, 1) - zeta_power(5, 2) - zeta_power(5, 3) + zeta_power(5, 4);
  EXPECT_EQ(s5 * s5, CycNum(5, 5L));
  const CycNum s3 = zeta_power(12, 1) + zeta_power(12, 11);
  EXPECT_EQ(s3 * s3, CycNum(12, 3L));
  EXPECT_EQ(real_sign(s5), 1);
  EXPECT_EQ(real_sign(-s3), -1);
}

TEST(Cyclotomic, EmbedDescendRoundTrip) {
  const CycNum z3 = zeta_power(3, 1);
  const CycNum e = embed(z3, 12);
  EXPECT_EQ(e, zeta_power(12, 4));
  auto back = descend(e, 3);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, z3);
  EXPECT_FALSE(descend(zeta_power(12, 1), 3));
  EXPECT_TRUE(same_value(z3, e));
  EXPECT_FALSE(same_value(z3, zeta_power(12, 1)));
}

TEST(Cyclotomic, ConjugationAndRealImagParts) {
  const CycNum z = zeta_power(8, 1);
  EXPECT_EQ(conj(z), zeta_power(8, 7));
  EXPECT_TRUE(is_real(z + conj(z)));
  EXPECT_FALSE(is_real(z));
  auto [re, im] = real_imag_parts(z);
  EXPECT_TRUE(is_real(re));
  EXPECT_TRUE(is_real(im));
  EXPECT_EQ(re + imaginary_unit(8) * im, z);
  EXPECT_EQ(re, im);  // cos(pi/4) = sin(pi/4)
}

TEST(Cyclotomic, BigCoefficientsPromote) {
  CycNum a(7, Rational(1L << 40, 3));
  CycNum b = a;
  for (int k = 0; k < 4; ++k) b = b * b;  // 2^640 / 3^16
  Rational expect = Rational(1L << 40, 3);
  Rational p = expect;
  for (int k = 0; k < 4; ++k) p = p * p;
  ASSERT_TRUE(b.as_rational());
  EXPECT_EQ(*b.as_rational(), p);
  EXPECT_EQ(b / b, CycNum(7, 1L));
}

TEST(CyclotomicProperty, FieldAxiomsOnSeededSamples) {
  std::mt19937_64 rng(11);
  for (unsigned L : {1u, 3u, 4u, 5u, 8u, 12u, 20u, 28u}) {
    for (int t = 0; t < 40; ++t) {
      const CycNum a = random_element(rng, L), b = random_element(rng, L), c = random_element(rng, L);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inv()).is_one());
      }
      EXPECT_EQ(conj(a * b), conj(a) * conj(b));
      EXPECT_EQ(CycNum(a).hash(), a.hash());
    }
  }
}

TEST(CyclotomicProperty, ModularImageIsAHomomorphism) {
  std::mt19937_64 rng(5);
  const ModularImage& img = ModularImage::for_conductor(60);
  EXPECT_EQ((img.prime() - 1) % 60, 0u);
  EXPECT_TRUE(is_prime_u64(img.prime()));
  for (unsigned L : {3u, 4u, 5u, 12u, 20u, 60u}) {
    for (int t = 0; t < 30; ++t) {
      const CycNum a = random_element(rng, L), b = random_element(rng, L);
      auto ia = img.evaluate(a), ib = img.evaluate(b), iab = img.evaluate(a * b), is = img.evaluate(a + b);
      if (!ia || !ib || !iab || !is) continue;
      EXPECT_EQ(img.mul(*ia, *ib), *iab);
      EXPECT_EQ(img.add(*ia, *ib), *is);
      EXPECT_EQ(img.evaluate(embed(a, 60)), ia);
    }
  }
}

TEST(CyclotomicProperty, RealSignMatchesFloatingPoint) {
  std::mt19937_64 rng(3);
  for (unsigned L : {5u, 7u, 12u, 20u}) {
    for (int t = 0; t < 30; ++t) {
      const CycNum a = random_element(rng, L);
      const CycNum r = a + conj(a);
      const double approx = approximate(r).real();
      const int s = real_sign(r);
      if (std::abs(approx) > 1e-9) EXPECT_EQ(s, approx > 0 ? 1 : -1);
      if (r.is_zero()) EXPECT_EQ(s, 0);
    }
  }
  EXPECT_THROW(real_sign(zeta_power(5, 1)), std::invalid_argument);
}
