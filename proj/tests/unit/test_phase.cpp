#include <gtest/gtest.h>

#include "rotarr/phase.hpp"

using namespace rotarr;

namespace {

VectorF complex_point(unsigned L, const CycNum& x, const CycNum& y) {
  auto [xr, xi] = real_imag_parts(x);
  auto [yr, yi] = real_imag_parts(y);
  return {xr, xi, yr, yi};
}

}  // namespace

TEST(Phase, UnitRatioIsItsOwnPhase) {
  const unsigned L = 12;
  const PhaseValue p = phase_ratio(complex_point(L, CycNum(L, 1L), zeta_power(L, 4)));
  ASSERT_TRUE(p.defined());
  EXPECT_TRUE(same_value(*p.ratio, zeta_power(3, 1)));
  EXPECT_TRUE(p.norm2->is_one());
}

TEST(Phase, UndefinedOnCoordinatePlanes) {
  const unsigned L = 4;
  EXPECT_FALSE(phase_ratio(complex_point(L, CycNum(L), CycNum(L, 1L))).defined());
  EXPECT_FALSE(phase_ratio(complex_point(L, CycNum(L, 1L), CycNum(L))).defined());
  const PhaseValue none;
  EXPECT_FALSE(same_phase(none, none));
}

TEST(Phase, PositiveScalingsKeepThePhase) {
  const unsigned L = 20;
  const CycNum ys = CycNum(L, 2L) + zeta_power(L, 3);
  const PhaseValue ref = phase_ratio(complex_point(L, CycNum(L, 1L), ys));
  for (long a : {1L, 2L, 7L}) {
    for (long b : {1L, 3L, 5L}) {
      const PhaseValue p = phase_ratio(complex_point(L, CycNum(L, a), CycNum(L, b) * ys));
      EXPECT_TRUE(same_phase(p, ref));
    }
  }
}

TEST(Phase, OppositeSignsFlipThePhase) {
  const unsigned L = 20;
  const CycNum ys = CycNum(L, 2L) + zeta_power(L, 3);
  const PhaseValue ref = phase_ratio(complex_point(L, CycNum(L, 1L), ys));
  const PhaseValue flipped = phase_ratio(complex_point(L, CycNum(L, -1L), ys));
  EXPECT_FALSE(same_phase(flipped, ref));
  EXPECT_TRUE(same_phase_up_to_sign(flipped, ref));
  const PhaseValue other = phase_ratio(complex_point(L, CycNum(L, 1L), zeta_power(L, 1)));
  EXPECT_FALSE(same_phase_up_to_sign(other, ref));
}

TEST(Phase, AcrossConductors) {
  EXPECT_TRUE(same_phase(zeta_power(3, 1), CycNum(12, 5L) * zeta_power(12, 4)));
  EXPECT_FALSE(same_phase(CycNum(1, 1L), CycNum(1, -1L)));
  EXPECT_THROW(same_phase(CycNum(1), CycNum(1, 1L)), ArithmeticError);
}
