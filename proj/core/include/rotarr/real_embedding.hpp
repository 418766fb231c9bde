#pragma once

// Rigorous sign decisions for real cyclotomic numbers.
//
// Q(zeta_L) is embedded in C by zeta_L -> e^{2 pi i / L}. For an element fixed
// by complex conjugation the image is real; its sign is decided by evaluating
// rational enclosures of cos(2 pi j / L) at increasing precision until the
// enclosure excludes zero. Exact zero is detected up front, so refinement
// always terminates.

#include <complex>

#include "rotarr/cyclo.hpp"

namespace rotarr {

struct RationalInterval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

// Encloses pi with width at most 2^-bits.
RationalInterval pi_enclosure(unsigned bits);

// Encloses the real part of the embedded value with width roughly 2^-bits
// times the coefficient mass.
RationalInterval real_part_enclosure(const CycNum& a, unsigned bits);

// -1, 0 or +1. Throws std::invalid_argument when a is not real.
int real_sign(const CycNum& a);

// Floating-point image, for display only.
std::complex<double> approximate(const CycNum& a);

}  // namespace rotarr
